#ifndef QTLIFT_COHOCHSCHILD_HPP
#define QTLIFT_COHOCHSCHILD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qtlift/linalg.hpp"
#include "qtlift/liebialg.hpp"
#include "qtlift/polynomial.hpp"

namespace qtlift {

/// d f = Delta_0(f) - f (x) 1 - 1 (x) f with g primitive, on one leg of a cochain. The
/// leg is split into positions leg, leg+1; the result has one more leg.
TruncatedElement d_on_leg(const TruncatedElement& f, int leg);

/// d on a single-leg element without constant term.
TruncatedElement cohochschild_d(const TruncatedElement& f);

/// d2(f) = (d (x) id)(f) - (id (x) d)(f) for a two-leg cochain.
TruncatedElement d2(const TruncatedElement& f);

struct CohomologyDims {
    std::size_t h0 = 0;
    std::size_t h1 = 0;
    friend bool operator==(const CohomologyDims&, const CohomologyDims&) = default;
};

/// Dimensions of H^0 and H^1 in degree n of the reduced complex
/// S^+ -> S^+ (x) S^+ -> S^+ (x) S^+ (x) S^+ over a d-dimensional space, by exact ranks.
CohomologyDims cohomology_check(int dim, int n);

/// Same, for the underlying space of a Lie algebra whose Jacobi identity is checked first.
CohomologyDims cohomology_check(const Tensor3& bracket, int n);

/// Residuals of the compatibility conditions on a defect pair (alpha, beta). Each entry
/// is a named element; all must vanish for the correction step to apply.
struct CocycleResiduals {
    std::vector<std::pair<std::string, TruncatedElement>> entries;

    bool passed() const;
    std::optional<std::string> first_failure() const;
    std::string summary() const;
};

/// (id(x)id(x)d) alpha = (d(x)id(x)id) beta; (d2(x)id) alpha = (id(x)d2) beta = 0;
/// alpha symmetric in its first two legs, beta in its last two; all single-leg counits vanish.
CocycleResiduals cocycle_conditions(const TruncatedElement& alpha, const TruncatedElement& beta);

struct SigmaOptions {
    linalg::SolveOptions solver;
    /// Adds a pseudo-random kernel element to both intermediate solutions before they
    /// are recombined. The final answer must not change.
    std::optional<std::uint64_t> kernel_seed;
};

struct SigmaSolution {
    TruncatedElement sigma;
    TruncatedElement sigma_prime;         // (d(x)id) sigma' = -alpha
    TruncatedElement sigma_double_prime;  // (id(x)d) sigma'' = -beta
    TruncatedElement sigma_prime_0;       // part of sigma' - sigma'' in g (x) S^{n-1}
    TruncatedElement sigma_double_prime_0;
};

/// The unique degree-n two-leg sigma with (d(x)id) sigma = -alpha, (id(x)d) sigma = -beta
/// and vanishing counits. Throws CocycleConditionError if the conditions on (alpha, beta)
/// fail and PreconditionError for n < 3 or inputs of the wrong shape.
SigmaSolution solve_sigma_detailed(const TruncatedElement& alpha, const TruncatedElement& beta, int n,
                                   const SigmaOptions& opts = {});

inline TruncatedElement solve_sigma(const TruncatedElement& alpha, const TruncatedElement& beta, int n,
                                    const SigmaOptions& opts = {}) {
    return solve_sigma_detailed(alpha, beta, n, opts).sigma;
}

/// True if every single-leg counit of f vanishes, i.e. every term has positive degree on each leg.
bool counits_vanish(const TruncatedElement& f);

/// True if f is homogeneous of total degree n (zero counts as homogeneous).
bool is_homogeneous(const TruncatedElement& f, int n);

} // namespace qtlift

#endif

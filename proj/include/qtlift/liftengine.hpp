#ifndef QTLIFT_LIFTENGINE_HPP
#define QTLIFT_LIFTENGINE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "qtlift/axioms.hpp"
#include "qtlift/cohochschild.hpp"
#include "qtlift/formalgroup.hpp"

namespace qtlift {

/// Record of one correction step n -> n+1.
struct LiftStep {
    int n = 0;
    TruncatedElement section;  // rho~_n that entered the defects
    TruncatedElement alpha;
    TruncatedElement beta;
    TruncatedElement sigma;
    CocycleResiduals conditions;
};

/// rho_n: a two-leg element, correct modulo m^n, stored at the context truncation.
struct LiftState {
    int n = 0;
    TruncatedElement rho;
    std::vector<LiftStep> audit;
};

struct LiftOptions {
    bool keep_audit = true;
    /// Verify after each step that the cabling identities hold through degree n.
    bool check_steps = true;
    SigmaOptions sigma;
    /// If set, the section rho~_n gets a pseudo-random degree-n addition with vanishing
    /// counits. The resulting lift must not depend on it.
    std::optional<std::uint64_t> section_seed;
};

struct Defects {
    TruncatedElement alpha;
    TruncatedElement beta;
};

/// rho_3 = sum r_ij x_i (x) x_j. Runs the full validation gate unless `validate` is false;
/// throws ValidationError naming the first failing check.
LiftState initial_lift(const AlgebraContext& ctx, bool validate = true);

/// (Delta (x) id) s - s^{13} * s^{23} and (id (x) Delta) s - s^{13} * s^{12} modulo m^{n+1}
/// for a two-leg s in m (x) m.
Defects defects(const AlgebraContext& ctx, const TruncatedElement& section, int n);

/// The zero-padded section of rho_n, optionally perturbed in degree n.
TruncatedElement lift_section(const AlgebraContext& ctx, const LiftState& state, const LiftOptions& opts = {});

/// One step of the successive approximation: rho_{n+1} = rho~_n + sigma.
LiftState extend(const AlgebraContext& ctx, const LiftState& state, const LiftOptions& opts = {});

/// Iterates extend from rho_3 until rho is correct modulo m^{N+1}.
LiftState construct_lift_state(const AlgebraContext& ctx, const LiftOptions& opts = {}, bool validate = true);

inline TruncatedElement construct_lift(const AlgebraContext& ctx, const LiftOptions& opts = {}) {
    return construct_lift_state(ctx, opts).rho;
}

/// Lift axioms modulo m^{N+1}: counits, Delta^op = exp(V_rho) o Delta on every single-leg
/// basis monomial, both cabling identities and the degree-two part.
AxiomReport check_lift_axioms(const AlgebraContext& ctx, const TruncatedElement& rho);

/// rho^{12} * rho^{13} * rho^{23} - rho^{23} * rho^{13} * rho^{12}.
TruncatedElement qt_defect(const AlgebraContext& ctx, const TruncatedElement& rho);

/// rho^{12} * rho^{12,3} - rho^{21,3} * rho^{12} where rho^{12,3} = (Delta (x) id) rho.
TruncatedElement qt_identity_residual(const AlgebraContext& ctx, const TruncatedElement& rho);

/// Pseudo-random homogeneous degree-n two-leg element with vanishing counits.
TruncatedElement random_reduced_element(const AlgebraContext& ctx, int n, std::uint64_t seed, int legs = 2);

} // namespace qtlift

#endif

#ifndef QTLIFT_FORMALGROUP_HPP
#define QTLIFT_FORMALGROUP_HPP

#include <memory>
#include <vector>

#include "qtlift/liebialg.hpp"
#include "qtlift/polynomial.hpp"

namespace qtlift {

struct ContextOptions {
    /// Compare the CBH coproduct with the transpose of multiplication in U(g*)
    /// up to this degree (capped by N). Zero disables the check.
    int cross_check_degree = 4;
    /// Build the tables even if g* fails antisymmetry or Jacobi. Only meant for
    /// inspecting invalid input; the cross-check is skipped in this mode.
    bool unchecked_dual = false;
};

/// Truncated Hopf-Poisson algebra O_{G*} / m^{N+1} in exponential coordinates, with the
/// structure tables needed for any number of legs. Immutable after construction.
///
/// Coordinates x_1..x_d are the basis of g viewed as linear functions on g*. Elements
/// with k legs live in O_{(G*)^k}; leg indices are 0-based throughout.
class AlgebraContext {
public:
    /// Throws ValidationError if g* is not a Lie algebra, InternalError if the
    /// coproduct cross-check fails.
    AlgebraContext(const LieBialgebra& lb, int truncation, ContextOptions opts = {});

    const LieBialgebra& bialgebra() const noexcept { return lb_; }
    const DualLieAlgebra& dual() const noexcept { return dual_; }
    int dim() const noexcept { return lb_.dim(); }
    int truncation() const noexcept { return n_; }
    /// Highest degree at which the CBH coproduct was cross-checked (0 if skipped).
    int cross_checked_degree() const noexcept { return cross_checked_; }

    TruncatedElement zero(int legs) const;
    TruncatedElement one(int legs) const;
    TruncatedElement generator(int legs, int leg, int i) const;
    /// r = sum r_ij x_i (x) x_j as a two-leg element.
    TruncatedElement r_element() const;
    /// All monomials of degree <= cap in legs * dim variables, in increasing order.
    std::vector<Monomial> basis(int legs, int cap) const;
    std::vector<Monomial> basis_of_degree(int legs, int degree) const;

    TruncatedElement multiply(const TruncatedElement& f, const TruncatedElement& g) const;
    /// Leg-wise product Poisson bracket.
    TruncatedElement poisson(const TruncatedElement& f, const TruncatedElement& g) const;
    /// {x_i, x_j} on a single leg.
    const TruncatedElement& bivector(int i, int j) const;

    /// Delta applied on leg `leg`; the two new legs take positions leg, leg+1.
    TruncatedElement coproduct_on_leg(const TruncatedElement& f, int leg) const;
    TruncatedElement coproduct(const TruncatedElement& f) const { return coproduct_on_leg(f, 0); }
    /// Delta of a single-leg monomial.
    const TruncatedElement& coproduct_of(const Monomial& m) const;

    void check(const TruncatedElement& f) const;

private:
    void build_coproduct();
    void build_bivector();
    void cross_check(int degree);

    LieBialgebra lb_;
    DualLieAlgebra dual_;
    int n_;
    int cross_checked_ = 0;
    std::map<Monomial, TruncatedElement> coproduct_;
    std::vector<TruncatedElement> bivector_;  // d*d single-leg elements
};

/// Sets the exponents on leg `leg` to zero and removes the leg; terms with positive
/// exponents on that leg are dropped.
TruncatedElement counit_on_leg(const TruncatedElement& f, int leg);

/// Moves leg l of f to leg target[l] of an m-leg element (f^{i,j} notation, 0-based).
TruncatedElement insert(const TruncatedElement& f, const std::vector<int>& target, int m);

/// Permutes legs: result leg perm[l] receives leg l.
inline TruncatedElement permute_legs(const TruncatedElement& f, const std::vector<int>& perm) {
    return insert(f, perm, f.legs());
}

/// Exponents of one leg of a multi-leg monomial.
Monomial leg_part(const Monomial& m, int dim, int leg);

} // namespace qtlift

#endif

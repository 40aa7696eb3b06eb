#ifndef QTLIFT_BRAIDING_HPP
#define QTLIFT_BRAIDING_HPP

#include <optional>
#include <vector>

#include "qtlift/axioms.hpp"
#include "qtlift/cbh.hpp"
#include "qtlift/formalgroup.hpp"

namespace qtlift {

/// Degree-two part of (R - id) on one generator, split along
/// m^2/m^3 = S^2(g) + (g (x) g) + S^2(g).
struct SecondOrderBlocks {
    TruncatedElement left_square;   // both factors on leg 0
    TruncatedElement mixed;         // one factor on each leg
    TruncatedElement right_square;  // both factors on leg 1
};

/// R = exp(V_rho) on the two-leg algebra, with its second-order data.
struct BraidingOperator {
    TruncatedOperator op;
    /// Indexed by generator: 0..d-1 are x_i (x) 1, d..2d-1 are 1 (x) x_j.
    std::vector<SecondOrderBlocks> second_order;

    TruncatedElement operator()(const TruncatedElement& f) const { return op.apply(f); }
};

/// exp(V_rho). Requires a two-leg rho in m (x) m.
BraidingOperator braiding_from_lift(const AlgebraContext& ctx, const TruncatedElement& rho);

/// Wraps an arbitrary operator (e.g. the identity) so the axioms can be checked on it.
BraidingOperator braiding_from_operator(const AlgebraContext& ctx, TruncatedOperator op);

/// R applied on legs (i, j) of a three-leg element and trivially on the remaining leg.
TruncatedElement apply_on_legs(const TruncatedOperator& r, const TruncatedElement& f, int i, int j);

/// Counits, Delta^op = R o Delta, both cabling identities on the full two-leg basis,
/// identity on m/m^2 and the second-order blocks (0, [r, x(x)1 + 1(x)y], 0). Also records
/// the algebra-morphism and Poisson-morphism properties on generators.
AxiomReport check_braiding_axioms(const AlgebraContext& ctx, const BraidingOperator& r);

/// [r, x(x)1 + 1(x)y] for all basis pairs (x, y) = (e_i, e_j), computed via the second-order
/// expansion of the dressing map: <xi, [r_+(eta), x]> + <eta, [r_-(xi), y]> with
/// r_+(eta) = sum <b_k, eta> a_k and r_-(xi) = sum <a_k, xi> b_k for r = sum a_k (x) b_k.
/// Entry (i * d + j) holds the result as a matrix over e_k (x) e_l.
std::vector<SquareMatrix> wx_second_order(const LieBialgebra& lb);

/// The mixed block [R - id](x_i (x) 1 + 1 (x) x_j) as a matrix, for comparison with wx_second_order.
SquareMatrix mixed_block(const BraidingOperator& r, int i, int j);

struct BraidingDifference {
    TruncatedOperator s;
    /// Smallest k with S(m) not inside m^{k+1}; empty when S = 0.
    std::optional<int> leading_degree;
    /// Degree-k part of S on the generators of m.
    TruncatedOperator graded;
};

BraidingDifference braiding_difference(const AlgebraContext& ctx, const BraidingOperator& a, const BraidingOperator& b);

/// S(fg) - S(f)R'(g) - R'(f)S(g) - S(f)S(g) for S = R - R'.
TruncatedElement quasi_derivation_residual(const BraidingOperator& r, const BraidingOperator& r_prime,
                                           const TruncatedElement& f, const TruncatedElement& g);

} // namespace qtlift

#endif

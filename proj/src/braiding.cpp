#include "qtlift/braiding.hpp"

#include <map>

#include "qtlift/errors.hpp"

namespace qtlift {

namespace {

std::vector<SecondOrderBlocks> second_order_blocks(const AlgebraContext& ctx, const TruncatedOperator& op) {
    const int d = ctx.dim();
    std::vector<SecondOrderBlocks> out;
    for (int g = 0; g < 2 * d; ++g) {
        const TruncatedElement z = ctx.generator(2, g / d, g % d);
        const TruncatedElement deg2 = (op.apply(z) - z).graded_component(2);
        SecondOrderBlocks b{ctx.zero(2), ctx.zero(2), ctx.zero(2)};
        for (const auto& [m, c] : deg2.terms()) {
            const int left = leg_part(m, d, 0).degree();
            (left == 2 ? b.left_square : left == 1 ? b.mixed : b.right_square).add_term(m, c);
        }
        out.push_back(std::move(b));
    }
    return out;
}

// [r, x_i (x) 1] or [r, 1 (x) x_i] through the Lie bracket, as a two-leg element.
TruncatedElement bracket_with_r(const AlgebraContext& ctx, int leg, int i) {
    const LieBialgebra& lb = ctx.bialgebra();
    const int d = lb.dim();
    TruncatedElement out = ctx.zero(2);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            const Rational& r = lb.r()(a, b);
            if (sgn(r) == 0) continue;
            for (int k = 0; k < d; ++k) {
                Monomial m;
                if (leg == 0) {
                    m.set_exponent(k, 1);
                    m.set_exponent(d + b, 1);
                    out.add_term(m, r * lb.bracket()(a, i, k));
                } else {
                    m.set_exponent(a, 1);
                    m.set_exponent(d + k, 1);
                    out.add_term(m, r * lb.bracket()(b, i, k));
                }
            }
        }
    return out;
}

} // namespace

BraidingOperator braiding_from_operator(const AlgebraContext& ctx, TruncatedOperator op) {
    if (op.legs() != 2 || op.dim() != ctx.dim()) throw ContextMismatch("braiding must act on the two-leg algebra");
    BraidingOperator b;
    b.second_order = second_order_blocks(ctx, op);
    b.op = std::move(op);
    return b;
}

BraidingOperator braiding_from_lift(const AlgebraContext& ctx, const TruncatedElement& rho) {
    if (rho.legs() != 2) throw PreconditionError("a lift is a two-leg element");
    if (rho.is_zero()) return braiding_from_operator(ctx, TruncatedOperator::identity(ctx, 2));
    return braiding_from_operator(ctx, exp_operator(hamiltonian(ctx, rho)));
}

TruncatedElement apply_on_legs(const TruncatedOperator& r, const TruncatedElement& f, int i, int j) {
    if (f.legs() != 3 || r.legs() != 2) throw PreconditionError("apply_on_legs maps a two-leg operator onto three legs");
    if (i == j || i < 0 || j < 0 || i > 2 || j > 2) throw PreconditionError("invalid leg pair");
    const int d = f.dim();
    const int rest = 3 - i - j;
    // equivalent to conjugating R (x) id by the permutation taking legs (0,1,2) to (i,j,rest)
    TruncatedElement out(d, 3, std::min(f.cap(), r.cap()));
    std::map<Monomial, TruncatedElement> cache;
    for (const auto& [m, c] : f.terms()) {
        const Monomial u = leg_part(m, d, i) * leg_part(m, d, j).shifted(d);
        auto it = cache.find(u);
        if (it == cache.end()) it = cache.emplace(u, insert(r.column(u), {i, j}, 3)).first;
        const Monomial other = leg_part(m, d, rest).shifted(rest * d);
        out += it->second.times_monomial(other, c);
    }
    return out;
}

AxiomReport check_braiding_axioms(const AlgebraContext& ctx, const BraidingOperator& br) {
    const TruncatedOperator& r = br.op;
    const int d = ctx.dim(), n = ctx.truncation();
    const std::vector<Monomial> basis2 = ctx.basis(2, n);
    AxiomReport rep;

    std::vector<TruncatedElement> left, right;
    for (const Monomial& m : basis2) {
        const TruncatedElement b = TruncatedElement::monomial(d, 2, n, m);
        const TruncatedElement rb = r.apply(b);
        left.push_back(counit_on_leg(rb, 0) - counit_on_leg(b, 0));
        right.push_back(counit_on_leg(rb, 1) - counit_on_leg(b, 1));
    }
    rep.add("alpha_counit_left", std::move(left));
    rep.add("alpha_counit_right", std::move(right));

    std::vector<TruncatedElement> beta;
    for (const Monomial& m : ctx.basis(1, n)) {
        const TruncatedElement& dm = ctx.coproduct_of(m);
        beta.push_back(permute_legs(dm, {1, 0}) - r.apply(dm));
    }
    rep.add("beta_op_coproduct", std::move(beta));

    std::vector<TruncatedElement> gl, gr;
    for (const Monomial& m : basis2) {
        const TruncatedElement b = TruncatedElement::monomial(d, 2, n, m);
        const TruncatedElement rb = r.apply(b);
        gl.push_back(apply_on_legs(r, apply_on_legs(r, ctx.coproduct_on_leg(b, 0), 1, 2), 0, 2) -
                     ctx.coproduct_on_leg(rb, 0));
        gr.push_back(apply_on_legs(r, apply_on_legs(r, ctx.coproduct_on_leg(b, 1), 0, 1), 0, 2) -
                     ctx.coproduct_on_leg(rb, 1));
    }
    rep.add("gamma_left_cabling", std::move(gl));
    rep.add("gamma_right_cabling", std::move(gr));

    std::vector<TruncatedElement> linear, second;
    for (int g = 0; g < 2 * d; ++g) {
        const TruncatedElement z = ctx.generator(2, g / d, g % d);
        linear.push_back((r.apply(z) - z).graded_component(1) + (r.apply(z) - z).graded_component(0));
        const SecondOrderBlocks& b = br.second_order[static_cast<std::size_t>(g)];
        second.push_back(b.left_square);
        second.push_back(b.mixed - bracket_with_r(ctx, g / d, g % d));
        second.push_back(b.right_square);
    }
    rep.add("delta_identity_on_m_mod_m2", std::move(linear));
    rep.add("delta_second_order", std::move(second));

    // R(m x_v) = R(m) R(x_v) on the whole basis, and {R x, R y} = R{x, y} on generators
    std::vector<TruncatedElement> mult, pois;
    std::vector<TruncatedElement> gens;
    for (int g = 0; g < 2 * d; ++g) gens.push_back(r.apply(ctx.generator(2, g / d, g % d)));
    for (const Monomial& m : basis2) {
        if (m.degree() < 2) continue;
        int v = 0;
        while (m.exponent(v) == 0) ++v;
        Monomial rest = m;
        rest.set_exponent(v, m.exponent(v) - 1);
        mult.push_back(r.apply(TruncatedElement::monomial(d, 2, n, m)) -
                       r.apply(TruncatedElement::monomial(d, 2, n, rest)) * gens[static_cast<std::size_t>(v)]);
    }
    for (int a = 0; a < 2 * d; ++a)
        for (int b = a + 1; b < 2 * d; ++b) {
            const TruncatedElement pb = ctx.poisson(ctx.generator(2, a / d, a % d), ctx.generator(2, b / d, b % d));
            pois.push_back(r.apply(pb) - ctx.poisson(gens[static_cast<std::size_t>(a)], gens[static_cast<std::size_t>(b)]));
        }
    rep.add("algebra_morphism", std::move(mult));
    rep.add("poisson_morphism", std::move(pois));
    return rep;
}

std::vector<SquareMatrix> wx_second_order(const LieBialgebra& lb) {
    const int d = lb.dim();
    const Tensor3& c = lb.bracket();
    auto unit = [d](int i) {
        std::vector<Rational> v(static_cast<std::size_t>(d));
        v[static_cast<std::size_t>(i)] = 1;
        return v;
    };
    // r = sum_{a,b} r_ab e_a (x) e_b, read as sum_k a_k (x) b_k
    auto r_plus = [&](const std::vector<Rational>& eta) {
        std::vector<Rational> out(static_cast<std::size_t>(d));
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) out[static_cast<std::size_t>(a)] += lb.r()(a, b) * eta[static_cast<std::size_t>(b)];
        return out;
    };
    auto r_minus = [&](const std::vector<Rational>& xi) {
        std::vector<Rational> out(static_cast<std::size_t>(d));
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) out[static_cast<std::size_t>(b)] += lb.r()(a, b) * xi[static_cast<std::size_t>(a)];
        return out;
    };
    // <ad*(u)(xi), x> = <xi, [u, x]>
    auto coadjoint_pairing = [&](const std::vector<Rational>& xi, const std::vector<Rational>& u, int x) {
        Rational s;
        for (int a = 0; a < d; ++a) {
            if (sgn(u[static_cast<std::size_t>(a)]) == 0) continue;
            for (int k = 0; k < d; ++k) s += u[static_cast<std::size_t>(a)] * c(a, x, k) * xi[static_cast<std::size_t>(k)];
        }
        return s;
    };

    std::vector<SquareMatrix> out;
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y) {
            SquareMatrix m(d);
            // coefficient of e_k (x) e_l is the value on (xi, eta) = (e^k, e^l)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) {
                    const auto xi = unit(k), eta = unit(l);
                    m(k, l) = coadjoint_pairing(xi, r_plus(eta), x) + coadjoint_pairing(eta, r_minus(xi), y);
                }
            out.push_back(std::move(m));
        }
    return out;
}

SquareMatrix mixed_block(const BraidingOperator& r, int i, int j) {
    const int d = r.op.dim();
    const TruncatedElement sum = r.second_order[static_cast<std::size_t>(i)].mixed +
                                 r.second_order[static_cast<std::size_t>(d + j)].mixed;
    SquareMatrix m(d);
    for (const auto& [mono, c] : sum.terms()) {
        int k = 0, l = 0;
        while (mono.exponent(k) == 0) ++k;
        while (mono.exponent(d + l) == 0) ++l;
        m(k, l) = c;
    }
    return m;
}

BraidingDifference braiding_difference(const AlgebraContext& ctx, const BraidingOperator& a, const BraidingOperator& b) {
    if (a.op.dim() != b.op.dim() || a.op.legs() != b.op.legs() || a.op.cap() != b.op.cap())
        throw ContextMismatch("braidings over different truncations");
    BraidingDifference out;
    out.s = a.op - b.op;
    int k = kInfiniteDegree;
    for (const auto& [m, img] : out.s.columns())
        if (m.degree() >= 1 && !img.is_zero()) k = std::min(k, img.filtration_degree());
    out.graded = TruncatedOperator(ctx.dim(), 2, ctx.truncation(), 0);
    if (k != kInfiniteDegree) {
        out.leading_degree = k;
        for (const Monomial& m : ctx.basis_of_degree(2, 1)) out.graded.set_column(m, out.s.column(m).graded_component(k));
    }
    return out;
}

TruncatedElement quasi_derivation_residual(const BraidingOperator& r, const BraidingOperator& r_prime,
                                           const TruncatedElement& f, const TruncatedElement& g) {
    const TruncatedOperator s = r.op - r_prime.op;
    const TruncatedElement sf = s.apply(f), sg = s.apply(g);
    return s.apply(f * g) - sf * r_prime.op.apply(g) - r_prime.op.apply(f) * sg - sf * sg;
}

} // namespace qtlift

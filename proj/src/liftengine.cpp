#include "qtlift/liftengine.hpp"

#include <random>

#include "qtlift/cbh.hpp"
#include "qtlift/errors.hpp"

namespace qtlift {

LiftState initial_lift(const AlgebraContext& ctx, bool validate) {
    if (validate) {
        const ValidationReport rep = validate_quasitriangular(ctx.bialgebra());
        if (auto bad = rep.first_failure()) throw ValidationError("validation gate failed: " + *bad);
    }
    if (ctx.truncation() < 2) throw PreconditionError("lift needs truncation degree >= 2");
    LiftState s;
    s.n = 3;
    s.rho = ctx.r_element();
    return s;
}

Defects defects(const AlgebraContext& ctx, const TruncatedElement& section, int n) {
    ctx.check(section);
    if (section.legs() != 2) throw PreconditionError("lift section must be a two-leg element");
    if (!counits_vanish(section)) throw PreconditionError("lift section must lie in m (x) m");
    if (n > ctx.truncation()) throw PreconditionError("defect degree exceeds the truncation");
    const TruncatedElement s = section.truncated(n);
    const TruncatedElement s12 = insert(s, {0, 1}, 3);
    const TruncatedElement s13 = insert(s, {0, 2}, 3);
    const TruncatedElement s23 = insert(s, {1, 2}, 3);
    Defects out;
    out.alpha = ctx.coproduct_on_leg(s, 0) - star(ctx, s13, s23);
    out.beta = ctx.coproduct_on_leg(s, 1) - star(ctx, s13, s12);
    return out;
}

TruncatedElement random_reduced_element(const AlgebraContext& ctx, int n, std::uint64_t seed, int legs) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-4, 4);
    TruncatedElement t = ctx.zero(legs);
    for (const Monomial& m : ctx.basis_of_degree(legs, n)) {
        bool reduced = true;
        for (int l = 0; l < legs; ++l) reduced = reduced && leg_part(m, ctx.dim(), l).degree() > 0;
        if (reduced) t.add_term(m, ratio(coeff(rng), 1 + static_cast<long>(rng() % 3)));
    }
    return t;
}

TruncatedElement lift_section(const AlgebraContext& ctx, const LiftState& state, const LiftOptions& opts) {
    TruncatedElement s = state.rho.truncated(state.n - 1).truncated(ctx.truncation());
    if (opts.section_seed) s += random_reduced_element(ctx, state.n, *opts.section_seed + 7919U * state.n);
    return s;
}

LiftState extend(const AlgebraContext& ctx, const LiftState& state, const LiftOptions& opts) {
    const int n = state.n;
    if (n < 3) throw PreconditionError("extend starts at n = 3");
    if (n > ctx.truncation()) throw PreconditionError("lift already complete at this truncation");

    const TruncatedElement section = lift_section(ctx, state, opts);
    Defects df = defects(ctx, section, n);
    if (df.alpha.filtration_degree() < n || df.beta.filtration_degree() < n)
        throw InternalError("defects have components below degree " + std::to_string(n));
    df.alpha = df.alpha.graded_component(n);
    df.beta = df.beta.graded_component(n);

    const CocycleResiduals conds = cocycle_conditions(df.alpha, df.beta);
    if (!conds.passed())
        throw CocycleConditionError("defects at degree " + std::to_string(n) + " violate " + *conds.first_failure(),
                                    conds.summary());
    const TruncatedElement sigma = solve_sigma(df.alpha, df.beta, n, opts.sigma).truncated(ctx.truncation());

    LiftState next;
    next.n = n + 1;
    next.rho = section + sigma;
    next.audit = state.audit;
    if (opts.keep_audit) next.audit.push_back({n, section, df.alpha, df.beta, sigma, conds});

    if (!(next.rho.truncated(n - 1) == state.rho.truncated(n - 1)))
        throw InternalError("extend changed coefficients below degree " + std::to_string(n));
    if (opts.check_steps) {
        const Defects post = defects(ctx, next.rho, n);
        if (!post.alpha.is_zero() || !post.beta.is_zero())
            throw InternalError("corrected lift fails the cabling identities at degree " + std::to_string(n));
    }
    return next;
}

LiftState construct_lift_state(const AlgebraContext& ctx, const LiftOptions& opts, bool validate) {
    if (ctx.truncation() < 3) throw PreconditionError("construct_lift requires N >= 3");
    LiftState s = initial_lift(ctx, validate);
    while (s.n <= ctx.truncation()) s = extend(ctx, s, opts);
    return s;
}

AxiomReport check_lift_axioms(const AlgebraContext& ctx, const TruncatedElement& rho) {
    ctx.check(rho);
    if (rho.legs() != 2) throw PreconditionError("a lift is a two-leg element");
    const int n = ctx.truncation();
    AxiomReport rep;
    rep.add("alpha_counit_left", counit_on_leg(rho, 0));
    rep.add("alpha_counit_right", counit_on_leg(rho, 1));

    std::vector<TruncatedElement> beta;
    const bool in_m2 = rho.filtration_degree() >= 2;
    for (const Monomial& m : ctx.basis(1, n)) {
        const TruncatedElement& dm = ctx.coproduct_of(m);
        const TruncatedElement conj = in_m2 ? star_conjugate(ctx, rho, dm) : dm;
        beta.push_back(permute_legs(dm, {1, 0}) - conj);
    }
    rep.add("beta_op_coproduct", std::move(beta));

    if (in_m2) {
        const TruncatedElement r12 = insert(rho, {0, 1}, 3);
        const TruncatedElement r13 = insert(rho, {0, 2}, 3);
        const TruncatedElement r23 = insert(rho, {1, 2}, 3);
        rep.add("gamma_left_cabling", ctx.coproduct_on_leg(rho, 0) - star(ctx, r13, r23));
        rep.add("gamma_right_cabling", ctx.coproduct_on_leg(rho, 1) - star(ctx, r13, r12));
    } else {
        // star is undefined outside m^2; report the raw element as the residual
        rep.add("gamma_left_cabling", rho);
        rep.add("gamma_right_cabling", rho);
    }
    rep.add("delta_leading_term", rho.graded_component(2) - ctx.r_element());
    return rep;
}

TruncatedElement qt_defect(const AlgebraContext& ctx, const TruncatedElement& rho) {
    const TruncatedElement r12 = insert(rho, {0, 1}, 3);
    const TruncatedElement r13 = insert(rho, {0, 2}, 3);
    const TruncatedElement r23 = insert(rho, {1, 2}, 3);
    return star(ctx, star(ctx, r12, r13), r23) - star(ctx, star(ctx, r23, r13), r12);
}

TruncatedElement qt_identity_residual(const AlgebraContext& ctx, const TruncatedElement& rho) {
    const TruncatedElement r12 = insert(rho, {0, 1}, 3);
    const TruncatedElement r12_3 = ctx.coproduct_on_leg(rho, 0);
    const TruncatedElement r21_3 = permute_legs(r12_3, {1, 0, 2});
    return star(ctx, r12, r12_3) - star(ctx, r21_3, r12);
}

} // namespace qtlift

#include <gtest/gtest.h>

#include <random>

#include "qtlift/cbh.hpp"
#include "qtlift/liftengine.hpp"
#include "support.hpp"

using namespace qtlift;
using namespace qtlift::testing;

TEST(Lift, InitialLiftIsR) {
    const AlgebraContext ctx(sl2_standard(), 4);
    const LiftState s = initial_lift(ctx);
    EXPECT_EQ(s.n, 3);
    EXPECT_EQ(s.rho, ctx.r_element());
    EXPECT_THROW(initial_lift(AlgebraContext(sl2_h_e(), 3, {4, true})), ValidationError);
}

TEST(Lift, Sl2StandardSatisfiesAllAxioms) {
    const AlgebraContext ctx(sl2_standard(), 5);
    const LiftState s = construct_lift_state(ctx);
    EXPECT_EQ(s.n, 6);
    EXPECT_EQ(s.audit.size(), 3U);
    const AxiomReport rep = check_lift_axioms(ctx, s.rho);
    EXPECT_TRUE(rep.passed()) << *rep.first_failure();
    EXPECT_TRUE(qt_defect(ctx, s.rho).is_zero());
    EXPECT_TRUE(qt_identity_residual(ctx, s.rho).is_zero());
    EXPECT_TRUE(counits_vanish(s.rho));
    EXPECT_EQ(s.rho.graded_component(2), ctx.r_element());
    for (const LiftStep& step : s.audit) {
        EXPECT_TRUE(step.conditions.passed());
        EXPECT_TRUE(is_homogeneous(step.sigma, step.n));
    }
}

TEST(Lift, RAloneFailsFirstInDegreeFour) {
    // degree three of the cabling residual of r is (delta(x)id) r - [r13, r23], zero by CYBE
    const AlgebraContext ctx(sl2_standard(), 4);
    const TruncatedElement r = ctx.r_element();
    const Defects d3 = defects(ctx, r, 3);
    EXPECT_TRUE(d3.alpha.is_zero());
    EXPECT_TRUE(d3.beta.is_zero());
    const AxiomReport rep = check_lift_axioms(ctx, r);
    ASSERT_FALSE(rep.passed());
    const AxiomResidual* gamma = rep.find("gamma_left_cabling");
    ASSERT_NE(gamma, nullptr);
    EXPECT_FALSE(gamma->passed());
    for (const auto& res : gamma->residuals) EXPECT_TRUE(res.truncated(3).is_zero());
    const TruncatedElement rho = construct_lift(ctx);
    EXPECT_TRUE(rho.graded_component(3).is_zero());
    EXPECT_FALSE(rho.graded_component(4).is_zero());
    EXPECT_TRUE(check_lift_axioms(ctx, rho).passed());
}

TEST(Lift, DefectsMatchDirectFormula) {
    const AlgebraContext ctx(sl2_jordanian(), 4);
    LiftState s = extend(ctx, initial_lift(ctx));
    const TruncatedElement sec = lift_section(ctx, s);
    const Defects df = defects(ctx, sec, 4);
    const auto s13 = insert(sec, {0, 2}, 3), s23 = insert(sec, {1, 2}, 3), s12 = insert(sec, {0, 1}, 3);
    const auto alpha = (ctx.coproduct_on_leg(sec, 0) - star(ctx, s13, s23)).truncated(4);
    const auto beta = (ctx.coproduct_on_leg(sec, 1) - star(ctx, s13, s12)).truncated(4);
    EXPECT_EQ(df.alpha, alpha);
    EXPECT_EQ(df.beta, beta);
    EXPECT_TRUE(alpha.truncated(3).is_zero());
    EXPECT_TRUE(beta.truncated(3).is_zero());
}

TEST(Lift, IndependentOfSectionAndSolverChoices) {
    for (const LieBialgebra& lb : {sl2_standard(), b2_jordanian()}) {
        const AlgebraContext ctx(lb, 5);
        const TruncatedElement base = construct_lift(ctx);
        for (std::uint64_t seed : {1ULL, 5ULL, 123ULL}) {
            LiftOptions o;
            o.section_seed = seed;
            o.sigma.kernel_seed = seed * 3;
            o.sigma.solver = {true, seed % 2 == 1};
            EXPECT_EQ(construct_lift(ctx, o), base) << seed;
        }
    }
}

TEST(Lift, RandomBasesAndAlgebras) {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 4; ++t) {
        const LieBialgebra lb = random_quasitriangular(rng);
        const AlgebraContext ctx(lb, 4);
        const TruncatedElement rho = construct_lift(ctx);
        const AxiomReport rep = check_lift_axioms(ctx, rho);
        EXPECT_TRUE(rep.passed()) << *rep.first_failure();
        EXPECT_TRUE(qt_defect(ctx, rho).is_zero());
    }
}

TEST(Lift, AbelianDualKeepsR) {
    SquareMatrix r(2);
    r(0, 1) = 3;
    r(1, 1) = ratio(-1, 2);
    const AlgebraContext ctx(abelian(2, r), 6);
    EXPECT_EQ(construct_lift(ctx), ctx.r_element());
}

TEST(Lift, QtDefectLeadingTermIsCybe) {
    // for a non-solution the degree-three part of the defect of rho = r is the CYBE tensor
    const LieBialgebra lb = sl2_h_e();
    const AlgebraContext ctx(lb, 3, {0, true});
    const TruncatedElement psi = qt_defect(ctx, ctx.r_element());
    const Tensor3 t = cybe_residual(lb);
    TruncatedElement expected = ctx.zero(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                if (sgn(t(i, j, k)) != 0)
                    expected += ctx.generator(3, 0, i) * ctx.generator(3, 1, j) * ctx.generator(3, 2, k) * t(i, j, k);
    EXPECT_EQ(psi.graded_component(3), expected);
    EXPECT_FALSE(expected.is_zero());
    const AlgebraContext good(sl2_standard(), 3);
    EXPECT_TRUE(qt_defect(good, good.r_element()).graded_component(3).is_zero());
}

TEST(Lift, RandomReducedElementShape) {
    const AlgebraContext ctx(sl2_standard(), 5);
    const auto f = random_reduced_element(ctx, 4, 9);
    EXPECT_TRUE(is_homogeneous(f, 4));
    EXPECT_TRUE(counits_vanish(f));
    EXPECT_EQ(f, random_reduced_element(ctx, 4, 9));
    EXPECT_NE(f, random_reduced_element(ctx, 4, 10));
}

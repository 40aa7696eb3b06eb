#include <gtest/gtest.h>

#include <random>

#include "qtlift/cbh.hpp"
#include "support.hpp"

using namespace qtlift;
using namespace qtlift::testing;

namespace {

struct CbhFixture : ::testing::Test {
    AlgebraContext ctx{sl2_standard(), 4};
    std::mt19937_64 rng{99};
    TruncatedElement sample(int legs = 1, double density = 0.25) { return random_element(ctx, legs, 2, 4, rng, density); }
};

}  // namespace

TEST_F(CbhFixture, UnitAndInverse) {
    for (int t = 0; t < 3; ++t) {
        const auto f = sample();
        EXPECT_EQ(star(ctx, f, ctx.zero(1)), f);
        EXPECT_EQ(star(ctx, ctx.zero(1), f), f);
        EXPECT_TRUE(star(ctx, f, -f).is_zero());
    }
}

TEST_F(CbhFixture, Associative) {
    for (int t = 0; t < 3; ++t) {
        const auto f = sample(), g = sample(), h = sample();
        EXPECT_EQ(star(ctx, star(ctx, f, g), h), star(ctx, f, star(ctx, g, h)));
    }
}

TEST_F(CbhFixture, LowTermsAndTopDegreeLinearity) {
    const auto f = sample(), g = sample();
    const auto b = star_components(ctx, f, g, 4);
    EXPECT_TRUE(b[0].is_zero());
    EXPECT_EQ(b[1], f + g);
    EXPECT_EQ(b[2], ctx.poisson(f, g) * ratio(1, 2));
    EXPECT_EQ(bk_term(ctx, 2, f, g), b[2]);
    // mod m^3 the product is the sum
    EXPECT_GE((star(ctx, f, g) - f - g).filtration_degree(), 3);
}

TEST_F(CbhFixture, TopDegreeTermsAddLinearly) {
    for (int t = 0; t < 3; ++t) {
        const auto f = sample(), h = sample();
        const auto g = random_element(ctx, 1, 4, 4, rng, 0.5);
        EXPECT_EQ(star(ctx, f, h + g), star(ctx, f, h) + g);
    }
}

TEST_F(CbhFixture, DisjointLegsCommute) {
    const auto f = insert(sample(), {0}, 2), g = insert(sample(), {1}, 2);
    EXPECT_EQ(star(ctx, f, g), f + g);
    EXPECT_EQ(star(ctx, f, g), star(ctx, g, f));
}

TEST_F(CbhFixture, LinearTermsRejected) {
    EXPECT_THROW(star(ctx, ctx.generator(1, 0, 0), sample()), PreconditionError);
}

TEST_F(CbhFixture, HamiltonianFlowsComposeLikeTheProduct) {
    const auto f = sample(1, 0.15), g = sample(1, 0.15);
    const auto lhs = exp_operator(hamiltonian(ctx, star(ctx, f, g)));
    const auto rhs = compose(exp_operator(hamiltonian(ctx, f)), exp_operator(hamiltonian(ctx, g)));
    EXPECT_TRUE(lhs == rhs);
}

TEST_F(CbhFixture, ExponentialIsPoissonAutomorphism) {
    const auto rho = sample(2, 0.05);
    const auto e = exp_operator(hamiltonian(ctx, rho));
    EXPECT_GE(hamiltonian(ctx, rho).measured_shift(), 1);
    std::mt19937_64 local(4);
    for (int t = 0; t < 3; ++t) {
        const auto a = random_element(ctx, 2, 1, 2, local, 0.3), b = random_element(ctx, 2, 1, 2, local, 0.3);
        EXPECT_EQ(e(a * b), e(a) * e(b));
        EXPECT_EQ(e(ctx.poisson(a, b)), ctx.poisson(e(a), e(b)));
        EXPECT_EQ(star_conjugate(ctx, rho, a), e(a));
    }
    EXPECT_TRUE(compose(e, exp_operator(hamiltonian(ctx, -rho))) == TruncatedOperator::identity(ctx, 2));
}

TEST_F(CbhFixture, ExponentialNeedsPositiveShift) {
    EXPECT_THROW(exp_operator(TruncatedOperator::identity(ctx, 1)), PreconditionError);
}

TEST(CbhMatrix, BracketIdentityOnOperators) {
    // V_{f} o V_{g} - V_{g} o V_{f} = V_{{f,g}}
    const AlgebraContext ctx(b2_jordanian(), 5);
    std::mt19937_64 rng(12);
    const auto f = random_element(ctx, 1, 2, 3, rng, 0.5), g = random_element(ctx, 1, 2, 3, rng, 0.5);
    const auto vf = hamiltonian(ctx, f), vg = hamiltonian(ctx, g);
    EXPECT_TRUE(compose(vf, vg) - compose(vg, vf) == hamiltonian(ctx, ctx.poisson(f, g)));
}

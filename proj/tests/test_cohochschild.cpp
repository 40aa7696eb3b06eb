#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "qtlift/cohochschild.hpp"
#include "support.hpp"

using namespace qtlift;
using namespace qtlift::testing;

namespace {

TruncatedElement var(int dim, int legs, int cap, int leg, int i) {
    return TruncatedElement::generator(dim, legs, cap, leg, i);
}

// random two-leg element of degree n with positive degree on both legs
TruncatedElement random_reduced(int dim, int n, std::mt19937_64& rng, double density = 0.4) {
    std::uniform_real_distribution<double> keep(0, 1);
    std::uniform_int_distribution<int> num(-6, 6);
    TruncatedElement s(dim, 2, n);
    for (const Monomial& m : monomial_basis(2 * dim, n, n)) {
        if (leg_part(m, dim, 0).degree() == 0 || leg_part(m, dim, 1).degree() == 0) continue;
        if (keep(rng) < density) s.add_term(m, ratio(num(rng), 1 + static_cast<long>(rng() % 3)));
    }
    return s;
}

}  // namespace

TEST(CoHochschild, SmallExamples) {
    const int d = 2, cap = 4;
    EXPECT_EQ(d_on_leg(TruncatedElement::constant(d, 1, cap, 1), 0), -TruncatedElement::constant(d, 2, cap, 1));
    EXPECT_TRUE(cohochschild_d(var(d, 1, cap, 0, 1)).is_zero());
    const auto xy = var(d, 1, cap, 0, 0) * var(d, 1, cap, 0, 1);
    const auto expected = var(d, 2, cap, 0, 0) * var(d, 2, cap, 1, 1) + var(d, 2, cap, 0, 1) * var(d, 2, cap, 1, 0);
    EXPECT_EQ(cohochschild_d(xy), expected);
    const auto x2 = var(d, 1, cap, 0, 0) * var(d, 1, cap, 0, 0);
    EXPECT_EQ(cohochschild_d(x2), var(d, 2, cap, 0, 0) * var(d, 2, cap, 1, 0) * Rational(2));
    // x^3 -> 3 x^2 (x) x + 3 x (x) x^2
    const auto x3 = x2 * var(d, 1, cap, 0, 0);
    const auto a = var(d, 2, cap, 0, 0), b = var(d, 2, cap, 1, 0);
    EXPECT_EQ(cohochschild_d(x3), (a * a * b + a * b * b) * Rational(3));
}

TEST(CoHochschild, SquareOfDifferentialVanishes) {
    std::mt19937_64 rng(8);
    for (int d : {1, 2, 3}) {
        TruncatedElement f(d, 1, 5);
        for (const Monomial& m : monomial_basis(d, 1, 5))
            if (rng() % 3 == 0) f.add_term(m, static_cast<long>(rng() % 11) - 5);
        EXPECT_TRUE(d2(cohochschild_d(f)).is_zero());
        const auto s = random_reduced(d, 4, rng);
        // d on the third leg after d on the first equals the reverse order
        EXPECT_EQ(d_on_leg(d_on_leg(s, 0), 2), d_on_leg(d_on_leg(s, 1), 0));
    }
}

TEST(CoHochschild, CohomologyMatchesExteriorPowers) {
    for (int d = 1; d <= 3; ++d)
        for (int n = 1; n <= 5; ++n) {
            const CohomologyDims dims = cohomology_check(d, n);
            EXPECT_EQ(dims.h0, n == 1 ? static_cast<std::size_t>(d) : 0U) << d << " " << n;
            EXPECT_EQ(dims.h1, n == 2 ? static_cast<std::size_t>(d * (d - 1) / 2) : 0U) << d << " " << n;
        }
    EXPECT_EQ(cohomology_check(sl2_bracket(), 3), (CohomologyDims{0, 0}));
    // [e0,e1] = e0, [e0,e2] = e0, [e1,e2] = e1 breaks Jacobi
    Tensor3 bad(3);
    bad(0, 1, 0) = 1;
    bad(1, 0, 0) = -1;
    bad(0, 2, 0) = 1;
    bad(2, 0, 0) = -1;
    bad(1, 2, 1) = 1;
    bad(2, 1, 1) = -1;
    const auto jac = jacobi_residual(bad);
    ASSERT_TRUE(std::any_of(jac.begin(), jac.end(), [](const Rational& q) { return sgn(q) != 0; }));
    EXPECT_THROW(cohomology_check(bad, 2), ValidationError);
}

TEST(CoHochschild, SigmaRecoversCoboundaryPreimage) {
    std::mt19937_64 rng(31);
    for (int d : {1, 2, 3})
        for (int n : {3, 4, 5}) {
            if (d == 3 && n == 5) continue;
            const auto s = random_reduced(d, n, rng);
            const auto alpha = -d_on_leg(s, 0), beta = -d_on_leg(s, 1);
            ASSERT_TRUE(cocycle_conditions(alpha, beta).passed()) << cocycle_conditions(alpha, beta).summary();
            const auto sol = solve_sigma_detailed(alpha, beta, n);
            EXPECT_EQ(sol.sigma, s);
            EXPECT_TRUE(is_homogeneous(sol.sigma, n));
            EXPECT_TRUE(counits_vanish(sol.sigma));
            EXPECT_EQ(d_on_leg(sol.sigma_prime, 0), -alpha);
            EXPECT_EQ(d_on_leg(sol.sigma_double_prime, 1), -beta);
            for (std::uint64_t seed : {1ULL, 2ULL, 77ULL}) {
                SigmaOptions opts;
                opts.kernel_seed = seed;
                opts.solver = {seed % 2 == 0, seed % 2 == 1};
                EXPECT_EQ(solve_sigma(alpha, beta, n, opts), s);
            }
        }
}

TEST(CoHochschild, ViolatedConditionsRejected) {
    std::mt19937_64 rng(2);
    const auto s = random_reduced(2, 3, rng, 0.8);
    const auto alpha = -d_on_leg(s, 0);
    const auto beta = -d_on_leg(s, 1);
    // x0 (x) x1 (x) x0 keeps conds1 and conds2 but breaks the symmetry of alpha
    TruncatedElement bumped = alpha;
    bumped.add_term(Monomial::from_exponents(std::vector<int>{1, 0, 0, 1, 1, 0}), 1);
    const auto res = cocycle_conditions(bumped, beta);
    EXPECT_FALSE(res.passed());
    EXPECT_EQ(res.first_failure(), std::optional<std::string>("conds3_alpha"));
    try {
        solve_sigma(bumped, beta, 3);
        ADD_FAILURE() << "no exception";
    } catch (const CocycleConditionError& e) {
        EXPECT_FALSE(e.residual().empty());
    }
    // a lone x0 (x) x0 (x) x0^2 in alpha with beta = 0 violates conds1 in degree 4
    TruncatedElement a4(2, 3, 4);
    a4.add_term(Monomial::from_exponents(std::vector<int>{1, 0, 1, 0, 2, 0}), 1);
    const auto res4 = cocycle_conditions(a4, TruncatedElement(2, 3, 4));
    EXPECT_EQ(res4.first_failure(), std::optional<std::string>("conds1"));
    EXPECT_THROW(solve_sigma(a4, TruncatedElement(2, 3, 4), 4), CocycleConditionError);
}

TEST(CoHochschild, ShapePreconditions) {
    EXPECT_THROW(solve_sigma(TruncatedElement(2, 3, 2), TruncatedElement(2, 3, 2), 2), PreconditionError);
    EXPECT_THROW(solve_sigma(TruncatedElement(2, 2, 3), TruncatedElement(2, 3, 3), 3), PreconditionError);
    EXPECT_TRUE(solve_sigma(TruncatedElement(2, 3, 4), TruncatedElement(2, 3, 4), 4).is_zero());
}

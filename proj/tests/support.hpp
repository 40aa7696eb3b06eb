#ifndef QTLIFT_TESTS_SUPPORT_HPP
#define QTLIFT_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "qtlift/errors.hpp"
#include "qtlift/formalgroup.hpp"
#include "qtlift/linalg.hpp"
#include "qtlift/liebialg.hpp"

namespace qtlift::testing {

// basis (h, e, f) = indices 0, 1, 2
inline Tensor3 sl2_bracket() {
    Tensor3 c(3);
    c(0, 1, 1) = 2;
    c(1, 0, 1) = -2;
    c(0, 2, 2) = -2;
    c(2, 0, 2) = 2;
    c(1, 2, 0) = 1;
    c(2, 1, 0) = -1;
    return c;
}

// r = e (x) f + h (x) h / 4
inline LieBialgebra sl2_standard() {
    SquareMatrix r(3);
    r(1, 2) = 1;
    r(0, 0) = Rational(1, 4);
    return LieBialgebra(sl2_bracket(), r, {"h", "e", "f"});
}

// r = h (x) e, not a CYBE solution
inline LieBialgebra sl2_h_e() {
    SquareMatrix r(3);
    r(0, 1) = 1;
    return LieBialgebra(sl2_bracket(), r, {"h", "e", "f"});
}

// Jordanian r = h ^ e on sl2
inline LieBialgebra sl2_jordanian() {
    SquareMatrix r(3);
    r(0, 1) = 1;
    r(1, 0) = -1;
    return LieBialgebra(sl2_bracket(), r, {"h", "e", "f"});
}

// two-dimensional non-abelian algebra [h, e] = e with r = h ^ e
inline LieBialgebra b2_jordanian() {
    Tensor3 c(2);
    c(0, 1, 1) = 1;
    c(1, 0, 1) = -1;
    SquareMatrix r(2);
    r(0, 1) = 1;
    r(1, 0) = -1;
    return LieBialgebra(c, r, {"h", "e"});
}

inline LieBialgebra abelian(int d, const SquareMatrix& r) { return LieBialgebra(Tensor3(d), r); }

inline SquareMatrix random_matrix(int d, std::mt19937_64& rng, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> u(lo, hi);
    std::uniform_int_distribution<int> den(1, 3);
    SquareMatrix m(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m(i, j) = ratio(u(rng), den(rng));
    return m;
}

// Unimodular integer matrix: product of random elementary operations.
inline SquareMatrix random_unimodular(int d, std::mt19937_64& rng) {
    SquareMatrix p(d);
    for (int i = 0; i < d; ++i) p(i, i) = 1;
    std::uniform_int_distribution<int> idx(0, d - 1), mult(-2, 2);
    for (int step = 0; step < 3 * d; ++step) {
        const int a = idx(rng), b = idx(rng);
        if (a == b) continue;
        const int k = mult(rng);
        for (int col = 0; col < d; ++col) p(a, col) += k * p(b, col);
    }
    return p;
}

inline SquareMatrix inverse(const SquareMatrix& p) {
    const int d = p.dim();
    linalg::Matrix a(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = p(i, j);
    SquareMatrix q(d);
    for (int j = 0; j < d; ++j) {
        std::vector<Rational> e(static_cast<std::size_t>(d));
        e[static_cast<std::size_t>(j)] = 1;
        const auto s = linalg::solve(a, e);
        if (!s.consistent || s.rank != static_cast<std::size_t>(d)) throw PreconditionError("singular basis change");
        for (int i = 0; i < d; ++i) q(i, j) = s.x[static_cast<std::size_t>(i)];
    }
    return q;
}

// New basis f_i = sum_a P(a, i) e_a.
inline LieBialgebra change_basis(const LieBialgebra& lb, const SquareMatrix& p) {
    const int d = lb.dim();
    const SquareMatrix q = inverse(p);  // e_k = sum_m Q(m, k) f_m
    Tensor3 c(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b) {
                    const Rational w = p(a, i) * p(b, j);
                    if (sgn(w) == 0) continue;
                    for (int k = 0; k < d; ++k) {
                        const Rational& ck = lb.bracket()(a, b, k);
                        if (sgn(ck) == 0) continue;
                        for (int m = 0; m < d; ++m) c(i, j, m) += w * ck * q(m, k);
                    }
                }
    SquareMatrix r(d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) r(i, j) += lb.r()(a, b) * q(i, a) * q(j, b);
    return LieBialgebra(c, r);
}

// Direct sum with an abelian ideal of dimension extra; r is extended by zero.
inline LieBialgebra with_abelian_summand(const LieBialgebra& lb, int extra) {
    const int d = lb.dim() + extra;
    Tensor3 c(d);
    SquareMatrix r(d);
    for (int i = 0; i < lb.dim(); ++i)
        for (int j = 0; j < lb.dim(); ++j) {
            r(i, j) = lb.r()(i, j);
            for (int k = 0; k < lb.dim(); ++k) c(i, j, k) = lb.bracket()(i, j, k);
        }
    return LieBialgebra(c, r);
}

// Small (g, r) passing the full gate, in a randomly changed basis.
inline LieBialgebra random_quasitriangular(std::mt19937_64& rng, int max_dim = 3) {
    std::vector<LieBialgebra> seeds{sl2_standard(), sl2_jordanian(), b2_jordanian()};
    if (max_dim >= 3) seeds.push_back(with_abelian_summand(b2_jordanian(), 1));
    std::uniform_int_distribution<std::size_t> pick(0, seeds.size() - 1);
    const LieBialgebra base = seeds[pick(rng)];
    return change_basis(base, random_unimodular(base.dim(), rng));
}

// Lie algebra of dimension 3 or 4 with random structure in a random basis.
inline Tensor3 random_lie_algebra(int d, std::mt19937_64& rng) {
    std::vector<LieBialgebra> seeds;
    seeds.push_back(with_abelian_summand(b2_jordanian(), d - 2));
    if (d >= 3) seeds.push_back(with_abelian_summand(sl2_standard(), d - 3));
    // Heisenberg [x, y] = z plus abelian part
    {
        Tensor3 c(d);
        c(0, 1, 2) = 1;
        c(1, 0, 2) = -1;
        seeds.emplace_back(c, SquareMatrix(d));
    }
    std::uniform_int_distribution<std::size_t> pick(0, seeds.size() - 1);
    return change_basis(seeds[pick(rng)], random_unimodular(d, rng)).bracket();
}

// Random k-leg element with terms in degrees [lo, hi].
inline TruncatedElement random_element(const AlgebraContext& ctx, int legs, int lo, int hi, std::mt19937_64& rng,
                                       double density = 0.3) {
    std::uniform_real_distribution<double> keep(0.0, 1.0);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    TruncatedElement f = ctx.zero(legs);
    for (const Monomial& m : monomial_basis(ctx.dim() * legs, lo, hi))
        if (keep(rng) < density) f.add_term(m, ratio(num(rng), den(rng)));
    return f;
}

}  // namespace qtlift::testing

#endif

#ifndef QTLIFT_BCH_HPP
#define QTLIFT_BCH_HPP

#include <map>
#include <utility>
#include <vector>

#include "qtlift/rational.hpp"

namespace qtlift::bch {

/// Bernoulli numbers B_0..B_n with B_1 = -1/2.
inline std::vector<Rational> bernoulli_numbers(int n) {
    std::vector<Rational> b(n + 1);
    b[0] = 1;
    for (int m = 1; m <= n; ++m) {
        // sum_{k=0}^{m} C(m+1,k) B_k = 0
        Rational acc = 0;
        mpz_class binom = 1;  // C(m+1, k)
        for (int k = 0; k < m; ++k) {
            acc += Rational(binom) * b[k];
            binom = binom * (m + 1 - k) / (k + 1);
        }
        b[m] = -acc / Rational(m + 1);
    }
    return b;
}

/// Homogeneous components Z_1..Z_max of log(e^x e^y) evaluated in any Lie algebra.
///
/// T needs value semantics with +, - and multiplication by Rational; `bracket(a, b)`
/// is the Lie bracket. Uses the recursion
///   (n+1) Z_{n+1} = 1/2 [x - y, Z_n]
///                 + sum_{p>=1, 2p<=n} B_{2p}/(2p)! sum_{k_1+...+k_{2p}=n} [Z_{k_1},[...,[Z_{k_{2p}}, x+y]...]]
/// with the inner sums built bottom-up. Result index k holds Z_k; index 0 holds `zero`.
template <class T, class Bracket>
std::vector<T> components(const T& x, const T& y, int max_order, const T& zero, Bracket&& bracket) {
    std::vector<T> z;
    z.reserve(max_order + 1);
    z.push_back(zero);
    if (max_order < 1) return z;
    const T sum = x + y;
    const T diff = x - y;
    z.push_back(sum);
    const std::vector<Rational> bern = bernoulli_numbers(max_order + 1);

    // nested[{q, m}] = sum over compositions (k_1..k_q) of m of [Z_{k_1},[...,[Z_{k_q}, x+y]]]
    std::map<std::pair<int, int>, T> nested;
    auto nested_sum = [&](auto&& self, int q, int m) -> const T& {
        auto key = std::make_pair(q, m);
        if (auto it = nested.find(key); it != nested.end()) return it->second;
        T acc = zero;
        if (q == 1) {
            acc = bracket(z[m], sum);
        } else {
            for (int k = 1; k <= m - q + 1; ++k) {
                const T& inner = self(self, q - 1, m - k);
                acc = acc + bracket(z[k], inner);
            }
        }
        return nested.emplace(key, std::move(acc)).first->second;
    };

    for (int n = 1; n < max_order; ++n) {
        T next = bracket(diff, z[n]) * Rational(1, 2);
        for (int p = 1; 2 * p <= n; ++p) {
            const Rational coeff = bern[2 * p] / factorial(2 * p);
            if (is_zero(coeff)) continue;
            next = next + nested_sum(nested_sum, 2 * p, n) * coeff;
        }
        z.push_back(next * Rational(1, n + 1));
    }
    return z;
}

} // namespace qtlift::bch

#endif

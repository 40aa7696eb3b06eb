#ifndef QTLIFT_POLYNOMIAL_HPP
#define QTLIFT_POLYNOMIAL_HPP

#include <array>
#include <climits>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qtlift/rational.hpp"

namespace qtlift {

/// Commutative monomial in at most kMaxVars variables. Byte 0 holds the total degree so
/// that the natural ordering is graded.
class Monomial {
public:
    static constexpr int kMaxVars = 31;

    Monomial() = default;
    static Monomial from_exponents(std::span<const int> e);
    static Monomial variable(int v, int power = 1);

    int degree() const noexcept { return bytes_[0]; }
    int exponent(int v) const noexcept { return bytes_[static_cast<std::size_t>(v) + 1]; }
    void set_exponent(int v, int e);
    std::vector<int> exponents(int nvars) const;

    /// Product of monomials (exponents added).
    Monomial operator*(const Monomial& o) const;
    /// Exponents of variables [first, first+count) moved to [0, count).
    Monomial slice(int first, int count) const;
    /// This monomial with its variables shifted up by offset.
    Monomial shifted(int offset) const;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    friend bool operator==(const Monomial&, const Monomial&) = default;

    std::size_t hash() const noexcept;

private:
    std::array<std::uint8_t, kMaxVars + 1> bytes_{};
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// All monomials in nvars variables with lo <= degree <= hi, in increasing order.
std::vector<Monomial> monomial_basis(int nvars, int lo, int hi);

inline constexpr int kInfiniteDegree = INT_MAX;

/// Sparse element of O_{(G*)^legs} / m^{cap+1}. Variable l*dim + i is the coordinate x_i
/// on leg l. Terms of degree above cap are never stored.
class TruncatedElement {
public:
    using Terms = std::map<Monomial, Rational>;

    TruncatedElement() = default;
    TruncatedElement(int dim, int legs, int cap);

    static TruncatedElement constant(int dim, int legs, int cap, const Rational& c);
    /// x_i on the given leg (both 0-based).
    static TruncatedElement generator(int dim, int legs, int cap, int leg, int i);
    static TruncatedElement monomial(int dim, int legs, int cap, const Monomial& m, const Rational& c = 1);

    int dim() const noexcept { return dim_; }
    int legs() const noexcept { return legs_; }
    int cap() const noexcept { return cap_; }
    int nvars() const noexcept { return dim_ * legs_; }

    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Adds c at m; ignored if deg m > cap.
    void add_term(const Monomial& m, const Rational& c);
    Rational coefficient(const Monomial& m) const;
    Rational constant_term() const;

    TruncatedElement& operator+=(const TruncatedElement& o);
    TruncatedElement& operator-=(const TruncatedElement& o);
    TruncatedElement& operator*=(const Rational& c);
    TruncatedElement operator-() const;
    friend TruncatedElement operator+(TruncatedElement a, const TruncatedElement& b) { return a += b; }
    friend TruncatedElement operator-(TruncatedElement a, const TruncatedElement& b) { return a -= b; }
    friend TruncatedElement operator*(TruncatedElement a, const Rational& c) { return a *= c; }
    friend TruncatedElement operator*(const Rational& c, TruncatedElement a) { return a *= c; }

    /// Truncated product; the result cap is the smaller of the two caps.
    TruncatedElement operator*(const TruncatedElement& o) const;
    /// Truncated product keeping only terms of degree <= max_degree; the cap is unchanged.
    TruncatedElement multiply_up_to(const TruncatedElement& o, int max_degree) const;
    /// Multiplication by a single monomial term.
    TruncatedElement times_monomial(const Monomial& m, const Rational& c = 1) const;

    /// Minimal total degree of a nonzero term; kInfiniteDegree for zero.
    int filtration_degree() const;
    /// Largest total degree present; -1 for zero.
    int top_degree() const;
    TruncatedElement graded_component(int n) const;
    /// Terms of degree <= new_cap, with cap set to new_cap (may also raise the cap).
    TruncatedElement truncated(int new_cap) const;
    /// Partial derivative with respect to variable v.
    TruncatedElement derivative(int v) const;

    /// Equal coefficients, dim and legs. Caps are not compared.
    friend bool operator==(const TruncatedElement& a, const TruncatedElement& b) {
        return a.dim_ == b.dim_ && a.legs_ == b.legs_ && a.terms_ == b.terms_;
    }

    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    void check_compatible(const TruncatedElement& o) const;
    int dim_ = 0;
    int legs_ = 0;
    int cap_ = 0;
    Terms terms_;
};

} // namespace qtlift

#endif

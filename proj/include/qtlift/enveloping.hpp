#ifndef QTLIFT_ENVELOPING_HPP
#define QTLIFT_ENVELOPING_HPP

#include <map>
#include <utility>
#include <vector>

#include "qtlift/liebialg.hpp"
#include "qtlift/rational.hpp"

namespace qtlift {

/// Index sequence of dual basis vectors, 0-based.
using Word = std::vector<int>;
/// Exponent vector of a commutative monomial in S(g*).
using Exponents = std::vector<int>;

/// Linear combination of words. After straightening every word is weakly increasing.
class PbwElement {
public:
    PbwElement() = default;
    static PbwElement unit();
    static PbwElement word(Word w, Rational c = 1);

    void add(const Word& w, const Rational& c);
    PbwElement& operator+=(const PbwElement& o);
    PbwElement& operator-=(const PbwElement& o);
    PbwElement& operator*=(const Rational& c);
    friend PbwElement operator+(PbwElement a, const PbwElement& b) { return a += b; }
    friend PbwElement operator-(PbwElement a, const PbwElement& b) { return a -= b; }
    friend PbwElement operator*(PbwElement a, const Rational& c) { return a *= c; }

    bool is_zero() const noexcept { return terms_.empty(); }
    /// Maximal word length, -1 for zero.
    int degree() const;
    bool is_pbw() const;
    const std::map<Word, Rational>& terms() const noexcept { return terms_; }

    friend bool operator==(const PbwElement&, const PbwElement&) = default;

private:
    std::map<Word, Rational> terms_;
};

/// Element of U(g*) (x) U(g*), keyed by pairs of words.
class PbwTensor {
public:
    void add(const Word& a, const Word& b, const Rational& c);
    PbwTensor& operator+=(const PbwTensor& o);
    PbwTensor& operator-=(const PbwTensor& o);
    friend PbwTensor operator-(PbwTensor a, const PbwTensor& b) { return a -= b; }
    PbwTensor flipped() const;

    bool is_zero() const noexcept { return terms_.empty(); }
    const std::map<std::pair<Word, Word>, Rational>& terms() const noexcept { return terms_; }

    friend bool operator==(const PbwTensor&, const PbwTensor&) = default;

private:
    std::map<std::pair<Word, Word>, Rational> terms_;
};

/// Commutative polynomial in S(g*), exponent vector -> coefficient.
using SymPolynomial = std::map<Exponents, Rational>;

/// U(g*) with g* given by bracket_star, together with the co-Poisson cobracket dual to the
/// bracket of g. Straightening results are memoized; the object is meant to be used
/// from a single thread while tables are built.
class EnvelopingAlgebra {
public:
    /// bracket_star is the Lie bracket of g*, bracket_g the Lie bracket of g.
    EnvelopingAlgebra(Tensor3 bracket_star, Tensor3 bracket_g, int max_degree);

    int dim() const noexcept { return bracket_star_.dim(); }
    int max_degree() const noexcept { return max_degree_; }

    /// Rewrite a word into the PBW basis using xi eta = eta xi + [xi, eta].
    const PbwElement& pbw_normalize(const Word& w);
    PbwElement normalize(const PbwElement& p);
    PbwElement multiply(const PbwElement& a, const PbwElement& b);
    PbwTensor multiply(const PbwTensor& a, const PbwTensor& b);

    /// (1/n!) sum over orderings of the monomial xi^A, straightened.
    PbwElement sym_map(const Exponents& a);
    PbwElement sym_map(const SymPolynomial& p);
    /// Two-sided inverse of sym_map, peeled off from the top word length downwards.
    SymPolynomial sym_inverse(const PbwElement& p);

    /// Standard coproduct, g* primitive.
    PbwTensor coproduct(const PbwElement& p);
    /// delta_U on straightened input, extended from g* by co-Leibniz.
    PbwTensor copoisson_cobracket(const PbwElement& p);

private:
    void check_word(const Word& w) const;
    Tensor3 bracket_star_;
    Tensor3 bracket_g_;
    int max_degree_;
    std::map<Word, PbwElement> normal_cache_;
    std::map<Word, PbwTensor> cobracket_cache_;
};

/// n!/(a_1! ... a_d!) distinct words realising an exponent vector.
std::vector<Word> arrangements(const Exponents& a);
int total_degree(const Exponents& a);
Rational exponent_factorial(const Exponents& a);

} // namespace qtlift

#endif

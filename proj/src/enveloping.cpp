#include "qtlift/enveloping.hpp"

#include <algorithm>
#include <numeric>

#include "qtlift/errors.hpp"

namespace qtlift {

PbwElement PbwElement::unit() { return word({}); }

PbwElement PbwElement::word(Word w, Rational c) {
    PbwElement p;
    p.add(w, c);
    return p;
}

void PbwElement::add(const Word& w, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

PbwElement& PbwElement::operator+=(const PbwElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

PbwElement& PbwElement::operator-=(const PbwElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

PbwElement& PbwElement::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

int PbwElement::degree() const {
    int d = -1;
    for (const auto& [w, c] : terms_) d = std::max(d, static_cast<int>(w.size()));
    return d;
}

bool PbwElement::is_pbw() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return std::is_sorted(t.first.begin(), t.first.end()); });
}

void PbwTensor::add(const Word& a, const Word& b, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace({a, b}, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

PbwTensor& PbwTensor::operator+=(const PbwTensor& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
    return *this;
}

PbwTensor& PbwTensor::operator-=(const PbwTensor& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
    return *this;
}

PbwTensor PbwTensor::flipped() const {
    PbwTensor t;
    for (const auto& [k, c] : terms_) t.add(k.second, k.first, c);
    return t;
}

int total_degree(const Exponents& a) { return std::accumulate(a.begin(), a.end(), 0); }

Rational exponent_factorial(const Exponents& a) {
    Rational f = 1;
    for (int e : a) f *= factorial(e);
    return f;
}

std::vector<Word> arrangements(const Exponents& a) {
    Word w;
    for (int i = 0; i < static_cast<int>(a.size()); ++i) w.insert(w.end(), a[i], i);
    std::vector<Word> out;
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

EnvelopingAlgebra::EnvelopingAlgebra(Tensor3 bracket_star, Tensor3 bracket_g, int max_degree)
    : bracket_star_(std::move(bracket_star)), bracket_g_(std::move(bracket_g)), max_degree_(max_degree) {
    if (bracket_star_.dim() != bracket_g_.dim()) throw InputError("bracket dimensions differ");
}

void EnvelopingAlgebra::check_word(const Word& w) const {
    for (int i : w)
        if (i < 0 || i >= dim()) throw PreconditionError("word index out of range");
}

const PbwElement& EnvelopingAlgebra::pbw_normalize(const Word& w) {
    if (auto it = normal_cache_.find(w); it != normal_cache_.end()) return it->second;
    check_word(w);
    PbwElement out;
    auto descent = std::adjacent_find(w.begin(), w.end(), std::greater<int>());
    if (descent == w.end()) {
        out.add(w, 1);
    } else {
        const auto p = static_cast<std::size_t>(descent - w.begin());
        const int a = w[p], b = w[p + 1];
        Word swapped = w;
        std::swap(swapped[p], swapped[p + 1]);
        out += pbw_normalize(swapped);
        for (int k = 0; k < dim(); ++k) {
            const Rational& c = bracket_star_(a, b, k);
            if (sgn(c) == 0) continue;
            Word shorter(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
            shorter.push_back(k);
            shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(p) + 2, w.end());
            out += pbw_normalize(shorter) * c;
        }
    }
    return normal_cache_.emplace(w, std::move(out)).first->second;
}

PbwElement EnvelopingAlgebra::normalize(const PbwElement& p) {
    PbwElement out;
    for (const auto& [w, c] : p.terms()) out += pbw_normalize(w) * c;
    return out;
}

PbwElement EnvelopingAlgebra::multiply(const PbwElement& a, const PbwElement& b) {
    PbwElement out;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out += pbw_normalize(w) * (ca * cb);
        }
    return out;
}

PbwTensor EnvelopingAlgebra::multiply(const PbwTensor& a, const PbwTensor& b) {
    PbwTensor out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            Word l = ka.first, r = ka.second;
            l.insert(l.end(), kb.first.begin(), kb.first.end());
            r.insert(r.end(), kb.second.begin(), kb.second.end());
            const PbwElement& nl = pbw_normalize(l);
            const PbwElement& nr = pbw_normalize(r);
            const Rational c = ca * cb;
            for (const auto& [wl, cl] : nl.terms())
                for (const auto& [wr, cr] : nr.terms()) out.add(wl, wr, c * cl * cr);
        }
    return out;
}

PbwElement EnvelopingAlgebra::sym_map(const Exponents& a) {
    if (static_cast<int>(a.size()) != dim()) throw PreconditionError("exponent vector has wrong length");
    const int n = total_degree(a);
    if (n > max_degree_) throw PreconditionError("symmetrization degree exceeds truncation");
    // each distinct word occurs prod(a_i!) times among the n! orderings
    const Rational weight = exponent_factorial(a) / factorial(n);
    PbwElement out;
    for (const Word& w : arrangements(a)) out += pbw_normalize(w) * weight;
    return out;
}

PbwElement EnvelopingAlgebra::sym_map(const SymPolynomial& p) {
    PbwElement out;
    for (const auto& [a, c] : p) out += sym_map(a) * c;
    return out;
}

SymPolynomial EnvelopingAlgebra::sym_inverse(const PbwElement& p) {
    PbwElement rest = normalize(p);
    SymPolynomial out;
    while (!rest.is_zero()) {
        // a longest word; its symmetrization has the same leading word
        const auto top = std::max_element(rest.terms().begin(), rest.terms().end(),
                                          [](const auto& x, const auto& y) { return x.first.size() < y.first.size(); });
        Exponents a(dim(), 0);
        for (int i : top->first) ++a[i];
        const Rational c = top->second;
        out[a] += c;
        rest -= sym_map(a) * c;
    }
    std::erase_if(out, [](const auto& t) { return sgn(t.second) == 0; });
    return out;
}

PbwTensor EnvelopingAlgebra::coproduct(const PbwElement& p) {
    PbwTensor out;
    for (const auto& [w, c] : p.terms()) {
        const std::size_t n = w.size();
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            Word l, r;
            for (std::size_t i = 0; i < n; ++i) ((mask >> i) & 1U ? l : r).push_back(w[i]);
            const PbwElement& nl = pbw_normalize(l);
            const PbwElement& nr = pbw_normalize(r);
            for (const auto& [wl, cl] : nl.terms())
                for (const auto& [wr, cr] : nr.terms()) out.add(wl, wr, c * cl * cr);
        }
    }
    return out;
}

PbwTensor EnvelopingAlgebra::copoisson_cobracket(const PbwElement& p) {
    PbwTensor out;
    for (const auto& [w, c] : p.terms()) {
        auto it = cobracket_cache_.find(w);
        if (it == cobracket_cache_.end()) {
            check_word(w);
            PbwTensor t;
            const std::size_t n = w.size();
            // sum over the position p carrying delta; the remaining letters are
            // distributed by the primitive coproduct
            for (std::size_t pos = 0; pos < n; ++pos)
                for (int a = 0; a < dim(); ++a)
                    for (int b = 0; b < dim(); ++b) {
                        const Rational& g = bracket_g_(a, b, w[pos]);
                        if (sgn(g) == 0) continue;
                        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
                            if ((mask >> pos) & 1U) continue;
                            Word l, r;
                            for (std::size_t i = 0; i < n; ++i) {
                                if (i == pos) {
                                    l.push_back(a);
                                    r.push_back(b);
                                } else {
                                    ((mask >> i) & 1U ? l : r).push_back(w[i]);
                                }
                            }
                            const PbwElement& nl = pbw_normalize(l);
                            const PbwElement& nr = pbw_normalize(r);
                            for (const auto& [wl, cl] : nl.terms())
                                for (const auto& [wr, cr] : nr.terms()) t.add(wl, wr, g * cl * cr);
                        }
                    }
            it = cobracket_cache_.emplace(w, std::move(t)).first;
        }
        for (const auto& [k, v] : it->second.terms()) out.add(k.first, k.second, c * v);
    }
    return out;
}

} // namespace qtlift

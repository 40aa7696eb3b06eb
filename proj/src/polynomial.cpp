#include "qtlift/polynomial.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>

#include "qtlift/errors.hpp"

namespace qtlift {

Monomial Monomial::from_exponents(std::span<const int> e) {
    if (static_cast<int>(e.size()) > kMaxVars) throw PreconditionError("too many variables for monomial");
    Monomial m;
    for (std::size_t v = 0; v < e.size(); ++v) m.set_exponent(static_cast<int>(v), e[v]);
    return m;
}

Monomial Monomial::variable(int v, int power) {
    Monomial m;
    m.set_exponent(v, power);
    return m;
}

void Monomial::set_exponent(int v, int e) {
    if (v < 0 || v >= kMaxVars) throw PreconditionError("variable index out of range");
    if (e < 0) throw PreconditionError("negative exponent");
    const int deg = degree() - exponent(v) + e;
    if (deg > 255) throw PreconditionError("monomial degree overflow");
    bytes_[static_cast<std::size_t>(v) + 1] = static_cast<std::uint8_t>(e);
    bytes_[0] = static_cast<std::uint8_t>(deg);
}

std::vector<int> Monomial::exponents(int nvars) const {
    std::vector<int> e(static_cast<std::size_t>(nvars));
    for (int v = 0; v < nvars; ++v) e[static_cast<std::size_t>(v)] = exponent(v);
    return e;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial m;
    for (std::size_t i = 0; i < bytes_.size(); ++i) {
        const int s = bytes_[i] + o.bytes_[i];
        if (s > 255) throw PreconditionError("monomial degree overflow");
        m.bytes_[i] = static_cast<std::uint8_t>(s);
    }
    return m;
}

Monomial Monomial::slice(int first, int count) const {
    Monomial m;
    int deg = 0;
    for (int v = 0; v < count; ++v) {
        const std::uint8_t e = bytes_[static_cast<std::size_t>(first + v) + 1];
        m.bytes_[static_cast<std::size_t>(v) + 1] = e;
        deg += e;
    }
    m.bytes_[0] = static_cast<std::uint8_t>(deg);
    return m;
}

Monomial Monomial::shifted(int offset) const {
    Monomial m;
    m.bytes_[0] = bytes_[0];
    for (int v = 0; v + offset < kMaxVars; ++v) {
        const std::uint8_t e = bytes_[static_cast<std::size_t>(v) + 1];
        if (e != 0) m.bytes_[static_cast<std::size_t>(v + offset) + 1] = e;
    }
    for (int v = kMaxVars - offset; v < kMaxVars; ++v)
        if (v >= 0 && bytes_[static_cast<std::size_t>(v) + 1] != 0) throw PreconditionError("monomial shift overflow");
    return m;
}

std::size_t Monomial::hash() const noexcept {
    std::uint64_t w[4];
    std::memcpy(w, bytes_.data(), sizeof w);
    std::uint64_t h = 0x9E3779B97F4A7C15ULL;
    for (std::uint64_t x : w) h = (h ^ x) * 0x100000001B3ULL + (h >> 29);
    return static_cast<std::size_t>(h);
}

std::vector<Monomial> monomial_basis(int nvars, int lo, int hi) {
    std::vector<Monomial> out;
    if (nvars > Monomial::kMaxVars) throw PreconditionError("too many variables for monomial");
    Monomial m;
    auto rec = [&](auto&& self, int v, int remaining) -> void {
        if (v == nvars - 1) {
            m.set_exponent(v, remaining);
            out.push_back(m);
            return;
        }
        for (int k = remaining; k >= 0; --k) {
            m.set_exponent(v, k);
            self(self, v + 1, remaining - k);
        }
        m.set_exponent(v, 0);
    };
    for (int n = lo; n <= hi; ++n) {
        if (nvars == 0) {
            if (n == 0) out.push_back(Monomial{});
            continue;
        }
        rec(rec, 0, n);
    }
    std::sort(out.begin(), out.end());
    return out;
}

TruncatedElement::TruncatedElement(int dim, int legs, int cap) : dim_(dim), legs_(legs), cap_(cap) {
    if (dim <= 0 || legs <= 0) throw PreconditionError("element needs positive dimension and leg count");
    if (dim * legs > Monomial::kMaxVars) throw PreconditionError("too many variables (legs * dim > 31)");
    if (cap < 0) throw PreconditionError("negative truncation cap");
}

TruncatedElement TruncatedElement::constant(int dim, int legs, int cap, const Rational& c) {
    TruncatedElement f(dim, legs, cap);
    f.add_term(Monomial{}, c);
    return f;
}

TruncatedElement TruncatedElement::generator(int dim, int legs, int cap, int leg, int i) {
    if (leg < 0 || leg >= legs || i < 0 || i >= dim) throw PreconditionError("generator index out of range");
    TruncatedElement f(dim, legs, cap);
    f.add_term(Monomial::variable(leg * dim + i), 1);
    return f;
}

TruncatedElement TruncatedElement::monomial(int dim, int legs, int cap, const Monomial& m, const Rational& c) {
    TruncatedElement f(dim, legs, cap);
    f.add_term(m, c);
    return f;
}

void TruncatedElement::add_term(const Monomial& m, const Rational& c) {
    if (m.degree() > cap_ || sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Rational TruncatedElement::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational TruncatedElement::constant_term() const { return coefficient(Monomial{}); }

void TruncatedElement::check_compatible(const TruncatedElement& o) const {
    if (dim_ != o.dim_ || legs_ != o.legs_) throw ContextMismatch("elements live in different algebras");
}

TruncatedElement& TruncatedElement::operator+=(const TruncatedElement& o) {
    check_compatible(o);
    if (o.cap_ < cap_) *this = truncated(o.cap_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

TruncatedElement& TruncatedElement::operator-=(const TruncatedElement& o) {
    check_compatible(o);
    if (o.cap_ < cap_) *this = truncated(o.cap_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

TruncatedElement& TruncatedElement::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

TruncatedElement TruncatedElement::operator-() const {
    TruncatedElement f = *this;
    for (auto& [m, v] : f.terms_) v = -v;
    return f;
}

TruncatedElement TruncatedElement::operator*(const TruncatedElement& o) const {
    check_compatible(o);
    TruncatedElement out(dim_, legs_, std::min(cap_, o.cap_));
    for (const auto& [ma, ca] : terms_) {
        const int room = out.cap_ - ma.degree();
        for (const auto& [mb, cb] : o.terms_) {
            if (mb.degree() > room) break;  // terms are sorted by degree
            out.add_term(ma * mb, ca * cb);
        }
    }
    return out;
}

TruncatedElement TruncatedElement::multiply_up_to(const TruncatedElement& o, int max_degree) const {
    check_compatible(o);
    TruncatedElement out(dim_, legs_, std::min(cap_, o.cap_));
    const int limit = std::min(out.cap_, max_degree);
    for (const auto& [ma, ca] : terms_) {
        const int room = limit - ma.degree();
        if (room < 0) break;
        for (const auto& [mb, cb] : o.terms_) {
            if (mb.degree() > room) break;
            out.add_term(ma * mb, ca * cb);
        }
    }
    return out;
}

TruncatedElement TruncatedElement::times_monomial(const Monomial& m, const Rational& c) const {
    TruncatedElement out(dim_, legs_, cap_);
    if (sgn(c) == 0) return out;
    const int room = cap_ - m.degree();
    for (const auto& [ma, ca] : terms_) {
        if (ma.degree() > room) break;
        out.terms_.emplace_hint(out.terms_.end(), ma * m, ca * c);
    }
    return out;
}

int TruncatedElement::filtration_degree() const {
    return terms_.empty() ? kInfiniteDegree : terms_.begin()->first.degree();
}

int TruncatedElement::top_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

TruncatedElement TruncatedElement::graded_component(int n) const {
    TruncatedElement out(dim_, legs_, cap_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == n) out.terms_.emplace_hint(out.terms_.end(), m, c);
    return out;
}

TruncatedElement TruncatedElement::truncated(int new_cap) const {
    TruncatedElement out(dim_, legs_, new_cap);
    for (const auto& [m, c] : terms_) {
        if (m.degree() > new_cap) break;
        out.terms_.emplace_hint(out.terms_.end(), m, c);
    }
    return out;
}

TruncatedElement TruncatedElement::derivative(int v) const {
    TruncatedElement out(dim_, legs_, cap_);
    for (const auto& [m, c] : terms_) {
        const int e = m.exponent(v);
        if (e == 0) continue;
        Monomial n = m;
        n.set_exponent(v, e - 1);
        out.add_term(n, c * e);
    }
    return out;
}

std::string TruncatedElement::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << to_fraction_string(c);
        for (int l = 0; l < legs_; ++l) {
            os << (l == 0 ? " " : "|");
            bool any = false;
            for (int i = 0; i < dim_; ++i) {
                const int e = m.exponent(l * dim_ + i);
                if (e == 0) continue;
                any = true;
                os << (names.empty() ? "x" + std::to_string(i + 1) : names[static_cast<std::size_t>(i)]);
                if (e > 1) os << '^' << e;
            }
            if (!any) os << '1';
        }
    }
    return os.str();
}

} // namespace qtlift

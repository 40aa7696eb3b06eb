#include "qtlift/formalgroup.hpp"

#include <algorithm>
#include <set>

#include "qtlift/bch.hpp"
#include "qtlift/enveloping.hpp"
#include "qtlift/errors.hpp"

namespace qtlift {

namespace {

// Element of g* (x) O, one coefficient per dual basis vector.
struct DualVector {
    std::vector<TruncatedElement> c;

    DualVector operator+(const DualVector& o) const {
        DualVector r = *this;
        for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
        return r;
    }
    DualVector operator-(const DualVector& o) const {
        DualVector r = *this;
        for (std::size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
        return r;
    }
    DualVector operator*(const Rational& s) const {
        DualVector r = *this;
        for (auto& e : r.c) e *= s;
        return r;
    }
};

// Exponent vectors of d variables with total degree in [lo, hi], graded order.
std::vector<Exponents> exponent_vectors(int d, int lo, int hi) {
    std::vector<Exponents> out;
    Exponents e(static_cast<std::size_t>(d), 0);
    auto rec = [&](auto&& self, int v, int remaining) -> void {
        if (v == d - 1) {
            e[static_cast<std::size_t>(v)] = remaining;
            out.push_back(e);
            return;
        }
        for (int k = remaining; k >= 0; --k) {
            e[static_cast<std::size_t>(v)] = k;
            self(self, v + 1, remaining - k);
        }
    };
    for (int n = lo; n <= hi; ++n) rec(rec, 0, n);
    return out;
}

Monomial monomial_of(const Exponents& e) { return Monomial::from_exponents(e); }

} // namespace

Monomial leg_part(const Monomial& m, int dim, int leg) { return m.slice(leg * dim, dim); }

AlgebraContext::AlgebraContext(const LieBialgebra& lb, int truncation, ContextOptions opts)
    : lb_(lb), dual_(dual_bracket(lb, !opts.unchecked_dual)), n_(truncation) {
    if (truncation < 1) throw PreconditionError("truncation degree must be positive");
    if (3 * lb.dim() > Monomial::kMaxVars) throw PreconditionError("dimension too large for three-leg elements");
    build_coproduct();
    build_bivector();
    if (opts.cross_check_degree > 0 && !opts.unchecked_dual) cross_check(std::min(opts.cross_check_degree, n_));
}

TruncatedElement AlgebraContext::zero(int legs) const { return TruncatedElement(dim(), legs, n_); }

TruncatedElement AlgebraContext::one(int legs) const { return TruncatedElement::constant(dim(), legs, n_, 1); }

TruncatedElement AlgebraContext::generator(int legs, int leg, int i) const {
    return TruncatedElement::generator(dim(), legs, n_, leg, i);
}

TruncatedElement AlgebraContext::r_element() const {
    TruncatedElement f = zero(2);
    const int d = dim();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Monomial m;
            m.set_exponent(i, 1);
            m.set_exponent(d + j, 1);
            f.add_term(m, lb_.r()(i, j));
        }
    return f;
}

std::vector<Monomial> AlgebraContext::basis(int legs, int cap) const {
    return monomial_basis(legs * dim(), 0, cap);
}

std::vector<Monomial> AlgebraContext::basis_of_degree(int legs, int degree) const {
    return monomial_basis(legs * dim(), degree, degree);
}

void AlgebraContext::check(const TruncatedElement& f) const {
    if (f.dim() != dim()) throw ContextMismatch("element dimension differs from the context");
    if (f.cap() > n_) throw ContextMismatch("element truncation exceeds the context");
}

void AlgebraContext::build_coproduct() {
    const int d = dim();
    const Tensor3& s = dual_.bracket_star;
    DualVector x, y, zero_vec;
    for (int a = 0; a < d; ++a) {
        x.c.push_back(generator(2, 0, a));
        y.c.push_back(generator(2, 1, a));
        zero_vec.c.push_back(zero(2));
    }
    auto bracket = [&](const DualVector& p, const DualVector& q) {
        DualVector out = zero_vec;
        for (int a = 0; a < d; ++a) {
            if (p.c[a].is_zero()) continue;
            for (int b = 0; b < d; ++b) {
                if (q.c[b].is_zero()) continue;
                bool any = false;
                for (int k = 0; k < d && !any; ++k) any = sgn(s(a, b, k)) != 0;
                if (!any) continue;
                const TruncatedElement prod = p.c[a] * q.c[b];
                for (int k = 0; k < d; ++k)
                    if (sgn(s(a, b, k)) != 0) out.c[k] += prod * s(a, b, k);
            }
        }
        return out;
    };
    const std::vector<DualVector> z = bch::components(x, y, n_, zero_vec, bracket);

    std::vector<TruncatedElement> gen(static_cast<std::size_t>(d), zero(2));
    for (std::size_t n = 1; n < z.size(); ++n)
        for (int k = 0; k < d; ++k) gen[k] += z[n].c[k];

    coproduct_.emplace(Monomial{}, one(2));
    for (const Monomial& m : basis(1, n_)) {
        if (m.degree() == 0) continue;
        int v = 0;
        while (m.exponent(v) == 0) ++v;
        if (m.degree() == 1) {
            coproduct_.emplace(m, gen[v]);
            continue;
        }
        Monomial rest = m;
        rest.set_exponent(v, m.exponent(v) - 1);
        coproduct_.emplace(m, coproduct_.at(rest) * gen[v]);
    }
}

void AlgebraContext::build_bivector() {
    const int d = dim();
    bivector_.assign(static_cast<std::size_t>(d) * d, zero(1));
    if (lb_.bracket().is_zero()) return;
    EnvelopingAlgebra env(dual_.bracket_star, lb_.bracket(), n_);

    // degree-one part of sym_inverse on a PBW word, i.e. the pairing with x_1..x_d
    std::map<Word, std::vector<Rational>> linear_cache;
    auto linear_part = [&](const Word& w) -> const std::vector<Rational>& {
        if (auto it = linear_cache.find(w); it != linear_cache.end()) return it->second;
        std::vector<Rational> v(static_cast<std::size_t>(d));
        if (!w.empty()) {
            const SymPolynomial p = env.sym_inverse(PbwElement::word(w));
            for (int i = 0; i < d; ++i) {
                Exponents e(static_cast<std::size_t>(d), 0);
                e[static_cast<std::size_t>(i)] = 1;
                if (auto it = p.find(e); it != p.end()) v[static_cast<std::size_t>(i)] = it->second;
            }
        }
        return linear_cache.emplace(w, std::move(v)).first->second;
    };

    // coefficient of x^C in {x_i, x_j} is <x_i (x) x_j, delta_U(Sym xi^C)> / C!
    for (const Exponents& c : exponent_vectors(d, 1, n_)) {
        const PbwTensor t = env.copoisson_cobracket(env.sym_map(c));
        if (t.is_zero()) continue;
        std::vector<Rational> acc(static_cast<std::size_t>(d) * d);
        for (const auto& [key, coeff] : t.terms()) {
            const auto& p = linear_part(key.first);
            const auto& q = linear_part(key.second);
            for (int i = 0; i < d; ++i) {
                if (sgn(p[i]) == 0) continue;
                for (int j = 0; j < d; ++j)
                    if (sgn(q[j]) != 0) acc[static_cast<std::size_t>(i) * d + j] += coeff * p[i] * q[j];
            }
        }
        const Rational norm = exponent_factorial(c);
        const Monomial m = monomial_of(c);
        for (std::size_t k = 0; k < acc.size(); ++k)
            if (sgn(acc[k]) != 0) bivector_[k].add_term(m, acc[k] / norm);
    }
}

void AlgebraContext::cross_check(int degree) {
    const int d = dim();
    EnvelopingAlgebra env(dual_.bracket_star, lb_.bracket(), n_);
    const std::vector<Exponents> mons = exponent_vectors(d, 0, degree);
    for (const Exponents& a : mons) {
        const PbwElement sa = env.sym_map(a);
        for (const Exponents& b : mons) {
            if (total_degree(a) + total_degree(b) > degree) continue;
            const SymPolynomial q = env.sym_inverse(env.multiply(sa, env.sym_map(b)));
            Monomial ab;
            for (int i = 0; i < d; ++i) {
                ab.set_exponent(i, a[static_cast<std::size_t>(i)]);
                ab.set_exponent(d + i, b[static_cast<std::size_t>(i)]);
            }
            const Rational ab_fact = exponent_factorial(a) * exponent_factorial(b);
            for (const Exponents& c : mons) {
                auto it = q.find(c);
                const Rational expected = it == q.end() ? Rational(0) : it->second * exponent_factorial(c) / ab_fact;
                if (coproduct_of(monomial_of(c)).coefficient(ab) != expected)
                    throw InternalError("coproduct cross-check failed: CBH and U(g*) models disagree");
            }
        }
    }
    cross_checked_ = degree;
}

const TruncatedElement& AlgebraContext::coproduct_of(const Monomial& m) const {
    auto it = coproduct_.find(m);
    if (it == coproduct_.end()) throw PreconditionError("monomial outside the truncation");
    return it->second;
}

const TruncatedElement& AlgebraContext::bivector(int i, int j) const {
    return bivector_.at(static_cast<std::size_t>(i) * dim() + j);
}

TruncatedElement AlgebraContext::multiply(const TruncatedElement& f, const TruncatedElement& g) const {
    check(f);
    check(g);
    return f * g;
}

TruncatedElement AlgebraContext::poisson(const TruncatedElement& f, const TruncatedElement& g) const {
    check(f);
    check(g);
    if (f.legs() != g.legs()) throw ContextMismatch("Poisson bracket of elements with different leg counts");
    const int d = dim(), k = f.legs();
    const int cap = std::min(f.cap(), g.cap());
    TruncatedElement out(d, k, cap);
    if (f.is_zero() || g.is_zero() || lb_.bracket().is_zero()) return out;
    for (int l = 0; l < k; ++l) {
        std::vector<TruncatedElement> dg;
        for (int j = 0; j < d; ++j) dg.push_back(g.derivative(l * d + j));
        for (int i = 0; i < d; ++i) {
            const TruncatedElement fi = f.derivative(l * d + i);
            if (fi.is_zero()) continue;
            const int room = cap - fi.filtration_degree();
            if (room < 0) continue;
            TruncatedElement h(d, k, cap);
            for (int j = 0; j < d; ++j) {
                if (dg[j].is_zero()) continue;
                const TruncatedElement& pij = bivector(i, j);
                if (pij.is_zero()) continue;
                TruncatedElement placed(d, k, cap);
                for (const auto& [m, c] : pij.terms()) placed.add_term(m.shifted(l * d), c);
                h += dg[j].multiply_up_to(placed, room);
            }
            out += fi.multiply_up_to(h, cap);
        }
    }
    return out;
}

TruncatedElement AlgebraContext::coproduct_on_leg(const TruncatedElement& f, int leg) const {
    check(f);
    const int d = dim(), k = f.legs();
    if (leg < 0 || leg >= k) throw PreconditionError("leg out of range");
    TruncatedElement out(d, k + 1, f.cap());
    for (const auto& [m, c] : f.terms()) {
        const Monomial a = leg_part(m, d, leg);
        // the other legs, with those after `leg` moved up by one slot
        Monomial base;
        for (int l = 0; l < k; ++l) {
            if (l == leg) continue;
            const int to = l < leg ? l : l + 1;
            for (int i = 0; i < d; ++i) base.set_exponent(to * d + i, m.exponent(l * d + i));
        }
        const int room = f.cap() - base.degree();
        for (const auto& [t, tc] : coproduct_of(a).terms()) {
            if (t.degree() > room) break;
            out.add_term(base * t.shifted(leg * d), c * tc);
        }
    }
    return out;
}

TruncatedElement counit_on_leg(const TruncatedElement& f, int leg) {
    const int d = f.dim(), k = f.legs();
    if (leg < 0 || leg >= k) throw PreconditionError("leg out of range");
    if (k == 1) {
        return TruncatedElement::constant(d, 1, f.cap(), f.constant_term());
    }
    TruncatedElement out(d, k - 1, f.cap());
    for (const auto& [m, c] : f.terms()) {
        if (leg_part(m, d, leg).degree() != 0) continue;
        Monomial n;
        for (int l = 0; l < k; ++l) {
            if (l == leg) continue;
            const int to = l < leg ? l : l - 1;
            for (int i = 0; i < d; ++i) n.set_exponent(to * d + i, m.exponent(l * d + i));
        }
        out.add_term(n, c);
    }
    return out;
}

TruncatedElement insert(const TruncatedElement& f, const std::vector<int>& target, int m) {
    const int d = f.dim(), k = f.legs();
    if (static_cast<int>(target.size()) != k) throw PreconditionError("leg map has wrong length");
    std::set<int> seen;
    for (int t : target) {
        if (t < 0 || t >= m) throw PreconditionError("leg map target out of range");
        if (!seen.insert(t).second) throw PreconditionError("leg map is not injective");
    }
    TruncatedElement out(d, m, f.cap());
    for (const auto& [mono, c] : f.terms()) {
        Monomial n;
        for (int l = 0; l < k; ++l)
            for (int i = 0; i < d; ++i) n.set_exponent(target[l] * d + i, mono.exponent(l * d + i));
        out.add_term(n, c);
    }
    return out;
}

} // namespace qtlift

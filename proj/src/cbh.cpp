#include "qtlift/cbh.hpp"

#include <algorithm>

#include "qtlift/bch.hpp"
#include "qtlift/errors.hpp"

namespace qtlift {

namespace {

void require_m2(const TruncatedElement& f, const char* what) {
    if (f.filtration_degree() < 2) throw PreconditionError(std::string(what) + " must lie in m^2");
}

} // namespace

TruncatedOperator::TruncatedOperator(int dim, int legs, int cap, int shift)
    : dim_(dim), legs_(legs), cap_(cap), shift_(shift) {}

TruncatedOperator TruncatedOperator::identity(const AlgebraContext& ctx, int legs) {
    TruncatedOperator op(ctx.dim(), legs, ctx.truncation(), 0);
    for (const Monomial& m : ctx.basis(legs, ctx.truncation()))
        op.columns_.emplace(m, TruncatedElement::monomial(ctx.dim(), legs, ctx.truncation(), m));
    return op;
}

TruncatedElement TruncatedOperator::column(const Monomial& m) const {
    auto it = columns_.find(m);
    if (it == columns_.end()) return TruncatedElement(dim_, legs_, cap_);
    return it->second;
}

void TruncatedOperator::set_column(const Monomial& m, TruncatedElement image) {
    if (image.dim() != dim_ || image.legs() != legs_) throw ContextMismatch("column lives in a different algebra");
    if (image.is_zero()) {
        columns_.erase(m);
        return;
    }
    columns_.insert_or_assign(m, std::move(image));
}

TruncatedElement TruncatedOperator::apply(const TruncatedElement& f) const {
    if (f.dim() != dim_ || f.legs() != legs_) throw ContextMismatch("operator applied to an element of another algebra");
    TruncatedElement out(dim_, legs_, std::min(cap_, f.cap()));
    for (const auto& [m, c] : f.terms()) {
        auto it = columns_.find(m);
        if (it == columns_.end()) continue;
        for (const auto& [n, v] : it->second.terms()) out.add_term(n, c * v);
    }
    return out;
}

int TruncatedOperator::measured_shift() const {
    int s = kInfiniteDegree;
    for (const auto& [m, img] : columns_)
        if (!img.is_zero()) s = std::min(s, img.filtration_degree() - m.degree());
    return s;
}

bool TruncatedOperator::is_zero() const {
    return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.second.is_zero(); });
}

TruncatedOperator operator-(const TruncatedOperator& a, const TruncatedOperator& b) {
    if (a.dim_ != b.dim_ || a.legs_ != b.legs_) throw ContextMismatch("operators on different algebras");
    TruncatedOperator out(a.dim_, a.legs_, std::min(a.cap_, b.cap_), std::min(a.shift_, b.shift_));
    out.columns_ = a.columns_;
    for (const auto& [m, img] : b.columns_) {
        TruncatedElement col = out.column(m) - img;
        out.set_column(m, std::move(col));
    }
    out.shift_ = std::min(out.measured_shift(), out.cap_ + 1);
    return out;
}

TruncatedOperator operator+(const TruncatedOperator& a, const TruncatedOperator& b) {
    if (a.dim_ != b.dim_ || a.legs_ != b.legs_) throw ContextMismatch("operators on different algebras");
    TruncatedOperator out(a.dim_, a.legs_, std::min(a.cap_, b.cap_), std::min(a.shift_, b.shift_));
    out.columns_ = a.columns_;
    for (const auto& [m, img] : b.columns_) {
        TruncatedElement col = out.column(m) + img;
        out.set_column(m, std::move(col));
    }
    return out;
}

TruncatedOperator compose(const TruncatedOperator& a, const TruncatedOperator& b) {
    if (a.dim_ != b.dim_ || a.legs_ != b.legs_) throw ContextMismatch("operators on different algebras");
    TruncatedOperator out(a.dim_, a.legs_, std::min(a.cap_, b.cap_), a.shift_ + b.shift_);
    for (const auto& [m, img] : b.columns_) out.set_column(m, a.apply(img));
    return out;
}

bool operator==(const TruncatedOperator& a, const TruncatedOperator& b) { return (a - b).is_zero(); }

std::vector<TruncatedElement> star_components(const AlgebraContext& ctx, const TruncatedElement& f,
                                              const TruncatedElement& g, int max_order) {
    ctx.check(f);
    ctx.check(g);
    if (f.legs() != g.legs()) throw ContextMismatch("star of elements with different leg counts");
    require_m2(f, "left star operand");
    require_m2(g, "right star operand");
    const int cap = std::min(f.cap(), g.cap());
    const TruncatedElement zero(ctx.dim(), f.legs(), cap);
    auto bracket = [&](const TruncatedElement& a, const TruncatedElement& b) { return ctx.poisson(a, b); };
    return bch::components(f.truncated(cap), g.truncated(cap), max_order, zero, bracket);
}

TruncatedElement star(const AlgebraContext& ctx, const TruncatedElement& f, const TruncatedElement& g) {
    const int cap = std::min(f.cap(), g.cap());
    // B_k lands in m^{k+1}, so k <= cap - 1 suffices
    const auto z = star_components(ctx, f, g, std::max(cap - 1, 1));
    TruncatedElement out(ctx.dim(), f.legs(), cap);
    for (const auto& t : z) out += t;
    return out;
}

TruncatedElement bk_term(const AlgebraContext& ctx, int k, const TruncatedElement& f, const TruncatedElement& g) {
    if (k < 1) throw PreconditionError("CBH term index must be positive");
    return star_components(ctx, f, g, k)[static_cast<std::size_t>(k)];
}

TruncatedOperator hamiltonian(const AlgebraContext& ctx, const TruncatedElement& rho) {
    ctx.check(rho);
    require_m2(rho, "Hamiltonian");
    const int cap = ctx.truncation();
    const int shift = std::min(rho.filtration_degree() - 1, cap + 1);
    TruncatedOperator v(ctx.dim(), rho.legs(), cap, shift);
    for (const Monomial& m : ctx.basis(rho.legs(), cap))
        v.set_column(m, ctx.poisson(rho, TruncatedElement::monomial(ctx.dim(), rho.legs(), cap, m)));
    return v;
}

TruncatedOperator exp_operator(const TruncatedOperator& d) {
    if (d.shift() < 1) throw PreconditionError("exponential needs a derivation raising the filtration");
    TruncatedOperator out(d.dim(), d.legs(), d.cap(), 0);
    for (const Monomial& m : monomial_basis(d.dim() * d.legs(), 0, d.cap())) {
        TruncatedElement term = TruncatedElement::monomial(d.dim(), d.legs(), d.cap(), m);
        TruncatedElement sum = term;
        for (int k = 1; !term.is_zero(); ++k) {
            term = d.apply(term) * Rational(1, k);
            sum += term;
        }
        out.set_column(m, std::move(sum));
    }
    return out;
}

TruncatedElement star_conjugate(const AlgebraContext& ctx, const TruncatedElement& rho, const TruncatedElement& f) {
    ctx.check(rho);
    ctx.check(f);
    require_m2(rho, "Hamiltonian");
    if (rho.legs() != f.legs()) throw ContextMismatch("conjugation across different leg counts");
    TruncatedElement out = f;
    TruncatedElement term = f;
    for (int m = 1; !term.is_zero(); ++m) {
        term = ctx.poisson(rho, term) * Rational(1, m);
        out += term;
    }
    return out;
}

} // namespace qtlift

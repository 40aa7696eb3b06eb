#ifndef QTLIFT_CBH_HPP
#define QTLIFT_CBH_HPP

#include <map>
#include <vector>

#include "qtlift/formalgroup.hpp"

namespace qtlift {

/// Linear endomorphism of O_{(G*)^legs} / m^{cap+1}, stored column by column on the
/// monomial basis. `shift` is the declared filtration shift: m^a is sent into m^{a+shift}.
class TruncatedOperator {
public:
    TruncatedOperator() = default;
    TruncatedOperator(int dim, int legs, int cap, int shift);

    static TruncatedOperator identity(const AlgebraContext& ctx, int legs);

    int dim() const noexcept { return dim_; }
    int legs() const noexcept { return legs_; }
    int cap() const noexcept { return cap_; }
    int shift() const noexcept { return shift_; }

    /// Image of a basis monomial; zero if the column was never set.
    TruncatedElement column(const Monomial& m) const;
    void set_column(const Monomial& m, TruncatedElement image);
    const std::map<Monomial, TruncatedElement>& columns() const noexcept { return columns_; }

    TruncatedElement apply(const TruncatedElement& f) const;
    TruncatedElement operator()(const TruncatedElement& f) const { return apply(f); }

    /// Smallest deg(image(b)) - deg(b) over basis monomials; kInfiniteDegree for zero.
    int measured_shift() const;
    bool respects_shift() const { return measured_shift() >= shift_; }
    bool is_zero() const;

    friend TruncatedOperator operator-(const TruncatedOperator& a, const TruncatedOperator& b);
    friend TruncatedOperator operator+(const TruncatedOperator& a, const TruncatedOperator& b);
    /// (a o b)(f) = a(b(f)).
    friend TruncatedOperator compose(const TruncatedOperator& a, const TruncatedOperator& b);
    friend bool operator==(const TruncatedOperator& a, const TruncatedOperator& b);

private:
    int dim_ = 0;
    int legs_ = 0;
    int cap_ = 0;
    int shift_ = 0;
    std::map<Monomial, TruncatedElement> columns_;
};

/// Homogeneous CBH terms B_0..B_max (B_0 = 0, B_1 = f + g, B_2 = {f,g}/2) in the Poisson bracket.
std::vector<TruncatedElement> star_components(const AlgebraContext& ctx, const TruncatedElement& f,
                                              const TruncatedElement& g, int max_order);

/// f * g = sum_k B_k(f, g), truncated. Requires filtration degree >= 2 for both operands.
TruncatedElement star(const AlgebraContext& ctx, const TruncatedElement& f, const TruncatedElement& g);

/// B_k(f, g) alone.
TruncatedElement bk_term(const AlgebraContext& ctx, int k, const TruncatedElement& f, const TruncatedElement& g);

/// V_rho = {rho, -} on the full monomial basis of rho's leg count.
TruncatedOperator hamiltonian(const AlgebraContext& ctx, const TruncatedElement& rho);

/// sum_m D^m / m!; the series is finite because D raises the filtration.
TruncatedOperator exp_operator(const TruncatedOperator& d);

/// exp(V_rho)(f), evaluated on f directly. This is the adjoint action rho * f * (-rho).
TruncatedElement star_conjugate(const AlgebraContext& ctx, const TruncatedElement& rho, const TruncatedElement& f);

} // namespace qtlift

#endif

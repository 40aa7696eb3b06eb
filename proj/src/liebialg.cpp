#include "qtlift/liebialg.hpp"

#include <algorithm>

#include "qtlift/errors.hpp"

namespace qtlift {

namespace {

// Orientation of g* relative to delta; see dual_bracket().
constexpr int kDualSign = -1;

std::size_t count_nonzero(const std::vector<Rational>& v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](const Rational& x) { return sgn(x) != 0; }));
}

// Antisymmetry residual c(i,j,k) + c(j,i,k), including the diagonal.
std::vector<Rational> antisymmetry_residual(const Tensor3& c) {
    const int d = c.dim();
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(d) * d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) out.push_back(c(i, j, k) + c(j, i, k));
    return out;
}

// Transpose delta into a bracket on g*: b(i,j,k) = gamma(k,i,j).
Tensor3 transpose_cobracket(const Tensor3& gamma) {
    const int d = gamma.dim();
    Tensor3 b(d);
    for (int k = 0; k < d; ++k)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) b(i, j, k) = gamma(k, i, j);
    return b;
}

// delta([x,y]) - x.delta(y) + y.delta(x) on basis pairs, with x.T = [x(x)1 + 1(x)x, T].
std::vector<Rational> cocycle_residual(const Tensor3& c, const Tensor3& gamma) {
    const int d = c.dim();
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(d) * d * d * d);
    // act(x, t)(a,b) = sum_p c(x,p,a) t(p,b) + c(x,p,b) t(a,p)
    auto act = [&](int x, int y, int a, int b) {
        Rational s;
        for (int p = 0; p < d; ++p) {
            s += c(x, p, a) * gamma(y, p, b);
            s += c(x, p, b) * gamma(y, a, p);
        }
        return s;
    };
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b) {
                    Rational s;
                    for (int k = 0; k < d; ++k) s += c(x, y, k) * gamma(k, a, b);
                    s -= act(x, y, a, b);
                    s += act(y, x, a, b);
                    out.push_back(s);
                }
    return out;
}

} // namespace

bool Tensor3::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

std::size_t Tensor3::nonzero_count() const { return count_nonzero(data_); }

bool SquareMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

SquareMatrix SquareMatrix::transposed() const {
    SquareMatrix t(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

LieBialgebra::LieBialgebra(Tensor3 bracket, SquareMatrix r, std::vector<std::string> basis_names)
    : bracket_(std::move(bracket)), r_(std::move(r)), names_(std::move(basis_names)) {
    const int d = bracket_.dim();
    if (d <= 0) throw InputError("Lie algebra dimension must be positive");
    if (r_.dim() != d) throw InputError("r must be a " + std::to_string(d) + "x" + std::to_string(d) + " matrix");
    if (names_.empty()) {
        for (int i = 0; i < d; ++i) names_.push_back("e" + std::to_string(i + 1));
    } else if (static_cast<int>(names_.size()) != d) {
        throw InputError("basis name count does not match dimension");
    }
    cobracket_ = cobracket_from_r(bracket_, r_);
}

bool ValidationCheck::passed() const { return nonzero_count() == 0; }
std::size_t ValidationCheck::nonzero_count() const { return count_nonzero(residual); }

bool ValidationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck& c) { return c.passed(); });
}

const ValidationCheck* ValidationReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::optional<std::string> ValidationReport::first_failure() const {
    for (const auto& c : checks)
        if (!c.passed()) return c.name;
    return std::nullopt;
}

std::vector<Rational> lie_bracket(const Tensor3& c, const std::vector<Rational>& x, const std::vector<Rational>& y) {
    const int d = c.dim();
    std::vector<Rational> z(d);
    for (int i = 0; i < d; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (int j = 0; j < d; ++j) {
            if (sgn(y[j]) == 0) continue;
            Rational w = x[i] * y[j];
            for (int k = 0; k < d; ++k)
                if (sgn(c(i, j, k)) != 0) z[k] += w * c(i, j, k);
        }
    }
    return z;
}

std::vector<Rational> jacobi_residual(const Tensor3& c) {
    const int d = c.dim();
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(d) * d * d * d);
    // [[e_i,e_j],e_k] + cyclic, coefficient on e_l
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) {
                    Rational s;
                    for (int p = 0; p < d; ++p) {
                        s += c(i, j, p) * c(p, k, l);
                        s += c(j, k, p) * c(p, i, l);
                        s += c(k, i, p) * c(p, j, l);
                    }
                    out.push_back(s);
                }
    return out;
}

Tensor3 cobracket_from_r(const Tensor3& c, const SquareMatrix& r) {
    const int d = c.dim();
    Tensor3 gamma(d);
    // [r, x(x)1] = sum r(a,j) [e_a, x] (x) e_j ; [r, 1(x)x] = sum r(i,b) e_i (x) [e_b, x]
    for (int k = 0; k < d; ++k)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                Rational s;
                for (int a = 0; a < d; ++a) s += r(a, j) * c(a, k, i);
                for (int b = 0; b < d; ++b) s += r(i, b) * c(b, k, j);
                gamma(k, i, j) = s;
            }
    return gamma;
}

Tensor3 cybe_residual(const LieBialgebra& lb) {
    const int d = lb.dim();
    const Tensor3& c = lb.bracket();
    const SquareMatrix& r = lb.r();
    Tensor3 out(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            if (sgn(r(i, j)) == 0) continue;
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) {
                    if (sgn(r(k, l)) == 0) continue;
                    Rational w = r(i, j) * r(k, l);
                    for (int p = 0; p < d; ++p) {
                        // [r12, r13]: [e_i,e_k] (x) e_j (x) e_l
                        if (sgn(c(i, k, p)) != 0) out(p, j, l) += w * c(i, k, p);
                        // [r12, r23]: e_i (x) [e_j,e_k] (x) e_l
                        if (sgn(c(j, k, p)) != 0) out(i, p, l) += w * c(j, k, p);
                        // [r13, r23]: e_i (x) e_k (x) [e_j,e_l]
                        if (sgn(c(j, l, p)) != 0) out(i, k, p) += w * c(j, l, p);
                    }
                }
        }
    return out;
}

Tensor3 invariance_residual(const LieBialgebra& lb) {
    const int d = lb.dim();
    SquareMatrix t(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) t(i, j) = lb.r()(i, j) + lb.r()(j, i);
    return cobracket_from_r(lb.bracket(), t);
}

ValidationReport validate_bialgebra(const LieBialgebra& lb) {
    ValidationReport rep;
    const Tensor3& c = lb.bracket();
    const Tensor3 dual = transpose_cobracket(lb.cobracket());
    rep.checks.push_back({"antisymmetry", antisymmetry_residual(c)});
    rep.checks.push_back({"jacobi", jacobi_residual(c)});
    rep.checks.push_back({"coantisymmetry", antisymmetry_residual(dual)});
    rep.checks.push_back({"cojacobi", jacobi_residual(dual)});
    rep.checks.push_back({"cocycle", cocycle_residual(c, lb.cobracket())});
    return rep;
}

ValidationReport validate_quasitriangular(const LieBialgebra& lb) {
    ValidationReport rep = validate_bialgebra(lb);
    rep.checks.push_back({"cybe", cybe_residual(lb).data()});
    rep.checks.push_back({"invariance", invariance_residual(lb).data()});
    return rep;
}

DualLieAlgebra dual_bracket(const LieBialgebra& lb, bool check_cojacobi) {
    Tensor3 b = transpose_cobracket(lb.cobracket());
    if (check_cojacobi && count_nonzero(jacobi_residual(b)) != 0)
        throw ValidationError("cobracket violates co-Jacobi; g* is not a Lie algebra");
    if (kDualSign < 0)
        for (int i = 0; i < b.dim(); ++i)
            for (int j = 0; j < b.dim(); ++j)
                for (int k = 0; k < b.dim(); ++k) b(i, j, k) = -b(i, j, k);
    return {b.dim(), std::move(b)};
}

} // namespace qtlift

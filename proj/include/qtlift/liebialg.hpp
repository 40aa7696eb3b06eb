#ifndef QTLIFT_LIEBIALG_HPP
#define QTLIFT_LIEBIALG_HPP

#include <optional>
#include <string>
#include <vector>

#include "qtlift/rational.hpp"

namespace qtlift {

/// Dense rank-3 tensor over a d-dimensional index space, T(i,j,k).
class Tensor3 {
public:
    Tensor3() = default;
    explicit Tensor3(int dim) : dim_(dim), data_(static_cast<std::size_t>(dim) * dim * dim) {}

    int dim() const noexcept { return dim_; }
    Rational& operator()(int i, int j, int k) { return data_[index(i, j, k)]; }
    const Rational& operator()(int i, int j, int k) const { return data_[index(i, j, k)]; }

    bool is_zero() const;
    std::size_t nonzero_count() const;
    const std::vector<Rational>& data() const noexcept { return data_; }

    friend bool operator==(const Tensor3&, const Tensor3&) = default;

private:
    std::size_t index(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * dim_ + j) * dim_ + k;
    }
    int dim_ = 0;
    std::vector<Rational> data_;
};

/// Dense d x d rational matrix M(i,j).
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(int dim) : dim_(dim), data_(static_cast<std::size_t>(dim) * dim) {}

    int dim() const noexcept { return dim_; }
    Rational& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * dim_ + j]; }
    const Rational& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * dim_ + j]; }
    bool is_zero() const;
    SquareMatrix transposed() const;

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    int dim_ = 0;
    std::vector<Rational> data_;
};

/// The input datum (g, r): structure constants [e_i,e_j] = sum_k c(i,j,k) e_k and
/// r = sum r(i,j) e_i (x) e_j. The cobracket delta(e_k) = sum gamma(k,i,j) e_i (x) e_j
/// is derived from r as delta(x) = [r, x(x)1 + 1(x)x] when the object is built.
class LieBialgebra {
public:
    /// Throws InputError on shape mismatch. Performs no algebraic validation.
    LieBialgebra(Tensor3 bracket, SquareMatrix r, std::vector<std::string> basis_names = {});

    int dim() const noexcept { return bracket_.dim(); }
    const std::vector<std::string>& basis_names() const noexcept { return names_; }
    const Tensor3& bracket() const noexcept { return bracket_; }
    const SquareMatrix& r() const noexcept { return r_; }
    const Tensor3& cobracket() const noexcept { return cobracket_; }

    friend bool operator==(const LieBialgebra& a, const LieBialgebra& b) {
        return a.bracket_ == b.bracket_ && a.r_ == b.r_ && a.names_ == b.names_;
    }

private:
    Tensor3 bracket_;
    SquareMatrix r_;
    Tensor3 cobracket_;
    std::vector<std::string> names_;
};

/// Lie algebra structure on g* in the dual basis: [xi_i, xi_j] = sum_k bracket_star(i,j,k) xi_k.
struct DualLieAlgebra {
    int dim = 0;
    Tensor3 bracket_star;
};

/// One named exact residual; passes iff every entry is zero.
struct ValidationCheck {
    std::string name;
    std::vector<Rational> residual;

    bool passed() const;
    std::size_t nonzero_count() const;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;

    bool passed() const;
    const ValidationCheck* find(const std::string& name) const;
    std::optional<std::string> first_failure() const;
};

/// [e_i, e_j] seen as a vector; convenience for tests and the WX route.
std::vector<Rational> lie_bracket(const Tensor3& c, const std::vector<Rational>& x, const std::vector<Rational>& y);

/// Lie bialgebra axioms: antisymmetry, Jacobi, cobracket antisymmetry, co-Jacobi and
/// the 1-cocycle condition of delta.
ValidationReport validate_bialgebra(const LieBialgebra& lb);

/// Full gate run before any construction: the Lie bialgebra axioms plus CYBE and
/// ad-invariance of r + r^{21}.
ValidationReport validate_quasitriangular(const LieBialgebra& lb);

/// [r12,r13] + [r12,r23] + [r13,r23] as a tensor in g (x) g (x) g.
Tensor3 cybe_residual(const LieBialgebra& lb);

/// gamma(k,i,j) = coefficient of e_i (x) e_j in [r, e_k (x) 1 + 1 (x) e_k].
Tensor3 cobracket_from_r(const Tensor3& bracket, const SquareMatrix& r);

/// [t, e_k (x) 1 + 1 (x) e_k] for t = r + r^{21}, flattened as (k, i, j).
Tensor3 invariance_residual(const LieBialgebra& lb);

/// Tangent Lie algebra of the dual formal group G*. Its bracket is the transpose of
/// the opposite cobracket, <[xi,eta], x> = -<xi (x) eta, delta(x)>, which is the
/// orientation under which Delta^op = exp(V_rho) o Delta holds with delta = [r, .].
/// Throws ValidationError when co-Jacobi fails, unless check_cojacobi is false.
DualLieAlgebra dual_bracket(const LieBialgebra& lb, bool check_cojacobi = true);

/// Jacobi residual J(i,j,k,l) of a structure tensor, flattened.
std::vector<Rational> jacobi_residual(const Tensor3& c);

} // namespace qtlift

#endif

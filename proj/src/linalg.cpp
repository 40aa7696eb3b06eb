#include "qtlift/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "qtlift/errors.hpp"

namespace qtlift::linalg {

std::vector<Rational> Matrix::apply(std::span<const Rational> x) const {
    if (x.size() != cols_) throw ContextMismatch("matrix/vector size mismatch");
    std::vector<Rational> y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Rational acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) {
            const Rational& a = (*this)(r, c);
            if (!is_zero(a) && !is_zero(x[c])) acc += a * x[c];
        }
        y[r] = acc;
    }
    return y;
}

namespace {

using IntRow = std::vector<mpz_class>;

// Scales a rational row to a primitive-free integer row (denominators cleared).
IntRow clear_denominators(const Matrix& a, std::span<const Rational> b, std::size_t r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < a.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).get_den_mpz_t());
    if (!b.empty()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), b[r].get_den_mpz_t());
    IntRow row(a.cols() + 1);
    for (std::size_t c = 0; c < a.cols(); ++c) row[c] = a(r, c).get_num() * (l / a(r, c).get_den());
    if (!b.empty()) row[a.cols()] = b[r].get_num() * (l / b[r].get_den());
    return row;
}

struct Echelon {
    std::vector<IntRow> m;
    std::vector<std::size_t> pivot_cols;  // pivot_cols[i] is the pivot of row i
};

Echelon bareiss(std::vector<IntRow> m, std::size_t ncols, const SolveOptions& opts) {
    const std::size_t nrows = m.size();
    Echelon e;
    mpz_class prev = 1;
    std::size_t prow = 0;
    for (std::size_t step = 0; step < ncols && prow < nrows; ++step) {
        const std::size_t col = opts.reverse_columns ? ncols - 1 - step : step;
        std::size_t pick = nrows;
        for (std::size_t i = prow; i < nrows; ++i) {
            if (m[i][col] != 0) {
                pick = i;
                if (!opts.last_row_pivot) break;
            }
        }
        if (pick == nrows) continue;
        std::swap(m[prow], m[pick]);
        const mpz_class& piv = m[prow][col];
        for (std::size_t i = prow + 1; i < nrows; ++i) {
            const mpz_class lead = m[i][col];
            for (std::size_t j = 0; j < m[i].size(); ++j) {
                mpz_class v = piv * m[i][j] - lead * m[prow][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = std::move(v);
            }
        }
        prev = m[prow][col];
        e.pivot_cols.push_back(col);
        ++prow;
    }
    e.m = std::move(m);
    return e;
}

} // namespace

Solution solve(const Matrix& a, std::span<const Rational> b, const SolveOptions& opts) {
    if (b.size() != a.rows()) throw ContextMismatch("rhs size mismatch");
    std::vector<IntRow> rows;
    rows.reserve(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) rows.push_back(clear_denominators(a, b, r));
    Echelon e = bareiss(std::move(rows), a.cols(), opts);

    Solution s;
    s.rank = e.pivot_cols.size();
    s.pivots = e.pivot_cols;
    s.consistent = true;
    for (std::size_t i = s.rank; i < e.m.size(); ++i) {
        if (e.m[i][a.cols()] != 0) s.consistent = false;
    }
    s.x.assign(a.cols(), Rational(0));
    // Pivot rows are in echelon order w.r.t. the elimination column order, so back
    // substitution runs over them in reverse.
    for (std::size_t k = s.rank; k-- > 0;) {
        const IntRow& row = e.m[k];
        const std::size_t pc = e.pivot_cols[k];
        Rational acc(row[a.cols()]);
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (c == pc || row[c] == 0 || is_zero(s.x[c])) continue;
            acc -= Rational(row[c]) * s.x[c];
        }
        s.x[pc] = acc / Rational(row[pc]);
    }
    std::vector<Rational> ax = a.apply(s.x);
    s.residual.resize(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) s.residual[r] = b[r] - ax[r];
    if (s.consistent && std::any_of(s.residual.begin(), s.residual.end(), [](const Rational& q) { return !is_zero(q); })) {
        throw InternalError("linear solve produced a nonzero residual on a consistent system");
    }
    return s;
}

std::size_t rank(const Matrix& a) {
    std::vector<IntRow> rows;
    rows.reserve(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) rows.push_back(clear_denominators(a, {}, r));
    for (auto& row : rows) row.pop_back();
    return bareiss(std::move(rows), a.cols(), {}).pivot_cols.size();
}

} // namespace qtlift::linalg

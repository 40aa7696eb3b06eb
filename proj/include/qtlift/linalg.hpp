#ifndef QTLIFT_LINALG_HPP
#define QTLIFT_LINALG_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "qtlift/rational.hpp"

namespace qtlift::linalg {

/// Dense row-major rational matrix. Only used on small graded blocks.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Rational> apply(std::span<const Rational> x) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

// Pivoting choices only change which representative is returned for
// under-determined systems; rank and consistency never depend on them.
struct SolveOptions {
    bool reverse_columns = false;   // eliminate columns right-to-left
    bool last_row_pivot = false;    // pick the last eligible row as pivot
};

struct Solution {
    bool consistent = false;
    std::size_t rank = 0;
    std::vector<Rational> x;          // free variables set to zero
    std::vector<std::size_t> pivots;  // pivot columns
    std::vector<Rational> residual;   // b - A x
};

/// Fraction-free (Bareiss) row echelon elimination of [A | b] over the integers after
/// clearing denominators row by row, followed by rational back substitution.
Solution solve(const Matrix& a, std::span<const Rational> b, const SolveOptions& opts = {});

std::size_t rank(const Matrix& a);

/// Dimension of the kernel, i.e. cols - rank.
inline std::size_t nullity(const Matrix& a) { return a.cols() - rank(a); }

} // namespace qtlift::linalg

#endif

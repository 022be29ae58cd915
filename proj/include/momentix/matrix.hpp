#pragma once

#include "momentix/rational.hpp"

#include <cstddef>
#include <ostream>
#include <vector>

namespace momentix {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    static RationalMatrix identity(std::size_t order);
    static RationalMatrix diagonal(const std::vector<Rational>& entries);
    static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RationalMatrix transpose() const;
    /// Leading principal submatrix of the given order.
    RationalMatrix leading(std::size_t order) const;
    /// The matrix with row `row` and column `col` removed.
    RationalMatrix minor_matrix(std::size_t row, std::size_t col) const;

    bool is_lower_triangular() const;
    bool has_unit_diagonal() const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

/// Exact determinant by fraction-free (Bareiss) elimination. Rows are first
/// scaled to integers; row swaps are used when a pivot vanishes.
Rational determinant(const RationalMatrix& m);

/// Inverse of a unit lower-triangular matrix by forward substitution.
RationalMatrix invert_unit_lower(const RationalMatrix& lower);

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m);

}  // namespace momentix

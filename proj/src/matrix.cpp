#include "momentix/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace momentix {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t order) {
    RationalMatrix m(order, order);
    for (std::size_t i = 0; i < order; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::diagonal(const std::vector<Rational>& entries) {
    RationalMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    RationalMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RationalMatrix RationalMatrix::leading(std::size_t order) const {
    if (order > rows_ || order > cols_) throw std::out_of_range("leading submatrix larger than matrix");
    RationalMatrix m(order, order);
    for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = 0; j < order; ++j) m(i, j) = (*this)(i, j);
    return m;
}

RationalMatrix RationalMatrix::minor_matrix(std::size_t row, std::size_t col) const {
    if (row >= rows_ || col >= cols_) throw std::out_of_range("minor index outside matrix");
    RationalMatrix m(rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, r = 0; i < rows_; ++i) {
        if (i == row) continue;
        for (std::size_t j = 0, c = 0; j < cols_; ++j) {
            if (j == col) continue;
            m(r, c++) = (*this)(i, j);
        }
        ++r;
    }
    return m;
}

bool RationalMatrix::is_lower_triangular() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != 0) return false;
    return true;
}

bool RationalMatrix::has_unit_diagonal() const {
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i)
        if ((*this)(i, i) != 1) return false;
    return true;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimensions do not agree");
    RationalMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    }
    return c;
}

Rational determinant(const RationalMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;

    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    Integer scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Integer row_lcm = 1;
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).get_num() * (row_lcm / m(i, j).get_den());
        scale *= row_lcm;
    }

    int sign = 1;
    Integer previous = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
            }
            a[i][k] = 0;
        }
        previous = a[k][k];
    }
    Rational det(a[n - 1][n - 1] * sign, scale);
    det.canonicalize();
    return det;
}

RationalMatrix invert_unit_lower(const RationalMatrix& lower) {
    if (!lower.is_square() || !lower.is_lower_triangular() || !lower.has_unit_diagonal()) {
        throw std::invalid_argument("matrix is not unit lower-triangular");
    }
    const std::size_t n = lower.rows();
    RationalMatrix inv(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        inv(col, col) = 1;
        for (std::size_t i = col + 1; i < n; ++i) {
            Rational acc;
            for (std::size_t k = col; k < i; ++k) acc -= lower(i, k) * inv(k, col);
            inv(i, col) = acc;
        }
    }
    return inv;
}

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).get_str();
        os << '\n';
    }
    return os;
}

}  // namespace momentix

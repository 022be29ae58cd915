#pragma once

#include "momentix/jfraction.hpp"
#include "momentix/matrix.hpp"
#include "momentix/series.hpp"

#include <cstddef>
#include <vector>

namespace momentix {

/// Dense univariate polynomial; the zero polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs) : Polynomial(std::vector<Rational>(coeffs)) {}

    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    Rational operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// Row n holds the coefficients a(n,0..n) of the monic polynomial P_n.
class CoefficientArray {
public:
    /// Throws std::invalid_argument unless every row n has n+1 entries and a(n,n) = 1.
    explicit CoefficientArray(std::vector<std::vector<Rational>> rows);
    static CoefficientArray from_matrix(const RationalMatrix& lower);

    std::size_t size() const noexcept { return rows_.size(); }
    const std::vector<Rational>& row(std::size_t n) const { return rows_.at(n); }
    const Rational& operator()(std::size_t n, std::size_t k) const { return rows_.at(n).at(k); }
    Polynomial polynomial(std::size_t n) const { return Polynomial(row(n)); }
    const std::vector<std::vector<Rational>>& rows() const noexcept { return rows_; }
    RationalMatrix to_matrix() const;

    friend bool operator==(const CoefficientArray&, const CoefficientArray&) = default;

private:
    std::vector<std::vector<Rational>> rows_;
};

/// P_{n+1} = (x - alpha_n) P_n - lambda_n P_{n-1} with P_{-1} = 0, P_0 = 1; rows 0..N.
CoefficientArray polys_from_recurrence(const JFraction& j, std::size_t N);

/// P_n = D_n(x) / D_{n-1}, where D_n(x) is the moment determinant whose last
/// row is 1, x, ..., x^n and D_{-1} = 1. Coefficients come from cofactors.
CoefficientArray polys_from_determinants(const Sequence& s, std::size_t N);

/// Inverse of the unit lower-triangular factor of the Hankel LDL^T.
CoefficientArray polys_from_ldl(const Sequence& s, std::size_t N);

/// L(sum c_j x^j) = sum c_j mu_j.
Rational apply_functional(const Sequence& s, const Polynomial& p);

/// L(P_k^2) = sum_{i=0}^{2k} (sum_{j=0}^{i} a(k,j) a(k,i-j)) mu_i.
Rational functional_P_squared(const Sequence& s, const CoefficientArray& a, std::size_t k);

/// h_n = prod_{k=0}^{n} L(P_k^2) for n = 0..N.
std::vector<Rational> hankel_via_coefficients(const Sequence& s, const CoefficientArray& a, std::size_t N);

/// L(P_m P_n) from the full polynomial product.
Rational orthogonality_check(const Sequence& s, const CoefficientArray& a, std::size_t m, std::size_t n);

}  // namespace momentix

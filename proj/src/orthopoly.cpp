#include "momentix/orthopoly.hpp"

#include "momentix/errors.hpp"
#include "momentix/hankel.hpp"

#include <algorithm>
#include <stdexcept>

namespace momentix {

namespace {

Polynomial combine(const Polynomial& a, const Polynomial& b, int sign) {
    std::vector<Rational> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = sign > 0 ? Rational(a[i] + b[i]) : Rational(a[i] - b[i]);
    return Polynomial(std::move(c));
}

void require_row(const CoefficientArray& a, std::size_t k) {
    if (k >= a.size()) {
        throw InsufficientTerms(k + 1, a.size());
    }
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, 1); }

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, -1); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    std::vector<Rational> out(p.coeffs_);
    for (auto& v : out) v *= c;
    return Polynomial(std::move(out));
}

CoefficientArray::CoefficientArray(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) {
    for (std::size_t n = 0; n < rows_.size(); ++n) {
        if (rows_[n].size() != n + 1) throw std::invalid_argument("coefficient row " + std::to_string(n) + " has wrong length");
        if (rows_[n][n] != 1) throw std::invalid_argument("coefficient row " + std::to_string(n) + " is not monic");
    }
}

CoefficientArray CoefficientArray::from_matrix(const RationalMatrix& lower) {
    std::vector<std::vector<Rational>> rows(lower.rows());
    for (std::size_t n = 0; n < lower.rows(); ++n)
        for (std::size_t k = 0; k <= n; ++k) rows[n].push_back(lower(n, k));
    return CoefficientArray(std::move(rows));
}

RationalMatrix CoefficientArray::to_matrix() const {
    RationalMatrix m(rows_.size(), rows_.size());
    for (std::size_t n = 0; n < rows_.size(); ++n)
        for (std::size_t k = 0; k <= n; ++k) m(n, k) = rows_[n][k];
    return m;
}

CoefficientArray polys_from_recurrence(const JFraction& j, std::size_t N) {
    if (j.alpha.size() < N || (N > 0 && j.lambda.size() < N - 1)) {
        throw InsufficientDepth("rows 0.." + std::to_string(N) + " need " + std::to_string(N) + " alphas and " +
                                std::to_string(N == 0 ? 0 : N - 1) + " lambdas");
    }
    const Polynomial x{0, 1};
    std::vector<std::vector<Rational>> rows;
    rows.reserve(N + 1);
    Polynomial previous;  // P_{-1}
    Polynomial current{1};
    rows.push_back(current.coeffs());
    for (std::size_t n = 0; n < N; ++n) {
        Polynomial next = (x - Polynomial{j.alpha[n]}) * current;
        if (n > 0) next = next - j.lambda[n - 1] * previous;
        previous = std::move(current);
        current = std::move(next);
        rows.push_back(current.coeffs());
    }
    return CoefficientArray(std::move(rows));
}

CoefficientArray polys_from_determinants(const Sequence& s, std::size_t N) {
    const std::size_t needed = N == 0 ? 1 : 2 * N;
    if (s.size() < needed) throw InsufficientTerms(needed, s.size());

    std::vector<std::vector<Rational>> rows;
    rows.reserve(N + 1);
    rows.push_back({Rational(1)});
    for (std::size_t n = 1; n <= N; ++n) {
        // Rows 0..n-1 of D_n(x) are (mu_i, ..., mu_{i+n}); the last row holds 1, x, ..., x^n.
        RationalMatrix moments(n, n + 1);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t c = 0; c <= n; ++c) moments(i, c) = s[i + c];

        const Rational previous = determinant(moments.leading(n));  // D_{n-1}
        if (previous == 0) throw SingularMinor(n - 1);

        std::vector<Rational> row(n + 1);
        for (std::size_t c = 0; c <= n; ++c) {
            RationalMatrix minor(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t cc = 0, dst = 0; cc <= n; ++cc)
                    if (cc != c) minor(i, dst++) = moments(i, cc);
            Rational cofactor = determinant(minor);
            if ((n + c) % 2 == 1) cofactor = -cofactor;
            row[c] = cofactor / previous;
        }
        rows.push_back(std::move(row));
    }
    return CoefficientArray(std::move(rows));
}

CoefficientArray polys_from_ldl(const Sequence& s, std::size_t N) {
    return CoefficientArray::from_matrix(invert_unit_lower(ldl_decompose(s, N).lower));
}

Rational apply_functional(const Sequence& s, const Polynomial& p) {
    if (p.degree() >= static_cast<long>(s.size())) {
        throw InsufficientTerms(static_cast<std::size_t>(p.degree()) + 1, s.size());
    }
    Rational acc;
    for (std::size_t j = 0; j < p.coeffs().size(); ++j) acc += p.coeffs()[j] * s[j];
    return acc;
}

Rational functional_P_squared(const Sequence& s, const CoefficientArray& a, std::size_t k) {
    require_row(a, k);
    if (s.size() < 2 * k + 1) throw InsufficientTerms(2 * k + 1, s.size());
    const std::vector<Rational>& row = a.row(k);

    // Self-convolution of row k, then the dot product with the moments.
    std::vector<Rational> square(2 * k + 1);
    for (std::size_t i = 0; i <= 2 * k; ++i) {
        const std::size_t lo = i > k ? i - k : 0;
        const std::size_t hi = std::min(i, k);
        for (std::size_t j = lo; j <= hi; ++j) square[i] += row[j] * row[i - j];
    }
    Rational acc;
    for (std::size_t i = 0; i <= 2 * k; ++i) acc += square[i] * s[i];
    return acc;
}

std::vector<Rational> hankel_via_coefficients(const Sequence& s, const CoefficientArray& a, std::size_t N) {
    if (s.size() < 2 * N + 1) throw InsufficientTerms(2 * N + 1, s.size());
    require_row(a, N);
    std::vector<Rational> h;
    h.reserve(N + 1);
    Rational product = 1;
    for (std::size_t k = 0; k <= N; ++k) {
        product *= functional_P_squared(s, a, k);
        h.push_back(product);
    }
    return h;
}

Rational orthogonality_check(const Sequence& s, const CoefficientArray& a, std::size_t m, std::size_t n) {
    require_row(a, std::max(m, n));
    if (m + n >= s.size()) throw InsufficientTerms(m + n + 1, s.size());
    return apply_functional(s, a.polynomial(m) * a.polynomial(n));
}

}  // namespace momentix

#pragma once

#include "momentix/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace momentix {

/// Finite prefix mu_0..mu_N of a sequence of exact rationals. Never empty.
class Sequence {
public:
    explicit Sequence(std::vector<Rational> terms);
    Sequence(std::initializer_list<Rational> terms);
    static Sequence from_integers(std::initializer_list<long> values);

    std::size_t size() const noexcept { return terms_.size(); }
    /// Truncation order N (index of the last term).
    std::size_t order() const noexcept { return terms_.size() - 1; }
    const Rational& operator[](std::size_t n) const { return terms_[n]; }
    const std::vector<Rational>& terms() const noexcept { return terms_; }
    /// First `count` terms; throws InsufficientTerms when too short.
    Sequence prefix(std::size_t count) const;

    friend bool operator==(const Sequence&, const Sequence&) = default;

private:
    std::vector<Rational> terms_;
};

/// Truncated formal power series. A series is either exact (a polynomial;
/// every coefficient beyond the stored ones is zero) or known through
/// x^precision and unknown beyond.
class PowerSeries {
public:
    static constexpr std::size_t kExact = std::numeric_limits<std::size_t>::max();

    /// The zero polynomial.
    PowerSeries() = default;
    static PowerSeries polynomial(std::vector<Rational> coeffs);
    /// Coefficients c_0..c_precision; missing ones are zero, extras dropped.
    static PowerSeries truncated(std::vector<Rational> coeffs, std::size_t precision);
    static PowerSeries constant(const Rational& c) { return polynomial({c}); }
    static PowerSeries x() { return polynomial({0, 1}); }

    bool is_exact() const noexcept { return precision_ == kExact; }
    std::size_t precision() const noexcept { return precision_; }
    /// Coefficient of x^n. Throws InsufficientPrecision beyond a finite precision.
    Rational coeff(std::size_t n) const;
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    /// Index of the first nonzero stored coefficient; kExact for zero.
    std::size_t valuation() const;
    /// Known-nonzero degree bound: stored coefficient count minus one.
    std::size_t stored_degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    bool is_zero() const noexcept { return coeffs_.empty() || valuation() == kExact; }

    /// Forget everything beyond x^order.
    PowerSeries truncate(std::size_t order) const;

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

private:
    std::vector<Rational> coeffs_;
    std::size_t precision_ = kExact;
};

/// True when a and b agree on every coefficient both know.
bool agree(const PowerSeries& a, const PowerSeries& b);

PowerSeries ps_add(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_sub(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_scale(const PowerSeries& a, const Rational& c);
PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_pow(const PowerSeries& a, unsigned exponent);

/// Quotient a/b. The result precision is min(Pa, Pb, order); dividing by a
/// non-constant polynomial needs a finite working order.
PowerSeries ps_div(const PowerSeries& a, const PowerSeries& b, std::size_t order = PowerSeries::kExact);

/// outer(inner(x)). With v the valuation of inner, the result is known
/// through min(P_outer * v, P_inner, order).
PowerSeries ps_compose(const PowerSeries& outer, const PowerSeries& inner,
                       std::size_t order = PowerSeries::kExact);

/// Compositional inverse of f, requiring f(0) = 0 and f'(0) = 1.
PowerSeries ps_revert(const PowerSeries& f, std::size_t order = PowerSeries::kExact);

/// p/q expanded through x^order.
PowerSeries rational_series(const std::vector<Rational>& numerator, const std::vector<Rational>& denominator,
                            std::size_t order);
/// e^(sign * x) through x^order.
PowerSeries exp_series(std::size_t order, int sign = 1);

enum class BinomialDirection { forward = 1, inverse = -1 };
/// forward: b_n = sum C(n,k) s_k; inverse: b_n = sum (-1)^(n-k) C(n,k) s_k.
Sequence binomial_transform(const Sequence& s, BinomialDirection direction);

enum class GfConversion { to_egf, to_ogf };
/// to_egf divides term n by n!; to_ogf multiplies by n!.
Sequence ogf_egf_convert(const Sequence& s, GfConversion direction);

Sequence sequence_from_series(const PowerSeries& ps, std::size_t order);

/// Whitespace- or comma-separated terms, `#` comment lines. Throws ParseError.
Sequence parse_sequence_text(std::string_view text);
std::string format_terms(const std::vector<Rational>& terms, std::string_view separator = ",");

}  // namespace momentix

#pragma once

#include "momentix/matrix.hpp"
#include "momentix/series.hpp"

#include <cstddef>
#include <string_view>

namespace momentix {

enum class RiordanKind { ordinary, exponential };

/// A Riordan array (g, f) or exponential Riordan array [g, f], kept as its
/// generating series. For the exponential kind g and f are the exponential
/// generating functions; the group law is the same on both kinds.
class RiordanArray {
public:
    /// Requires g(0) = 1, f(0) = 0 and f'(0) = 1.
    RiordanArray(PowerSeries g, PowerSeries f, RiordanKind kind = RiordanKind::ordinary);

    const PowerSeries& g() const noexcept { return g_; }
    const PowerSeries& f() const noexcept { return f_; }
    RiordanKind kind() const noexcept { return kind_; }
    /// Largest N for which the entries through row N are determined.
    std::size_t precision() const noexcept;

    static RiordanArray identity(RiordanKind kind = RiordanKind::ordinary);

private:
    PowerSeries g_;
    PowerSeries f_;
    RiordanKind kind_;
};

/// Rows 0..N. Ordinary: a(n,k) = [x^n] g f^k. Exponential: a(n,k) = n!/k! [x^n] g f^k.
RationalMatrix riordan_entries(const RiordanArray& r, std::size_t N);

/// (g, f)(h, l) = (g (h o f), l o f).
RiordanArray riordan_multiply(const RiordanArray& a, const RiordanArray& b);

/// (g, f)^{-1} = (1 / (g o fbar), fbar), through min(precision, order).
RiordanArray riordan_inverse(const RiordanArray& r, std::size_t order = PowerSeries::kExact);

/// Entrywise equality of the materialized matrices through the common precision.
bool riordan_equal(const RiordanArray& a, const RiordanArray& b);

/// Stock series for the arrays that appear in the examples, expanded through x^order.
namespace stock {
PowerSeries one_over_one_minus_x(std::size_t order);          // 1/(1-x)
PowerSeries one_over_one_plus_x(std::size_t order);           // 1/(1+x)
PowerSeries x_over_one_minus_x(std::size_t order);            // x/(1-x)
PowerSeries x_over_one_plus_x(std::size_t order);             // x/(1+x)
PowerSeries x_over_one_plus_x_squared(std::size_t order);     // x/(1+x)^2
PowerSeries one_minus_x_over_one_plus_x(std::size_t order);   // (1-x)/(1+x)
PowerSeries one_over_one_plus_2x(std::size_t order);          // 1/(1+2x)
PowerSeries x_over_one_plus_3x_plus_2x2(std::size_t order);   // x/(1+3x+2x^2)
PowerSeries exp(std::size_t order);                           // e^x
PowerSeries exp_negative(std::size_t order);                  // e^{-x}
}  // namespace stock

/// Parses a series expression such as `1/(1-x)`, `x/(1+x)^2` or `E/(1+x)`
/// and expands it through x^order.
///
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*
///   unary  := '-' unary | power
///   power  := atom ('^' integer)?
///   atom   := integer | 'x' | 'E' | '(' expr ')'
///
/// `E` is the exponential series e^x. Throws ParseError.
PowerSeries parse_series_expression(std::string_view text, std::size_t order);

}  // namespace momentix

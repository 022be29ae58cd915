#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace momentix {

using Integer = mpz_class;
/// Always canonical: lowest terms, positive denominator.
using Rational = mpq_class;

/// Parses `p` or `p/q` (optional sign, q > 0). Throws ParseError.
Rational parse_rational(std::string_view text, std::size_t line = 0);
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// C(n, k) for any integers; zero unless 0 <= k <= n.
Integer binomial(long n, long k);
Integer factorial(unsigned long n);
/// The indicator 0^n: 1 at n = 0, otherwise 0.
inline int zero_power(long n) { return n == 0 ? 1 : 0; }

Rational power(const Rational& base, unsigned long exponent);

std::vector<Rational> to_rationals(std::span<const long> values);
bool is_integer(const Rational& value);

}  // namespace momentix

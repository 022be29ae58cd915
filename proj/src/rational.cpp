#include "momentix/rational.hpp"

#include "momentix/errors.hpp"

#include <cctype>

namespace momentix {

namespace {

bool is_digit_run(std::string_view text) {
    if (text.empty()) return false;
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text, std::size_t line) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!is_digit_run(num) || !is_digit_run(den)) {
        throw ParseError(line, "malformed term '" + std::string(text) + "'");
    }
    Integer denominator(std::string(den), 10);
    if (denominator == 0) {
        throw ParseError(line, "zero denominator in '" + std::string(text) + "'");
    }
    Rational value(Integer(std::string(num), 10), denominator);
    value.canonicalize();
    if (negative) value = -value;
    return value;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

std::string to_string(const Integer& value) { return value.get_str(10); }

Integer binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    Integer result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return result;
}

Integer factorial(unsigned long n) {
    Integer result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return result;
}

Rational power(const Rational& base, unsigned long exponent) {
    Rational result;
    mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
    return result;
}

std::vector<Rational> to_rationals(std::span<const long> values) {
    std::vector<Rational> out;
    out.reserve(values.size());
    for (long v : values) out.emplace_back(v);
    return out;
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace momentix

#include "momentix/riordan.hpp"

#include "momentix/errors.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

namespace momentix {

RiordanArray::RiordanArray(PowerSeries g, PowerSeries f, RiordanKind kind)
    : g_(std::move(g)), f_(std::move(f)), kind_(kind) {
    if (g_.coeff(0) != 1) throw std::invalid_argument("Riordan array needs g(0) = 1");
    if (f_.coeff(0) != 0) throw NotInvertible("Riordan array needs f(0) = 0");
    if (!f_.is_exact() && f_.precision() < 1) throw NotInvertible("Riordan array needs a known f'(0)");
    if (f_.coeff(1) != 1) throw NotInvertible("Riordan array needs f'(0) = 1");
}

std::size_t RiordanArray::precision() const noexcept { return std::min(g_.precision(), f_.precision()); }

RiordanArray RiordanArray::identity(RiordanKind kind) {
    return RiordanArray(PowerSeries::constant(1), PowerSeries::x(), kind);
}

RationalMatrix riordan_entries(const RiordanArray& r, std::size_t N) {
    if (r.precision() < N) {
        throw InsufficientPrecision("Riordan series known through x^" + std::to_string(r.precision()) +
                                    ", rows through " + std::to_string(N) + " requested");
    }
    RationalMatrix a(N + 1, N + 1);
    PowerSeries column = r.g().truncate(N);
    const PowerSeries f = r.f().truncate(N);
    for (std::size_t k = 0; k <= N; ++k) {
        for (std::size_t n = k; n <= N; ++n) a(n, k) = column.coeff(n);
        column = ps_mul(column, f);
    }
    if (r.kind() == RiordanKind::exponential) {
        for (std::size_t n = 0; n <= N; ++n) {
            const Integer n_fact = factorial(n);
            for (std::size_t k = 0; k <= n; ++k) {
                Rational scale(n_fact, factorial(k));
                scale.canonicalize();
                a(n, k) *= scale;
            }
        }
    }
    return a;
}

RiordanArray riordan_multiply(const RiordanArray& a, const RiordanArray& b) {
    if (a.kind() != b.kind()) throw KindMismatch();
    PowerSeries g = ps_mul(a.g(), ps_compose(b.g(), a.f()));
    PowerSeries f = ps_compose(b.f(), a.f());
    return RiordanArray(std::move(g), std::move(f), a.kind());
}

RiordanArray riordan_inverse(const RiordanArray& r, std::size_t order) {
    order = std::min(order, r.precision());
    PowerSeries fbar = ps_revert(r.f(), order);
    PowerSeries g = ps_div(PowerSeries::constant(1), ps_compose(r.g(), fbar, order), order);
    return RiordanArray(std::move(g), std::move(fbar), r.kind());
}

bool riordan_equal(const RiordanArray& a, const RiordanArray& b) {
    if (a.kind() != b.kind()) return false;
    std::size_t n = std::min(a.precision(), b.precision());
    if (n == PowerSeries::kExact) {
        n = std::max({a.g().stored_degree(), a.f().stored_degree(), b.g().stored_degree(), b.f().stored_degree()});
    }
    return riordan_entries(a, n) == riordan_entries(b, n);
}

namespace stock {

PowerSeries one_over_one_minus_x(std::size_t order) { return rational_series({1}, {1, -1}, order); }
PowerSeries one_over_one_plus_x(std::size_t order) { return rational_series({1}, {1, 1}, order); }
PowerSeries x_over_one_minus_x(std::size_t order) { return rational_series({0, 1}, {1, -1}, order); }
PowerSeries x_over_one_plus_x(std::size_t order) { return rational_series({0, 1}, {1, 1}, order); }
PowerSeries x_over_one_plus_x_squared(std::size_t order) { return rational_series({0, 1}, {1, 2, 1}, order); }
PowerSeries one_minus_x_over_one_plus_x(std::size_t order) { return rational_series({1, -1}, {1, 1}, order); }
PowerSeries one_over_one_plus_2x(std::size_t order) { return rational_series({1}, {1, 2}, order); }
PowerSeries x_over_one_plus_3x_plus_2x2(std::size_t order) { return rational_series({0, 1}, {1, 3, 2}, order); }
PowerSeries exp(std::size_t order) { return exp_series(order, 1); }
PowerSeries exp_negative(std::size_t order) { return exp_series(order, -1); }

}  // namespace stock

namespace {

// Recursive-descent evaluator for the grammar documented in the header.
class SeriesParser {
public:
    SeriesParser(std::string_view text, std::size_t order) : text_(text), order_(order) {}

    PowerSeries parse() {
        PowerSeries value = expression();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return value.truncate(order_);
    }

private:
    PowerSeries expression() {
        PowerSeries value = term();
        while (true) {
            if (accept('+')) {
                value = ps_add(value, term());
            } else if (accept('-')) {
                value = ps_sub(value, term());
            } else {
                return value;
            }
        }
    }

    PowerSeries term() {
        PowerSeries value = unary();
        while (true) {
            if (accept('*')) {
                value = ps_mul(value, unary()).truncate(order_);
            } else if (accept('/')) {
                const PowerSeries divisor = unary();
                try {
                    value = ps_div(value, divisor, order_);
                } catch (const DivisorNotUnit&) {
                    fail("divisor has zero constant term");
                }
            } else {
                return value;
            }
        }
    }

    PowerSeries unary() {
        if (accept('-')) return ps_scale(unary(), -1);
        return power();
    }

    PowerSeries power() {
        PowerSeries base = atom();
        if (accept('^')) {
            skip_space();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected an exponent");
            const unsigned long exponent = std::stoul(std::string(text_.substr(start, pos_ - start)));
            if (exponent > 4096) fail("exponent too large");
            base = ps_pow(base.truncate(order_), static_cast<unsigned>(exponent));
        }
        return base;
    }

    PowerSeries atom() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return PowerSeries::constant(Rational(Integer(std::string(text_.substr(start, pos_ - start)), 10)));
        }
        if (c == 'x') {
            ++pos_;
            return PowerSeries::x();
        }
        if (c == 'E') {
            ++pos_;
            return stock::exp(order_);
        }
        if (c == '(') {
            ++pos_;
            PowerSeries inner = expression();
            if (!accept(')')) fail("missing ')'");
            return inner;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(0, "series expression '" + std::string(text_) + "' at column " + std::to_string(pos_ + 1) +
                                ": " + what);
    }

    std::string_view text_;
    std::size_t order_;
    std::size_t pos_ = 0;
};

}  // namespace

PowerSeries parse_series_expression(std::string_view text, std::size_t order) {
    return SeriesParser(text, order).parse();
}

}  // namespace momentix

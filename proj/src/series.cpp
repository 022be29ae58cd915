#include "momentix/series.hpp"

#include "momentix/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace momentix {

namespace {

constexpr std::size_t kExact = PowerSeries::kExact;

std::size_t saturating_mul(std::size_t a, std::size_t b) {
    if (a == kExact || b == kExact) return kExact;
    if (a != 0 && b > (kExact - 1) / a) return kExact - 1;
    return a * b;
}

PowerSeries make(std::vector<Rational> coeffs, std::size_t precision) {
    return precision == kExact ? PowerSeries::polynomial(std::move(coeffs))
                               : PowerSeries::truncated(std::move(coeffs), precision);
}

// Dense product of a and b keeping terms through x^limit.
std::vector<Rational> mul_trunc(const std::vector<Rational>& a, const std::vector<Rational>& b, std::size_t limit) {
    if (a.empty() || b.empty()) return {};
    const std::size_t full = a.size() + b.size() - 1;
    const std::size_t len = limit == kExact ? full : std::min(full, limit + 1);
    std::vector<Rational> c(len);
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j < len; ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

bool is_separator(char c) { return c == ',' || c == ' ' || c == '\t' || c == '\r'; }

}  // namespace

Sequence::Sequence(std::vector<Rational> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw std::invalid_argument("a sequence needs at least one term");
}

Sequence::Sequence(std::initializer_list<Rational> terms) : Sequence(std::vector<Rational>(terms)) {}

Sequence Sequence::from_integers(std::initializer_list<long> values) {
    return Sequence(to_rationals(std::span<const long>(values.begin(), values.size())));
}

Sequence Sequence::prefix(std::size_t count) const {
    if (count > terms_.size()) throw InsufficientTerms(count, terms_.size());
    return Sequence(std::vector<Rational>(terms_.begin(), terms_.begin() + static_cast<std::ptrdiff_t>(count)));
}

PowerSeries PowerSeries::polynomial(std::vector<Rational> coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    PowerSeries ps;
    ps.coeffs_ = std::move(coeffs);
    ps.precision_ = kExact;
    return ps;
}

PowerSeries PowerSeries::truncated(std::vector<Rational> coeffs, std::size_t precision) {
    if (precision == kExact) return polynomial(std::move(coeffs));
    coeffs.resize(precision + 1);
    PowerSeries ps;
    ps.coeffs_ = std::move(coeffs);
    ps.precision_ = precision;
    return ps;
}

Rational PowerSeries::coeff(std::size_t n) const {
    if (!is_exact() && n > precision_) {
        throw InsufficientPrecision("coefficient x^" + std::to_string(n) + " is beyond precision " +
                                    std::to_string(precision_));
    }
    return n < coeffs_.size() ? coeffs_[n] : Rational(0);
}

std::size_t PowerSeries::valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return i;
    return kExact;
}

PowerSeries PowerSeries::truncate(std::size_t order) const {
    const std::size_t p = std::min(precision_, order);
    if (p == kExact) return *this;
    return truncated(coeffs_, p);
}

bool agree(const PowerSeries& a, const PowerSeries& b) {
    const std::size_t p = std::min(a.precision(), b.precision());
    const std::size_t last = p == kExact ? std::max(a.coeffs().size(), b.coeffs().size()) : p + 1;
    for (std::size_t n = 0; n < last; ++n)
        if (a.coeff(n) != b.coeff(n)) return false;
    return true;
}

PowerSeries ps_add(const PowerSeries& a, const PowerSeries& b) {
    const std::size_t p = std::min(a.precision(), b.precision());
    const std::size_t len = p == kExact ? std::max(a.coeffs().size(), b.coeffs().size()) : p + 1;
    std::vector<Rational> c(len);
    for (std::size_t n = 0; n < len; ++n) c[n] = a.coeff(n) + b.coeff(n);
    return make(std::move(c), p);
}

PowerSeries ps_scale(const PowerSeries& a, const Rational& c) {
    std::vector<Rational> out(a.coeffs());
    for (auto& v : out) v *= c;
    return make(std::move(out), a.precision());
}

PowerSeries ps_sub(const PowerSeries& a, const PowerSeries& b) { return ps_add(a, ps_scale(b, -1)); }

PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b) {
    const std::size_t p = std::min(a.precision(), b.precision());
    return make(mul_trunc(a.coeffs(), b.coeffs(), p), p);
}

PowerSeries ps_pow(const PowerSeries& a, unsigned exponent) {
    PowerSeries result = a.is_exact() ? PowerSeries::constant(1) : PowerSeries::truncated({1}, a.precision());
    PowerSeries base = a;
    while (exponent > 0) {
        if (exponent & 1u) result = ps_mul(result, base);
        exponent >>= 1;
        if (exponent > 0) base = ps_mul(base, base);
    }
    return result;
}

PowerSeries ps_div(const PowerSeries& a, const PowerSeries& b, std::size_t order) {
    if (b.coeffs().empty() || b.coeffs()[0] == 0) throw DivisorNotUnit();
    const Rational& lead = b.coeffs()[0];
    const std::size_t p = std::min({a.precision(), b.precision(), order});
    if (p == kExact) {
        if (b.stored_degree() != 0) {
            throw InsufficientPrecision("dividing by a non-constant polynomial needs a working order");
        }
        return ps_scale(a, 1 / lead);
    }
    std::vector<Rational> q(p + 1);
    for (std::size_t n = 0; n <= p; ++n) {
        Rational acc = a.coeff(n);
        const std::size_t top = std::min(n, b.coeffs().size() - 1);
        for (std::size_t i = 1; i <= top; ++i) acc -= b.coeffs()[i] * q[n - i];
        q[n] = acc / lead;
    }
    return PowerSeries::truncated(std::move(q), p);
}

PowerSeries ps_compose(const PowerSeries& outer, const PowerSeries& inner, std::size_t order) {
    if (!inner.coeffs().empty() && inner.coeffs()[0] != 0) throw InnerNotNilpotent();

    std::size_t v = inner.valuation();
    if (v == kExact && !inner.is_exact()) v = inner.precision() + 1;

    const std::size_t p = std::min({saturating_mul(outer.precision(), v), inner.precision(), order});
    if (outer.coeffs().empty()) return make({}, p);

    std::size_t top = outer.is_exact() ? outer.coeffs().size() - 1 : outer.precision();
    if (p != kExact) top = std::min(top, p);

    // Horner: r = (...(o_top * inner + o_{top-1}) * inner + ...) + o_0
    std::vector<Rational> r{outer.coeff(top)};
    for (std::size_t i = top; i-- > 0;) {
        r = mul_trunc(r, inner.coeffs(), p);
        if (r.empty()) r.resize(1);
        r[0] += outer.coeff(i);
    }
    return make(std::move(r), p);
}

PowerSeries ps_revert(const PowerSeries& f, std::size_t order) {
    if (f.coeff(0) != 0) throw NotInvertible("series to revert must have zero constant term");
    if (!f.is_exact() && f.precision() < 1) throw NotInvertible("linear coefficient of the series is unknown");
    if (f.coeff(1) != 1) throw NotInvertible("series to revert must have unit linear coefficient");

    const std::size_t p = std::min(f.precision(), order);
    if (p == kExact) {
        if (f == PowerSeries::x()) return f;
        throw InsufficientPrecision("reverting a polynomial needs a working order");
    }

    // Fix g term by term: with f'(0) = 1, adding c x^n to g shifts [x^n] f(g) by c.
    std::vector<Rational> g(p + 1);
    if (p >= 1) g[1] = 1;
    for (std::size_t n = 2; n <= p; ++n) {
        const PowerSeries fg = ps_compose(f, PowerSeries::truncated(g, n), n);
        g[n] = -fg.coeff(n);
    }
    return PowerSeries::truncated(std::move(g), p);
}

PowerSeries rational_series(const std::vector<Rational>& numerator, const std::vector<Rational>& denominator,
                            std::size_t order) {
    return ps_div(PowerSeries::polynomial(numerator), PowerSeries::polynomial(denominator), order);
}

PowerSeries exp_series(std::size_t order, int sign) {
    std::vector<Rational> c(order + 1);
    Integer fact = 1;
    for (std::size_t n = 0; n <= order; ++n) {
        if (n > 0) fact *= static_cast<unsigned long>(n);
        c[n] = Rational((sign < 0 && n % 2 == 1) ? -1 : 1, fact);
        c[n].canonicalize();
    }
    return PowerSeries::truncated(std::move(c), order);
}

Sequence binomial_transform(const Sequence& s, BinomialDirection direction) {
    std::vector<Rational> out(s.size());
    for (std::size_t n = 0; n < s.size(); ++n) {
        Rational acc;
        for (std::size_t k = 0; k <= n; ++k) {
            Rational term = s[k] * binomial(static_cast<long>(n), static_cast<long>(k));
            if (direction == BinomialDirection::inverse && (n - k) % 2 == 1) term = -term;
            acc += term;
        }
        out[n] = acc;
    }
    return Sequence(std::move(out));
}

Sequence ogf_egf_convert(const Sequence& s, GfConversion direction) {
    std::vector<Rational> out(s.size());
    Integer fact = 1;
    for (std::size_t n = 0; n < s.size(); ++n) {
        if (n > 0) fact *= static_cast<unsigned long>(n);
        out[n] = direction == GfConversion::to_egf ? Rational(s[n] / fact) : Rational(s[n] * fact);
    }
    return Sequence(std::move(out));
}

Sequence sequence_from_series(const PowerSeries& ps, std::size_t order) {
    std::vector<Rational> out(order + 1);
    for (std::size_t n = 0; n <= order; ++n) out[n] = ps.coeff(n);
    return Sequence(std::move(out));
}

Sequence parse_sequence_text(std::string_view text) {
    std::vector<Rational> terms;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find('\n', start), text.size());
        std::string_view line = text.substr(start, end - start);
        ++line_no;
        start = end + 1;

        const std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || line[first] == '#') continue;

        std::size_t pos = 0;
        while (pos < line.size()) {
            while (pos < line.size() && is_separator(line[pos])) ++pos;
            std::size_t stop = pos;
            while (stop < line.size() && !is_separator(line[stop])) ++stop;
            if (stop > pos) terms.push_back(parse_rational(line.substr(pos, stop - pos), line_no));
            pos = stop;
        }
    }
    if (terms.empty()) throw ParseError(0, "no sequence terms found");
    return Sequence(std::move(terms));
}

std::string format_terms(const std::vector<Rational>& terms, std::string_view separator) {
    std::ostringstream os;
    for (std::size_t i = 0; i < terms.size(); ++i) os << (i ? separator : "") << terms[i].get_str();
    return os.str();
}

}  // namespace momentix

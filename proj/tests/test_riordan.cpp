#include "momentix/errors.hpp"
#include "momentix/riordan.hpp"

#include "oracles.hpp"
#include "test_helpers.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <random>

using namespace momentix;
using momentix::testing::frac;
using momentix::testing::Q;

namespace {

constexpr std::size_t kN = 8;

RationalMatrix triangle(std::size_t N, const std::function<Rational(long, long)>& entry) {
    RationalMatrix m(N + 1, N + 1);
    for (std::size_t n = 0; n <= N; ++n)
        for (std::size_t k = 0; k <= n; ++k) m(n, k) = entry(static_cast<long>(n), static_cast<long>(k));
    return m;
}

RationalMatrix pascal(std::size_t N) {
    return triangle(N, [](long n, long k) { return Rational(binomial(n, k)); });
}

RationalMatrix signed_pascal(std::size_t N) {
    return triangle(N, [](long n, long k) { return Rational((n - k) % 2 ? Integer(-binomial(n, k)) : binomial(n, k)); });
}

RiordanArray random_array(std::mt19937_64& rng, std::size_t N, RiordanKind kind) {
    std::vector<Rational> g(N + 1), f(N + 1);
    g[0] = 1;
    f[1] = 1;
    for (std::size_t i = 1; i <= N; ++i) g[i] = oracle::uniform(rng, -3, 3);
    for (std::size_t i = 2; i <= N; ++i) f[i] = oracle::uniform(rng, -3, 3);
    return RiordanArray(PowerSeries::truncated(g, N), PowerSeries::truncated(f, N), kind);
}

}  // namespace

TEST(RiordanEntries, Examples) {
    const RiordanArray pascal_ordinary(stock::one_over_one_minus_x(kN), stock::x_over_one_minus_x(kN));
    EXPECT_EQ(riordan_entries(pascal_ordinary, kN), pascal(kN));

    const RiordanArray pascal_exponential(stock::exp(kN), PowerSeries::x(), RiordanKind::exponential);
    EXPECT_EQ(riordan_entries(pascal_exponential, kN), pascal(kN));

    const RiordanArray catalan(stock::one_over_one_plus_x(kN), stock::x_over_one_plus_x_squared(kN));
    EXPECT_EQ(riordan_entries(catalan, kN), triangle(kN, [](long n, long k) {
                  return Rational((n - k) % 2 ? Integer(-binomial(n + k, 2 * k)) : binomial(n + k, 2 * k));
              }));
}

TEST(RiordanEntries, Errors) {
    const RiordanArray short_array(stock::one_over_one_minus_x(3), stock::x_over_one_minus_x(3));
    EXPECT_THROW(riordan_entries(short_array, 4), InsufficientPrecision);
    EXPECT_THROW(RiordanArray(PowerSeries::constant(2), PowerSeries::x()), std::invalid_argument);
    EXPECT_THROW(RiordanArray(PowerSeries::constant(1), PowerSeries::polynomial(Q({0, 2}))), NotInvertible);
    EXPECT_THROW(RiordanArray(PowerSeries::constant(1), PowerSeries::polynomial(Q({1, 1}))), NotInvertible);
}

TEST(RiordanMultiply, Examples) {
    const RiordanArray binomial_exp(stock::exp(kN), PowerSeries::x(), RiordanKind::exponential);
    const RiordanArray factorial_array(stock::one_over_one_plus_x(kN), stock::x_over_one_plus_x(kN), RiordanKind::exponential);
    const RiordanArray expected(ps_div(stock::exp(kN), PowerSeries::polynomial(Q({1, 1})), kN), stock::x_over_one_plus_x(kN),
                                RiordanKind::exponential);
    EXPECT_TRUE(riordan_equal(riordan_multiply(binomial_exp, factorial_array), expected));

    std::mt19937_64 rng(1);
    const RiordanArray some = random_array(rng, kN, RiordanKind::ordinary);
    EXPECT_TRUE(riordan_equal(riordan_multiply(some, RiordanArray::identity()), some));
    EXPECT_TRUE(riordan_equal(riordan_multiply(RiordanArray::identity(), some), some));

    const RiordanArray p(stock::one_over_one_minus_x(kN), stock::x_over_one_minus_x(kN));
    EXPECT_EQ(riordan_entries(riordan_multiply(p, p), kN), pascal(kN) * pascal(kN));

    EXPECT_THROW(riordan_multiply(p, binomial_exp), KindMismatch);
}

TEST(RiordanInverse, Examples) {
    const RiordanArray p(stock::one_over_one_minus_x(kN), stock::x_over_one_minus_x(kN));
    const RiordanArray p_inverse = riordan_inverse(p);
    // Inverse law gives (1/(1+x), x/(1+x)), with entries (-1)^(n-k) C(n,k).
    EXPECT_TRUE(riordan_equal(p_inverse, RiordanArray(stock::one_over_one_plus_x(kN), stock::x_over_one_plus_x(kN))));
    EXPECT_EQ(riordan_entries(p_inverse, kN), signed_pascal(kN));

    EXPECT_TRUE(riordan_equal(riordan_inverse(RiordanArray::identity()), RiordanArray::identity()));

    const RiordanArray b(stock::exp(kN), PowerSeries::x(), RiordanKind::exponential);
    const RiordanArray b_inverse = riordan_inverse(b);
    EXPECT_TRUE(riordan_equal(b_inverse, RiordanArray(stock::exp_negative(kN), PowerSeries::x(), RiordanKind::exponential)));
    EXPECT_EQ(riordan_entries(b_inverse, kN), signed_pascal(kN));
}

TEST(RiordanProperty, MatrixHomomorphismAndInverseLaw) {
    std::mt19937_64 rng(53);
    for (auto kind : {RiordanKind::ordinary, RiordanKind::exponential}) {
        for (int trial = 0; trial < 25; ++trial) {
            const std::size_t N = static_cast<std::size_t>(oracle::uniform(rng, 1, 10));
            const auto a = random_array(rng, N, kind);
            const auto b = random_array(rng, N, kind);
            EXPECT_EQ(riordan_entries(riordan_multiply(a, b), N), riordan_entries(a, N) * riordan_entries(b, N));
            EXPECT_EQ(riordan_entries(a, N) * riordan_entries(riordan_inverse(a), N), RationalMatrix::identity(N + 1));
            EXPECT_EQ(riordan_entries(riordan_inverse(a), N), invert_unit_lower(riordan_entries(a, N)));
        }
    }
}

TEST(RiordanProperty, ExponentialEntriesAreIntegers) {
    const std::size_t N = 10;
    const RiordanArray r(ps_div(stock::exp(N), PowerSeries::polynomial(Q({1, 1})), N), stock::x_over_one_plus_x(N),
                         RiordanKind::exponential);
    const auto m = riordan_entries(r, N);
    for (std::size_t n = 0; n <= N; ++n)
        for (std::size_t k = 0; k <= n; ++k) EXPECT_TRUE(is_integer(m(n, k))) << n << "," << k;
}

TEST(SeriesExpression, ParsesStockForms) {
    const std::size_t N = 6;
    EXPECT_EQ(parse_series_expression("1/(1-x)", N), stock::one_over_one_minus_x(N));
    EXPECT_EQ(parse_series_expression("x/(1+x)^2", N), stock::x_over_one_plus_x_squared(N));
    EXPECT_EQ(parse_series_expression("(1-x)/(1+x)", N), stock::one_minus_x_over_one_plus_x(N));
    EXPECT_EQ(parse_series_expression("x/(1+3*x+2*x^2)", N), stock::x_over_one_plus_3x_plus_2x2(N));
    EXPECT_EQ(parse_series_expression("1/E", N), stock::exp_negative(N));
    EXPECT_EQ(parse_series_expression("E/(1+x)", N), ps_div(stock::exp(N), PowerSeries::polynomial(Q({1, 1})), N));
    EXPECT_EQ(parse_series_expression(" - -x ", N), PowerSeries::x().truncate(N));
    EXPECT_EQ(parse_series_expression("x", N).precision(), N);
}

TEST(SeriesExpression, RejectsMalformedInput) {
    for (const char* bad : {"", "1/(1-x", "1/x", "y", "x^", "1 +", "2 x", "(1)(2)"}) {
        EXPECT_THROW(parse_series_expression(bad, 4), ParseError) << bad;
    }
}

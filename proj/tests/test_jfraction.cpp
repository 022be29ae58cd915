#include "momentix/catalog.hpp"
#include "momentix/errors.hpp"
#include "momentix/hankel.hpp"
#include "momentix/jfraction.hpp"

#include "oracles.hpp"
#include "test_helpers.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace momentix;
using momentix::catalog::SequenceName;
using momentix::testing::frac;
using momentix::testing::Q;
using momentix::testing::seq;

namespace {

JFraction random_jfraction(std::mt19937_64& rng, std::size_t depth) {
    JFraction j;
    for (std::size_t i = 0; i < depth; ++i) {
        j.alpha.emplace_back(oracle::uniform(rng, -5, 5));
        j.lambda.emplace_back(oracle::uniform(rng, 1, 5));
    }
    return j;
}

}  // namespace

TEST(ExtractJFraction, Examples) {
    const auto catalan = extract_jfraction(catalog::generate(SequenceName::catalan, 10));
    EXPECT_EQ(catalan.alpha, Q({1, 2, 2, 2, 2}));
    EXPECT_EQ(catalan.lambda, Q({1, 1, 1, 1, 1}));
    EXPECT_EQ(catalan.mu0, 1);

    const auto factorial = extract_jfraction(catalog::generate(SequenceName::factorial, 10));
    EXPECT_EQ(factorial.alpha, Q({1, 3, 5, 7, 9}));
    EXPECT_EQ(factorial.lambda, Q({1, 4, 9, 16, 25}));

    const auto derangement = extract_jfraction(catalog::generate(SequenceName::derangement, 10));
    EXPECT_EQ(derangement.alpha, Q({0, 2, 4, 6, 8}));
    EXPECT_EQ(derangement.lambda, Q({1, 4, 9, 16, 25}));
}

TEST(ExtractJFraction, DepthAccountingAndErrors) {
    EXPECT_EQ(extract_jfraction(seq({3})), (JFraction{{}, {}, 3}));
    // 2m+2 terms still give m coefficients of each kind
    EXPECT_EQ(extract_jfraction(seq({1, 1, 2, 5})).alpha.size(), 1u);
    try {
        extract_jfraction(seq({1, 1, 1, 1, 1}));
        FAIL() << "expected SingularMinor";
    } catch (const SingularMinor& e) {
        EXPECT_EQ(e.index(), 1u);
    }
}

TEST(ExtractJFraction, NonUnitMu0) {
    JFraction j{Q({2, -1}), Q({3, 1}), 5};
    const auto s = moments_from_jfraction(j, 4);
    EXPECT_EQ(extract_jfraction(s), j);
    EXPECT_EQ(hankel_transform(s), hankel_from_lambdas(j, 2));
}

TEST(MomentsFromJFraction, Examples) {
    EXPECT_EQ(moments_from_jfraction({Q({1, 2, 2}), Q({1, 1, 1}), 1}, 5), seq({1, 1, 2, 5, 14, 42}));
    EXPECT_EQ(moments_from_jfraction({Q({2, 2}), Q({2, 1}), 1}, 4), seq({1, 2, 6, 20, 70}));
    EXPECT_EQ(moments_from_jfraction({{}, {}, 7}, 0), seq({7}));
    EXPECT_THROW(moments_from_jfraction({Q({1}), {}, 1}, 2), InsufficientDepth);
    EXPECT_THROW(moments_from_jfraction({{}, {}, 1}, 1), InsufficientDepth);
}

TEST(MomentsFromJFraction, MatchesPathEnumerationOracle) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        JFraction j = random_jfraction(rng, 5);
        j.mu0 = oracle::uniform(rng, 1, 3);
        EXPECT_EQ(moments_from_jfraction(j, 10).terms(), oracle::motzkin_moments(j.alpha, j.lambda, j.mu0, 10));
    }
}

TEST(HankelFromLambdas, Examples) {
    EXPECT_EQ(hankel_from_lambdas({Q({2, 3, 3}), Q({2, 2, 2}), 1}, 3), Q({1, 2, 8, 64}));
    EXPECT_EQ(hankel_from_lambdas({{}, {}, 9}, 0), Q({9}));
    // factorial: direct evaluation 1, 1*1, 1*1^2*4, 1*1^3*4^2*9
    EXPECT_EQ(hankel_from_lambdas({Q({1, 3, 5}), Q({1, 4, 9}), 1}, 3), Q({1, 1, 4, 144}));
    EXPECT_THROW(hankel_from_lambdas({Q({1}), Q({1}), 1}, 2), InsufficientDepth);
}

TEST(CfSeries, Examples) {
    const JFraction catalan{Q({1, 2, 2, 2}), Q({1, 1, 1, 1}), 1};
    EXPECT_EQ(cf_series(catalan, 5), PowerSeries::truncated(Q({1, 1, 2, 5, 14, 42}), 5));
    EXPECT_EQ(cf_series({{}, {}, 4}, 0), PowerSeries::truncated(Q({4}), 0));
    const JFraction schroeder{Q({2, 3, 3}), Q({2, 2, 2}), 1};
    EXPECT_EQ(cf_series(schroeder, 4), PowerSeries::truncated(Q({1, 2, 6, 22, 90}), 4));
}

TEST(CfSeries, AgreesWithMomentRecurrence) {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 40; ++trial) {
        JFraction j = random_jfraction(rng, 5);
        j.mu0 = frac(oracle::uniform(rng, 1, 4), oracle::uniform(rng, 1, 3));
        for (std::size_t N : {0u, 1u, 4u, 7u, 10u}) {
            EXPECT_EQ(cf_series(j, N).coeffs(), moments_from_jfraction(j, N).terms());
        }
    }
}

TEST(JFractionProperty, RoundTripAndTripleAgreement) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t depth = static_cast<std::size_t>(oracle::uniform(rng, 0, 8));
        const JFraction j = random_jfraction(rng, depth);
        const Sequence s = moments_from_jfraction(j, 2 * depth);
        EXPECT_EQ(extract_jfraction(s), j);
        EXPECT_EQ(hankel_transform(s), hankel_from_lambdas(j, depth));
    }
}

TEST(JFractionProperty, BinomialTransformShiftsAlphaKeepsLambda) {
    for (auto name : catalog::kAllSequences) {
        const Sequence s = catalog::generate(name, 12);
        const JFraction base = extract_jfraction(s);
        for (auto [direction, shift] : {std::pair{BinomialDirection::forward, 1}, std::pair{BinomialDirection::inverse, -1}}) {
            const JFraction moved = extract_jfraction(binomial_transform(s, direction));
            EXPECT_EQ(moved.lambda, base.lambda) << catalog::name_of(name);
            for (std::size_t n = 0; n < base.alpha.size(); ++n) EXPECT_EQ(moved.alpha[n], base.alpha[n] + shift);
            EXPECT_EQ(hankel_transform(binomial_transform(s, direction)), hankel_transform(s));
        }
    }
}

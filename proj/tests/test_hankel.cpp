#include "momentix/catalog.hpp"
#include "momentix/errors.hpp"
#include "momentix/hankel.hpp"

#include "oracles.hpp"
#include "test_helpers.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace momentix;
using momentix::catalog::SequenceName;
using momentix::testing::frac;
using momentix::testing::Q;
using momentix::testing::seq;

TEST(HankelMatrix, Examples) {
    EXPECT_EQ(hankel_matrix(seq({1, 1, 2}), 1).to_matrix(), RationalMatrix::from_rows({Q({1, 1}), Q({1, 2})}));
    EXPECT_EQ(hankel_matrix(seq({7}), 0).to_matrix(), RationalMatrix::from_rows({Q({7})}));
    EXPECT_EQ(hankel_matrix(seq({1, 2, 6, 20, 70}), 2).to_matrix(),
              RationalMatrix::from_rows({Q({1, 2, 6}), Q({2, 6, 20}), Q({6, 20, 70})}));
    EXPECT_THROW(hankel_matrix(seq({1, 2, 6, 20}), 2), InsufficientTerms);

    const auto h = hankel_matrix(seq({1, 2, 3, 4, 5, 6, 7}), 3).to_matrix();
    EXPECT_EQ(h, h.transpose());
}

TEST(HankelDeterminant, Examples) {
    EXPECT_EQ(hankel_determinant(catalog::generate(SequenceName::catalan, 4), 2), 1);
    EXPECT_EQ(hankel_determinant(catalog::generate(SequenceName::central_binomial, 4), 2), 4);
    EXPECT_EQ(hankel_determinant(catalog::generate(SequenceName::schroeder, 4), 2), 8);
    EXPECT_THROW(hankel_determinant(seq({1, 2}), 1), InsufficientTerms);
}

TEST(HankelDeterminant, RationalTermsClearDenominators) {
    // mu = 1, 1/2, 1/3, 1/4, 1/5: Hilbert matrix of order 3, det 1/2160.
    const Sequence hilbert({Rational(1), frac(1, 2), frac(1, 3), frac(1, 4), frac(1, 5)});
    EXPECT_EQ(hankel_determinant(hilbert, 2), frac(1, 2160));
    EXPECT_EQ(hankel_determinant(hilbert, 2), oracle::cofactor_determinant(hankel_matrix(hilbert, 2).to_matrix()));
}

TEST(HankelDeterminant, MatchesCofactorOracleOnRandomInput) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 80; ++trial) {
        std::vector<Rational> terms(9);
        for (auto& t : terms) t = frac(oracle::uniform(rng, -6, 6), oracle::uniform(rng, 1, 3));
        const Sequence s(terms);
        for (std::size_t n = 0; n <= 4; ++n) {
            const auto m = hankel_matrix(s, n).to_matrix();
            EXPECT_EQ(hankel_determinant(s, n), oracle::cofactor_determinant(m));
            EXPECT_EQ(determinant(m.transpose()), determinant(m));
        }
    }
}

TEST(HankelTransform, Examples) {
    // prod_{i<=n} i!^2 evaluated directly: 1, 1, 4
    EXPECT_EQ(hankel_transform(seq({1, 1, 2, 6, 24})), Q({1, 1, 4}));
    EXPECT_EQ(hankel_transform(seq({1, 0, 1, 2, 9})), Q({1, 1, 4}));
    EXPECT_EQ(hankel_transform(seq({1, 1, 1})), Q({1, 0}));
    EXPECT_EQ(hankel_transform(seq({5})), Q({5}));
    // even length ignores the final term
    EXPECT_EQ(hankel_transform(seq({1, 1, 2, 5})), Q({1, 1}));
}

TEST(HankelTransform, ZeroMinorDoesNotPoisonNeighbours) {
    // h_1 = 0 but h_2 != 0
    const auto s = seq({1, 1, 1, 2, 3});
    const auto h = hankel_transform(s);
    ASSERT_EQ(h.size(), 3u);
    EXPECT_EQ(h[1], 0);
    EXPECT_EQ(h[2], oracle::cofactor_determinant(hankel_matrix(s, 2).to_matrix()));
    EXPECT_NE(h[2], 0);
}

TEST(LdlDecompose, Examples) {
    const auto central = ldl_decompose(catalog::generate(SequenceName::central_binomial, 4), 2);
    EXPECT_EQ(central.diagonal, Q({1, 2, 2}));
    const auto trivial = ldl_decompose(seq({3}), 0);
    EXPECT_EQ(trivial.lower, RationalMatrix::identity(1));
    EXPECT_EQ(trivial.diagonal, Q({3}));
    EXPECT_EQ(ldl_decompose(catalog::generate(SequenceName::factorial, 4), 2).diagonal, Q({1, 1, 4}));
}

TEST(LdlDecompose, ReportsFirstSingularMinor) {
    try {
        ldl_decompose(seq({1, 1, 1, 1, 1}), 2);
        FAIL() << "expected SingularMinor";
    } catch (const SingularMinor& e) {
        EXPECT_EQ(e.index(), 1u);
    }
    try {
        ldl_decompose(seq({0, 1, 1}), 1);
        FAIL() << "expected SingularMinor";
    } catch (const SingularMinor& e) {
        EXPECT_EQ(e.index(), 0u);
    }
}

TEST(LdlDecompose, ReconstructsAndMatchesMinorQuotients) {
    std::mt19937_64 rng(23);
    int checked = 0;
    while (checked < 60) {
        std::vector<Rational> terms(11);
        terms[0] = oracle::uniform(rng, 1, 3);
        for (std::size_t i = 1; i < terms.size(); ++i) terms[i] = frac(oracle::uniform(rng, -9, 9), oracle::uniform(rng, 1, 2));
        const Sequence s(terms);
        const auto h = hankel_transform(s);
        if (std::find(h.begin(), h.end(), Rational(0)) != h.end()) continue;
        ++checked;

        const auto f = ldl_decompose(s, 5);
        EXPECT_TRUE(f.lower.is_lower_triangular());
        EXPECT_TRUE(f.lower.has_unit_diagonal());
        EXPECT_EQ(f.reconstruct(), hankel_matrix(s, 5).to_matrix());
        EXPECT_EQ(f.diagonal[0], s[0]);
        Rational product = 1;
        for (std::size_t k = 0; k <= 5; ++k) {
            product *= f.diagonal[k];
            EXPECT_EQ(product, h[k]);
        }
    }
}

TEST(IsRegular, Examples) {
    const auto catalan = is_regular(catalog::generate(SequenceName::catalan, 20));
    EXPECT_TRUE(catalan.regular());
    EXPECT_EQ(catalan.checked_through, 10u);
    EXPECT_EQ(catalan.regular_through(), std::optional<std::size_t>(10));

    const auto ones = is_regular(seq({1, 1, 1, 1, 1}));
    EXPECT_FALSE(ones.regular());
    EXPECT_EQ(ones.first_zero, std::optional<std::size_t>(1));
    EXPECT_EQ(ones.regular_through(), std::optional<std::size_t>(0));

    EXPECT_TRUE(is_regular(catalog::generate(SequenceName::derangement, 12)).regular());
    EXPECT_EQ(is_regular(seq({0, 1, 2})).regular_through(), std::nullopt);
}

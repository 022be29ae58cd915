#pragma once

// Slow, independent reference computations used only by the tests.

#include "momentix/matrix.hpp"
#include "momentix/rational.hpp"
#include "momentix/series.hpp"

#include <random>
#include <vector>

namespace momentix::oracle {

/// Laplace expansion along the first row.
Rational cofactor_determinant(const RationalMatrix& m);

/// mu_0..mu_N by enumerating every Motzkin path of each length (up step 1,
/// level step at height h weight alpha_h, down step from h to h-1 weight lambda_h).
std::vector<Rational> motzkin_moments(const std::vector<Rational>& alpha, const std::vector<Rational>& lambda,
                                      const Rational& mu0, std::size_t N);

/// sum_i outer_i * inner^i, each power expanded by repeated convolution, through x^N.
std::vector<Rational> power_sum_compose(const std::vector<Rational>& outer, const std::vector<Rational>& inner,
                                        std::size_t N);

/// Lagrange inversion: [x^n] fbar = (1/n) [t^(n-1)] (t / f(t))^n, through x^N.
std::vector<Rational> lagrange_revert(const std::vector<Rational>& f, std::size_t N);

/// Schoolbook long division a/b through x^N.
std::vector<Rational> long_division(const std::vector<Rational>& a, const std::vector<Rational>& b, std::size_t N);

/// Convolution truncated to x^N.
std::vector<Rational> convolve(const std::vector<Rational>& a, const std::vector<Rational>& b, std::size_t N);

/// Uniform integer in [lo, hi].
inline long uniform(std::mt19937_64& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

}  // namespace momentix::oracle

#pragma once

#include "momentix/series.hpp"

#include <cstddef>
#include <vector>

namespace momentix {

/// Jacobi continued fraction
///
///   mu0 / (1 - alpha_0 x - lambda_1 x^2 / (1 - alpha_1 x - lambda_2 x^2 / ...))
///
/// `lambda[k - 1]` holds lambda_k. Every lambda_k and mu0 are nonzero.
struct JFraction {
    std::vector<Rational> alpha;
    std::vector<Rational> lambda;
    Rational mu0 = 1;

    /// Throws std::invalid_argument when mu0 or some lambda_k is zero.
    void validate() const;
    friend bool operator==(const JFraction&, const JFraction&) = default;
};

/// 2m+1 moments give m alphas and m lambdas, read off the LDL^T factor of
/// the Hankel matrix: alpha_n = L(n+1,n) - L(n,n-1), lambda_k = d_k / d_{k-1}.
JFraction extract_jfraction(const Sequence& s);

/// mu_0..mu_N as weighted Motzkin path counts (top-left entry of J^n, J the
/// tridiagonal operator with diagonal alpha, superdiagonal 1, subdiagonal
/// lambda), scaled by mu0. Needs ceil(N/2) alphas and floor(N/2) lambdas.
Sequence moments_from_jfraction(const JFraction& j, std::size_t N);

/// h_n = mu0^(n+1) * prod_{k=1..n} lambda_k^(n+1-k) for n = 0..N.
std::vector<Rational> hankel_from_lambdas(const JFraction& j, std::size_t N);

/// The continued fraction expanded bottom-up as a power series through x^N.
PowerSeries cf_series(const JFraction& j, std::size_t N);

}  // namespace momentix

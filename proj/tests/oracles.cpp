#include "oracles.hpp"

#include <functional>

namespace momentix::oracle {

Rational cofactor_determinant(const RationalMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Rational det;
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        const Rational term = m(0, j) * cofactor_determinant(m.minor_matrix(0, j));
        if (j % 2 == 0) det += term; else det -= term;
    }
    return det;
}

std::vector<Rational> motzkin_moments(const std::vector<Rational>& alpha, const std::vector<Rational>& lambda,
                                      const Rational& mu0, std::size_t N) {
    std::vector<Rational> mu(N + 1);
    // Depth-first walk over all step sequences of length n that stay >= 0 and end at 0.
    std::function<Rational(std::size_t, std::size_t)> walk = [&](std::size_t steps_left, std::size_t height) -> Rational {
        if (height > steps_left) return 0;
        if (steps_left == 0) return 1;
        Rational total = walk(steps_left - 1, height + 1);
        if (height < alpha.size()) total += alpha[height] * walk(steps_left - 1, height);
        if (height > 0) total += lambda.at(height - 1) * walk(steps_left - 1, height - 1);
        return total;
    };
    for (std::size_t n = 0; n <= N; ++n) mu[n] = mu0 * walk(n, 0);
    return mu;
}

std::vector<Rational> convolve(const std::vector<Rational>& a, const std::vector<Rational>& b, std::size_t N) {
    std::vector<Rational> c(N + 1);
    for (std::size_t i = 0; i < a.size() && i <= N; ++i)
        for (std::size_t j = 0; j < b.size() && i + j <= N; ++j) c[i + j] += a[i] * b[j];
    return c;
}

std::vector<Rational> power_sum_compose(const std::vector<Rational>& outer, const std::vector<Rational>& inner,
                                        std::size_t N) {
    std::vector<Rational> result(N + 1);
    std::vector<Rational> power(N + 1);
    power[0] = 1;
    for (std::size_t i = 0; i < outer.size() && i <= N; ++i) {
        for (std::size_t n = 0; n <= N; ++n) result[n] += outer[i] * power[n];
        power = convolve(power, inner, N);
    }
    return result;
}

std::vector<Rational> long_division(const std::vector<Rational>& a, const std::vector<Rational>& b, std::size_t N) {
    std::vector<Rational> remainder(N + 1);
    for (std::size_t i = 0; i < a.size() && i <= N; ++i) remainder[i] = a[i];
    std::vector<Rational> q(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        q[n] = remainder[n] / b[0];
        for (std::size_t i = 0; i < b.size() && n + i <= N; ++i) remainder[n + i] -= q[n] * b[i];
    }
    return q;
}

std::vector<Rational> lagrange_revert(const std::vector<Rational>& f, std::size_t N) {
    // t / f(t) = 1 / (f_1 + f_2 t + ...)
    std::vector<Rational> shifted(f.begin() + 1, f.end());
    const std::vector<Rational> ratio = long_division({Rational(1)}, shifted, N);
    std::vector<Rational> out(N + 1);
    std::vector<Rational> power{Rational(1)};
    for (std::size_t n = 1; n <= N; ++n) {
        power = convolve(power, ratio, N);
        out[n] = power[n - 1] / Rational(static_cast<long>(n));
    }
    return out;
}

}  // namespace momentix::oracle

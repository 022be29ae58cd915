#include "momentix/jfraction.hpp"

#include "momentix/errors.hpp"
#include "momentix/hankel.hpp"

#include <algorithm>
#include <stdexcept>

namespace momentix {

namespace {

void require_depth(const JFraction& j, std::size_t N) {
    const std::size_t alphas = (N + 1) / 2;
    const std::size_t lambdas = N / 2;
    if (j.alpha.size() < alphas || j.lambda.size() < lambdas) {
        throw InsufficientDepth("order " + std::to_string(N) + " needs " + std::to_string(alphas) + " alphas and " +
                                std::to_string(lambdas) + " lambdas");
    }
}

}  // namespace

void JFraction::validate() const {
    if (mu0 == 0) throw std::invalid_argument("mu0 must be nonzero");
    for (std::size_t k = 0; k < lambda.size(); ++k) {
        if (lambda[k] == 0) throw std::invalid_argument("lambda_" + std::to_string(k + 1) + " is zero");
    }
}

JFraction extract_jfraction(const Sequence& s) {
    const std::size_t m = max_hankel_index(s.size());
    const LDLDecomposition ldl = ldl_decompose(s, m);

    JFraction j;
    j.mu0 = s[0];
    j.alpha.reserve(m);
    j.lambda.reserve(m);
    for (std::size_t n = 0; n < m; ++n) {
        Rational a = ldl.lower(n + 1, n);
        if (n > 0) a -= ldl.lower(n, n - 1);
        j.alpha.push_back(a);
    }
    for (std::size_t k = 1; k <= m; ++k) j.lambda.push_back(ldl.diagonal[k] / ldl.diagonal[k - 1]);
    return j;
}

Sequence moments_from_jfraction(const JFraction& j, std::size_t N) {
    require_depth(j, N);

    // paths[h] = weighted count of paths from height 0 to height h. Heights
    // above N - n cannot return to 0 within the remaining steps.
    std::vector<Rational> paths{Rational(1)};
    std::vector<Rational> mu;
    mu.reserve(N + 1);
    mu.push_back(j.mu0);
    for (std::size_t n = 0; n < N; ++n) {
        const std::size_t reach = std::min(n + 1, N - n - 1);
        std::vector<Rational> next(reach + 1);
        for (std::size_t h = 0; h <= reach; ++h) {
            Rational acc;
            if (h >= 1 && h - 1 < paths.size()) acc += paths[h - 1];
            if (h < paths.size()) acc += paths[h] * j.alpha[h];
            if (h + 1 < paths.size()) acc += paths[h + 1] * j.lambda[h];
            next[h] = acc;
        }
        paths = std::move(next);
        mu.push_back(j.mu0 * paths[0]);
    }
    return Sequence(std::move(mu));
}

std::vector<Rational> hankel_from_lambdas(const JFraction& j, std::size_t N) {
    if (j.lambda.size() < N) {
        throw InsufficientDepth("h_" + std::to_string(N) + " needs " + std::to_string(N) + " lambdas");
    }
    std::vector<Rational> h;
    h.reserve(N + 1);
    // h_n = h_{n-1} * mu0 * lambda_1 * ... * lambda_n
    Rational running = j.mu0;
    Rational current = j.mu0;
    h.push_back(current);
    for (std::size_t n = 1; n <= N; ++n) {
        running *= j.lambda[n - 1];
        current *= running;
        h.push_back(current);
    }
    return h;
}

PowerSeries cf_series(const JFraction& j, std::size_t N) {
    require_depth(j, N);
    const std::size_t levels = (N + 1) / 2;
    const PowerSeries one = PowerSeries::truncated({1}, N);

    PowerSeries tail = one;
    for (std::size_t h = levels; h-- > 0;) {
        PowerSeries denom = ps_sub(one, PowerSeries::truncated({0, j.alpha[h]}, N));
        if (h < j.lambda.size()) {
            const PowerSeries quad = PowerSeries::truncated({0, 0, j.lambda[h]}, N);
            denom = ps_sub(denom, ps_mul(quad, tail));
        }
        tail = ps_div(one, denom, N);
    }
    return ps_scale(tail, j.mu0);
}

}  // namespace momentix

#include "momentix/catalog.hpp"

#include "momentix/errors.hpp"

#include <string>

namespace momentix::catalog {

namespace {

constexpr std::array<std::string_view, 5> kNames{"catalan", "central_binomial", "schroeder", "factorial",
                                                 "derangement"};
constexpr std::array<std::string_view, 5> kOeis{"A000108", "A000984", "A006318", "A000142", "A000166"};

std::size_t index_of(SequenceName name) { return static_cast<std::size_t>(name); }

Integer sign_of(long exponent) { return exponent % 2 == 0 ? 1 : -1; }

Rational catalan_number(long n) {
    Rational c(binomial(2 * n, n), n + 1);
    c.canonicalize();
    return c;
}

Rational schroeder_number(long n) {
    Rational acc;
    for (long k = 0; k <= n; ++k) acc += binomial(n + k, 2 * k) * catalan_number(k);
    return acc;
}

Rational fraction(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Central-binomial coefficient array: C(n+k,2k) (2n + 0^(n+k)) / (n+k + 0^(n+k)) (-1)^(n-k).
Rational central_binomial_coeff(long n, long k) {
    const long z = zero_power(n + k);
    return binomial(n + k, 2 * k) * fraction(2 * n + z, n + k + z) * sign_of(n - k);
}

Rational verify_catalan(long k) {
    Rational lhs;
    for (long i = 0; i <= 2 * k; ++i) {
        const Rational c_i = catalan_number(i);
        for (long j = 0; j <= i; ++j) {
            lhs += sign_of(i) * binomial(k + j, 2 * j) * binomial(k + i - j, 2 * (i - j)) * c_i;
        }
    }
    return lhs;
}

// The two readings differ only in the second denominator: k+i-j (symmetric) or k+j (as printed).
Rational verify_central_binomial(long k, bool symmetric) {
    Rational lhs;
    for (long i = 0; i <= 2 * k; ++i) {
        const Integer central = binomial(2 * i, i);
        for (long j = 0; j <= i; ++j) {
            const long z1 = zero_power(k + j);
            const long z2 = zero_power(k + i - j);
            const long second_den = (symmetric ? k + i - j : k + j) + z2;
            lhs += sign_of(i) * binomial(k + j, 2 * j) * binomial(k + i - j, 2 * (i - j)) *
                   fraction(2 * k + z1, k + j + z1) * fraction(2 * k + z2, second_den) * central;
        }
    }
    return lhs;
}

Rational coefficient_square_sum(SequenceName name, long k, const Sequence& moments) {
    Rational lhs;
    for (long i = 0; i <= 2 * k; ++i) {
        Rational inner;
        for (long j = 0; j <= i; ++j) {
            if (j > k || i - j > k) continue;
            inner += closed_coeff(name, k, j) * closed_coeff(name, k, i - j);
        }
        lhs += inner * moments[static_cast<std::size_t>(i)];
    }
    return lhs;
}

Rational verify_schroeder(long k, bool signed_sum) {
    Rational lhs;
    for (long i = 0; i <= 2 * k; ++i) {
        const Rational s_i = schroeder_number(i);
        for (long j = 0; j <= i; ++j) {
            Integer left;
            for (long l = 0; l <= k; ++l) left += binomial(k - l, j) * binomial(k + j, l);
            Integer right;
            for (long m = 0; m <= k; ++m) right += binomial(k - m, i - j) * binomial(k + i - j, m);
            lhs += (signed_sum ? sign_of(i) : Integer(1)) * left * right * s_i;
        }
    }
    return lhs;
}

Rational verify_factorial(long k) {
    const Integer k_fact = factorial(static_cast<unsigned long>(k));
    Rational lhs;
    for (long i = 0; i <= 2 * k; ++i) {
        Rational inner;
        for (long j = 0; j <= i; ++j) {
            inner += sign_of(i) * binomial(k, j) * binomial(k, i - j) *
                     fraction(k_fact * k_fact, factorial(static_cast<unsigned long>(j)) *
                                                   factorial(static_cast<unsigned long>(i - j)));
        }
        lhs += inner * factorial(static_cast<unsigned long>(i));
    }
    return lhs;
}

Rational verify_factorial_normalized(long k) {
    Rational lhs;
    for (long i = 0; i <= 2 * k; ++i)
        for (long j = 0; j <= i; ++j) lhs += sign_of(i) * binomial(k, j) * binomial(k, i - j) * binomial(i, j);
    return lhs;
}

// The coefficient formula as printed alongside the product [e^x, x] * [1/(1+x), x/(1+x)].
// It does not describe the derangement polynomials (P_2 would be x^2 - 2x + 1).
Rational printed_derangement_coeff(long n, long k) {
    Rational acc;
    for (long j = 0; j <= n; ++j) {
        acc += binomial(n, j) * binomial(j, k) *
               fraction(factorial(static_cast<unsigned long>(j)), factorial(static_cast<unsigned long>(k))) *
               sign_of(j - k);
    }
    return acc;
}

template <typename Coeff>
Rational verify_derangement(long k, Coeff coeff) {
    Rational lhs;
    for (long i = 0; i <= 2 * k; ++i) {
        Rational inner;
        for (long j = 0; j <= i; ++j) {
            if (j > k || i - j > k) continue;
            inner += coeff(k, j) * coeff(k, i - j);
        }
        Integer moment;
        for (long l = 0; l <= i; ++l) moment += binomial(i, l) * sign_of(i - l) * factorial(static_cast<unsigned long>(l));
        lhs += inner * moment;
    }
    return lhs;
}

}  // namespace

SequenceName parse_name(std::string_view name) {
    for (std::size_t i = 0; i < kNames.size(); ++i)
        if (kNames[i] == name) return kAllSequences[i];
    throw UnknownName(std::string(name));
}

std::string_view name_of(SequenceName name) { return kNames[index_of(name)]; }

std::string_view oeis_id(SequenceName name) { return kOeis[index_of(name)]; }

int example_number(SequenceName name) { return static_cast<int>(index_of(name)) + 1; }

SequenceName from_example(int number) {
    if (number < 1 || number > 5) throw IndexOutOfRange("examples are numbered 1 to 5");
    return kAllSequences[static_cast<std::size_t>(number - 1)];
}

Sequence generate(SequenceName name, std::size_t N) {
    std::vector<Rational> terms(N + 1);
    switch (name) {
    case SequenceName::catalan:
        // C_{n+1} = C_n * 2(2n+1) / (n+2)
        terms[0] = 1;
        for (std::size_t n = 0; n < N; ++n) terms[n + 1] = terms[n] * fraction(2 * (2 * n + 1), n + 2);
        break;
    case SequenceName::central_binomial:
        for (std::size_t n = 0; n <= N; ++n) terms[n] = binomial(2 * static_cast<long>(n), static_cast<long>(n));
        break;
    case SequenceName::schroeder:
        for (std::size_t n = 0; n <= N; ++n) terms[n] = schroeder_number(static_cast<long>(n));
        break;
    case SequenceName::factorial:
        for (std::size_t n = 0; n <= N; ++n) terms[n] = factorial(n);
        break;
    case SequenceName::derangement:
        // D_n = n D_{n-1} + (-1)^n
        terms[0] = 1;
        for (std::size_t n = 1; n <= N; ++n) terms[n] = terms[n - 1] * static_cast<unsigned long>(n) + sign_of(static_cast<long>(n));
        break;
    }
    return Sequence(std::move(terms));
}

Sequence generate(std::string_view name, std::size_t N) { return generate(parse_name(name), N); }

Rational closed_hankel(SequenceName name, std::size_t n) {
    switch (name) {
    case SequenceName::catalan:
        return 1;
    case SequenceName::central_binomial:
        return power(Rational(2), n);
    case SequenceName::schroeder:
        return power(Rational(2), n * (n + 1) / 2);
    case SequenceName::factorial:
    case SequenceName::derangement: {
        Rational product = 1;
        for (std::size_t i = 0; i <= n; ++i) product *= factorial(i) * factorial(i);
        return product;
    }
    }
    return 0;
}

Rational closed_coeff(SequenceName name, long n, long k) {
    if (k < 0 || n < 0 || k > n) {
        throw IndexOutOfRange("coefficient index (" + std::to_string(n) + ", " + std::to_string(k) + ") outside 0 <= k <= n");
    }
    switch (name) {
    case SequenceName::catalan:
        return sign_of(n - k) * binomial(n + k, 2 * k);
    case SequenceName::central_binomial:
        return central_binomial_coeff(n, k);
    case SequenceName::schroeder: {
        Integer acc;
        for (long j = 0; j <= n; ++j) acc += binomial(n - j, k) * binomial(n + k, j);
        return sign_of(n - k) * acc;
    }
    case SequenceName::factorial:
        return sign_of(n - k) * binomial(n, k) *
               fraction(factorial(static_cast<unsigned long>(n)), factorial(static_cast<unsigned long>(k)));
    case SequenceName::derangement: {
        // P_n(x) is the factorial polynomial at x + 1: a(n,k) = sum_j a_fact(n,j) C(j,k).
        Rational acc;
        for (long j = k; j <= n; ++j) acc += closed_coeff(SequenceName::factorial, n, j) * binomial(j, k);
        return acc;
    }
    }
    return 0;
}

JFraction closed_jfraction(SequenceName name, std::size_t m) {
    JFraction j;
    j.mu0 = 1;
    for (std::size_t n = 0; n < m; ++n) {
        const long i = static_cast<long>(n);
        const long k = i + 1;  // lambda index
        switch (name) {
        case SequenceName::catalan:
            j.alpha.emplace_back(n == 0 ? 1 : 2);
            j.lambda.emplace_back(1);
            break;
        case SequenceName::central_binomial:
            j.alpha.emplace_back(2);
            j.lambda.emplace_back(k == 1 ? 2 : 1);
            break;
        case SequenceName::schroeder:
            j.alpha.emplace_back(n == 0 ? 2 : 3);
            j.lambda.emplace_back(2);
            break;
        case SequenceName::factorial:
            j.alpha.emplace_back(2 * i + 1);
            j.lambda.emplace_back(k * k);
            break;
        case SequenceName::derangement:
            j.alpha.emplace_back(2 * i);
            j.lambda.emplace_back(k * k);
            break;
        }
    }
    return j;
}

VerificationRecord verify_identity(SequenceName name, std::size_t k_index) {
    const long k = static_cast<long>(k_index);
    VerificationRecord record;
    record.name = name;
    record.k = k_index;
    auto& checks = record.checks;

    switch (name) {
    case SequenceName::catalan:
        checks.push_back({"sum (-1)^i C(k+j,2j) C(k+i-j,2(i-j)) C_i = 1", verify_catalan(k), 1, true});
        break;
    case SequenceName::central_binomial: {
        const Rational expected = 2 - zero_power(k);
        checks.push_back({"explicit double sum = 2 - 0^k (denominator k+i-j+0^(k+i-j))",
                          verify_central_binomial(k, true), expected, true});
        checks.push_back({"sum (sum a(k,j) a(k,i-j)) C(2i,i) = 2 - 0^k",
                          coefficient_square_sum(name, k, generate(name, 2 * k_index)), expected, true});
        checks.push_back({"explicit double sum as printed (denominator k+j+0^(k+i-j))",
                          verify_central_binomial(k, false), expected, false});
        break;
    }
    case SequenceName::schroeder: {
        const Rational expected = power(Rational(2), k_index);
        checks.push_back({"quadruple sum with (-1)^i = 2^k", verify_schroeder(k, true), expected, true});
        checks.push_back({"sum (sum a(k,j) a(k,i-j)) S_i = 2^k",
                          coefficient_square_sum(name, k, generate(name, 2 * k_index)), expected, true});
        checks.push_back({"quadruple sum as printed, without (-1)^i", verify_schroeder(k, false), expected, false});
        break;
    }
    case SequenceName::factorial: {
        const Integer k_fact = factorial(k_index);
        checks.push_back({"sum (-1)^i C(k,j) C(k,i-j) k!^2/(j!(i-j)!) i! = k!^2", verify_factorial(k),
                          Rational(k_fact * k_fact), true});
        checks.push_back({"sum (-1)^i C(k,j) C(k,i-j) C(i,j) = 1", verify_factorial_normalized(k), 1, true});
        break;
    }
    case SequenceName::derangement: {
        const Integer k_fact = factorial(k_index);
        const auto corrected = [](long n, long j) { return closed_coeff(SequenceName::derangement, n, j); };
        checks.push_back({"sum (sum a(k,j) a(k,i-j)) sum_l C(i,l) (-1)^(i-l) l! = k!^2",
                          verify_derangement(k, corrected), Rational(k_fact * k_fact), true});
        checks.push_back({"same sum with printed a(n,k) = sum_j C(n,j) C(j,k) j!/k! (-1)^(j-k)",
                          verify_derangement(k, printed_derangement_coeff), Rational(k_fact * k_fact), false});
        break;
    }
    }

    record.lhs = checks.front().lhs;
    record.expected = checks.front().expected;
    record.pass = true;
    for (const auto& c : checks)
        if (c.required && !c.pass()) record.pass = false;
    return record;
}

std::vector<std::vector<Integer>> example4_triangle(std::size_t K) {
    std::vector<std::vector<Integer>> rows;
    rows.reserve(K + 1);
    for (long k = 0; k <= static_cast<long>(K); ++k) {
        std::vector<Integer> row;
        row.reserve(static_cast<std::size_t>(2 * k + 1));
        for (long i = 0; i <= 2 * k; ++i) {
            Integer entry;
            for (long j = 0; j <= i; ++j) entry += binomial(k, j) * binomial(k, i - j) * binomial(i, j);
            row.push_back(sign_of(i) * entry);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace momentix::catalog

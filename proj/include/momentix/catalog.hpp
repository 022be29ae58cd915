#pragma once

#include "momentix/jfraction.hpp"
#include "momentix/series.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace momentix::catalog {

/// The five worked sequences, in example order.
enum class SequenceName { catalan, central_binomial, schroeder, factorial, derangement };

inline constexpr std::array<SequenceName, 5> kAllSequences{
    SequenceName::catalan, SequenceName::central_binomial, SequenceName::schroeder, SequenceName::factorial,
    SequenceName::derangement};

/// Throws UnknownName.
SequenceName parse_name(std::string_view name);
std::string_view name_of(SequenceName name);
/// OEIS A-number, e.g. "A000108".
std::string_view oeis_id(SequenceName name);
/// 1-based example number; `from_example` throws IndexOutOfRange outside 1..5.
int example_number(SequenceName name);
SequenceName from_example(int number);

/// Terms 0..N.
Sequence generate(SequenceName name, std::size_t N);
Sequence generate(std::string_view name, std::size_t N);

/// Closed-form Hankel transform value h_n.
Rational closed_hankel(SequenceName name, std::size_t n);

/// Closed-form entry a(n,k) of the orthogonal-polynomial coefficient array.
/// Throws IndexOutOfRange unless 0 <= k <= n.
Rational closed_coeff(SequenceName name, long n, long k);

/// The continued-fraction coefficients read off the closed-form generating
/// functions, m alphas and m lambdas.
JFraction closed_jfraction(SequenceName name, std::size_t m);

/// One evaluated identity. Informational readings do not affect the verdict.
struct IdentityCheck {
    std::string label;
    Rational lhs;
    Rational expected;
    bool required = true;

    bool pass() const { return lhs == expected; }
};

struct VerificationRecord {
    SequenceName name;
    std::size_t k = 0;
    Rational lhs;
    Rational expected;
    bool pass = false;
    /// Every evaluated reading, the primary one first.
    std::vector<IdentityCheck> checks;
};

/// Evaluates the example's displayed multiple sums term by term at k.
VerificationRecord verify_identity(SequenceName name, std::size_t k);

/// entry(k, i) = sum_j (-1)^i C(k,j) C(k,i-j) C(i,j) for 0 <= i <= 2k, 0 <= k <= K.
std::vector<std::vector<Integer>> example4_triangle(std::size_t K);

}  // namespace momentix::catalog

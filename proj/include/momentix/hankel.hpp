#pragma once

#include "momentix/matrix.hpp"
#include "momentix/series.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace momentix {

/// The symmetric matrix (mu_{i+j}) for 0 <= i, j <= n.
class HankelMatrix {
public:
    HankelMatrix(const Sequence& s, std::size_t n);

    std::size_t order() const noexcept { return order_; }
    const Rational& entry(std::size_t i, std::size_t j) const { return moments_[i + j]; }
    RationalMatrix to_matrix() const;

private:
    std::size_t order_;
    std::vector<Rational> moments_;
};

/// H = L * diag(d) * L^T with L unit lower-triangular.
struct LDLDecomposition {
    RationalMatrix lower;
    std::vector<Rational> diagonal;

    RationalMatrix reconstruct() const;
};

struct RegularityReport {
    /// Largest n whose Hankel determinant the prefix determines.
    std::size_t checked_through = 0;
    /// First n with h_n = 0, if any.
    std::optional<std::size_t> first_zero;

    bool regular() const noexcept { return !first_zero.has_value(); }
    /// Largest n with h_0..h_n all nonzero; empty when h_0 = 0.
    std::optional<std::size_t> regular_through() const;
};

/// Largest n such that a prefix of `count` terms determines h_n.
inline std::size_t max_hankel_index(std::size_t count) { return count == 0 ? 0 : (count - 1) / 2; }

HankelMatrix hankel_matrix(const Sequence& s, std::size_t n);
Rational hankel_determinant(const Sequence& s, std::size_t n);
/// h_0..h_N with N = floor((len - 1) / 2).
std::vector<Rational> hankel_transform(const Sequence& s);
/// Throws SingularMinor(k) at the first vanishing pivot.
LDLDecomposition ldl_decompose(const Sequence& s, std::size_t n);
RegularityReport is_regular(const Sequence& s);

}  // namespace momentix

#include "momentix/hankel.hpp"

#include "momentix/errors.hpp"

namespace momentix {

HankelMatrix::HankelMatrix(const Sequence& s, std::size_t n) : order_(n + 1) {
    const std::size_t needed = 2 * n + 1;
    if (s.size() < needed) throw InsufficientTerms(needed, s.size());
    moments_.assign(s.terms().begin(), s.terms().begin() + static_cast<std::ptrdiff_t>(needed));
}

RationalMatrix HankelMatrix::to_matrix() const {
    RationalMatrix m(order_, order_);
    for (std::size_t i = 0; i < order_; ++i)
        for (std::size_t j = 0; j < order_; ++j) m(i, j) = entry(i, j);
    return m;
}

RationalMatrix LDLDecomposition::reconstruct() const {
    return lower * RationalMatrix::diagonal(diagonal) * lower.transpose();
}

std::optional<std::size_t> RegularityReport::regular_through() const {
    if (!first_zero) return checked_through;
    if (*first_zero == 0) return std::nullopt;
    return *first_zero - 1;
}

HankelMatrix hankel_matrix(const Sequence& s, std::size_t n) { return HankelMatrix(s, n); }

Rational hankel_determinant(const Sequence& s, std::size_t n) {
    return determinant(hankel_matrix(s, n).to_matrix());
}

std::vector<Rational> hankel_transform(const Sequence& s) {
    const std::size_t top = max_hankel_index(s.size());
    std::vector<Rational> h;
    h.reserve(top + 1);
    for (std::size_t n = 0; n <= top; ++n) h.push_back(hankel_determinant(s, n));
    return h;
}

LDLDecomposition ldl_decompose(const Sequence& s, std::size_t n) {
    const HankelMatrix hankel(s, n);
    const std::size_t size = n + 1;
    LDLDecomposition out{RationalMatrix::identity(size), std::vector<Rational>(size)};
    RationalMatrix& lower = out.lower;
    std::vector<Rational>& d = out.diagonal;

    for (std::size_t j = 0; j < size; ++j) {
        Rational pivot = hankel.entry(j, j);
        for (std::size_t k = 0; k < j; ++k) pivot -= lower(j, k) * lower(j, k) * d[k];
        if (pivot == 0) throw SingularMinor(j);
        d[j] = pivot;
        for (std::size_t i = j + 1; i < size; ++i) {
            Rational acc = hankel.entry(i, j);
            for (std::size_t k = 0; k < j; ++k) acc -= lower(i, k) * lower(j, k) * d[k];
            lower(i, j) = acc / pivot;
        }
    }
    return out;
}

RegularityReport is_regular(const Sequence& s) {
    RegularityReport report;
    const std::vector<Rational> h = hankel_transform(s);
    report.checked_through = h.size() - 1;
    for (std::size_t n = 0; n < h.size(); ++n) {
        if (h[n] == 0) {
            report.first_zero = n;
            break;
        }
    }
    return report;
}

}  // namespace momentix

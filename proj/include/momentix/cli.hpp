#pragma once

#include "momentix/series.hpp"

#include "json.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace momentix::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsageError = 2, kDataError = 3 };

/// Everything `analyze` computes for one input prefix.
struct AnalysisReport {
    std::vector<Rational> input;
    std::size_t depth = 0;
    std::size_t checked_through = 0;
    std::optional<std::size_t> first_zero;

    std::vector<Rational> hankel_det;
    std::vector<Rational> hankel_lambda_product;
    std::vector<Rational> hankel_coefficient_formula;
    std::vector<Rational> alpha;
    std::vector<Rational> lambda;
    std::vector<Rational> d;
    std::vector<std::vector<Rational>> coeff_rows;

    bool hankel_agree = false;
    bool coefficient_routes_agree = false;
    bool diagonal_agrees = false;
    bool moments_recovered = false;

    bool regular() const noexcept { return !first_zero.has_value(); }
    bool all_agree() const noexcept {
        return hankel_agree && coefficient_routes_agree && diagonal_agrees && moments_recovered;
    }
};

/// Runs every route on s through depth n. A non-regular prefix yields a
/// report with only the determinant route filled in.
AnalysisReport analyze(const Sequence& s, std::size_t n);

/// Field order: input, regularity, hankel {det, lambda_product,
/// coefficient_formula}, jfraction {alpha, lambda}, d, coeff_rows, agreement.
/// Every number is a decimal string.
nlohmann::ordered_json to_json(const AnalysisReport& report);

/// Entry point: `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace momentix::cli

#pragma once

#include <optional>
#include <string>

#include "cauchyderiv/scaled_complex.hpp"

namespace cauchy {

/// Flat result record for the CLI. Floating values serialize with 17
/// significant digits so parsing a value string reproduces the binary double
/// exactly.
struct OutputRecord {
    ScaledComplex value;
    double kappa = std::numeric_limits<double>::quiet_NaN();
    int m_used = 0;
    double radius = std::numeric_limits<double>::quiet_NaN();
    std::string strategy;
    double digit_loss = std::numeric_limits<double>::quiet_NaN();
    std::string status;
    std::optional<double> predicted_digit_loss;
    std::optional<int> predicted_nodes;
    std::optional<double> rel_error_estimate;
    std::string warning;
};

std::string format_double(double x); // %.17g

/// "m e±X" with a decimal exponent once |value| leaves [1e-300, 1e300],
/// otherwise a plain double (or "(re,im)" pair for truly complex values).
std::string format_value(const ScaledComplex& v);

std::string to_text(const OutputRecord& rec);
std::string to_json(const OutputRecord& rec);
std::string to_csv(const OutputRecord& rec); // header line + data line

} // namespace cauchy

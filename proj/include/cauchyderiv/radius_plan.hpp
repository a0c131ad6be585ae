#pragma once

#include <complex>
#include <limits>
#include <optional>

namespace cauchy {

enum class RadiusStrategy {
    user_fixed,
    nonneg_convex,
    saddle,
    prg_asymptotic,
    darboux,
    empirical_scan,
};

const char* to_string(RadiusStrategy s);

/// A chosen contour radius plus how it was chosen and what it should cost.
/// predicted_nodes and predicted_digit_loss stay unset when no estimate is
/// available for the strategy.
struct RadiusPlan {
    double radius = 0.0;
    RadiusStrategy strategy = RadiusStrategy::user_fixed;
    std::optional<int> predicted_nodes;
    std::optional<double> predicted_digit_loss;
    std::optional<std::complex<double>> saddle_point;
    bool flat_minimum_warning = false;

    static RadiusPlan fixed(double r) {
        RadiusPlan p;
        p.radius = r;
        p.strategy = RadiusStrategy::user_fixed;
        return p;
    }
};

} // namespace cauchy

#pragma once

#include "cauchyderiv/quad.hpp"
#include "cauchyderiv/radius_plan.hpp"

namespace cauchy {

/// Controls for the adaptive node-doubling driver. tol is the target relative
/// error before kappa amplification; m_initial = max(n+1, m_initial_floor)
/// always satisfies the sampling condition m > n.
struct DriverConfig {
    double tol = 1e-15;
    int m_initial_floor = 8;
    int m_max = 1 << 20;
    bool scale_to_derivative = false;
};

/// Compute a_n by trapezoidal sums at radius r, doubling m (reusing all
/// previously computed samples) until the geometrically extrapolated error
/// estimate err = (err0/err1)^2 * err0 drops below kappa_m * tol. The first
/// doubling has no err1 and never stops on the extrapolated estimate.
QuadratureOutcome taylor_coefficient(const AnalyticFunction& f, int n, double r,
                                     const DriverConfig& cfg = {});

/// n! * a_n, the factorial applied through log-gamma on the exponent field.
QuadratureOutcome derivative(const AnalyticFunction& f, int n, const RadiusPlan& plan,
                             const DriverConfig& cfg = {});

/// Digits lost to round-off: log10(kappa), clamped at 0 for kappa < 1.
double digit_loss_estimate(double kappa);

/// kappa_m at (n, r) with m doubled past driver convergence until kappa
/// itself stabilizes; used by the table/scan pipelines that quote kappa to
/// several decimals. Returns the stabilized kappa and the m it used.
struct KappaMeasurement {
    double kappa = 0.0;
    int m_used = 0;
};
KappaMeasurement measure_condition_number(const AnalyticFunction& f, int n, double r,
                                          double kappa_rel_tol = 1e-8, int m_max = (1 << 21));

} // namespace cauchy

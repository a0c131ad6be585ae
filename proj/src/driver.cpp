#include "cauchyderiv/driver.hpp"

#include <cmath>
#include <stdexcept>

namespace cauchy {
namespace {

// Relative error of val against val_prev. When |val| collapses relative to
// the ring mean (possible for n = 0 between sign changes), the mean takes
// over as the scale so the ratio stays meaningful.
double step_error(const ScaledComplex& val, const ScaledComplex& val_prev,
                  const ScaledComplex& mean) {
    ScaledComplex diff = val - val_prev;
    if (diff.is_zero()) return 0.0;
    double scale_log = val.log_abs();
    if (!mean.is_zero() && scale_log < std::log(1e-300) + mean.log_abs())
        scale_log = mean.log_abs();
    if (!std::isfinite(scale_log)) return std::numeric_limits<double>::infinity();
    return std::exp(diff.log_abs() - scale_log);
}

} // namespace

double digit_loss_estimate(double kappa) {
    if (!(kappa >= 1.0)) return 0.0;
    return std::log10(kappa);
}

QuadratureOutcome taylor_coefficient(const AnalyticFunction& f, int n, double r,
                                     const DriverConfig& cfg) {
    if (!(r > 0.0)) throw std::invalid_argument("taylor_coefficient: radius must be positive");
    if (!f.entire() && r >= f.radius_of_convergence)
        throw std::domain_error("taylor_coefficient: radius outside disk of analyticity");
    if (n < 0) throw std::invalid_argument("taylor_coefficient: order must be nonnegative");

    // derivative scaling happens on the exponent; it cannot overflow and has
    // no effect on kappa or the relative error estimates
    const long double factorial_shift =
        cfg.scale_to_derivative ? std::lgamma(static_cast<long double>(n) + 1.0L) : 0.0L;

    int m = std::max(n + 1, cfg.m_initial_floor);
    SampleRing ring = sample_ring(f, r, m);
    ScaledComplex val_prev = trapezoidal_coefficient(ring, n);
    double err_prev = std::numeric_limits<double>::quiet_NaN();

    QuadratureOutcome out;
    out.value = val_prev.scaled_by_exp(factorial_shift);
    out.m_used = m;
    out.kappa_m = discrete_condition_number(ring, n);
    out.status = DriverStatus::max_nodes_reached;

    while (2 * ring.count <= cfg.m_max) {
        ring = doubled_ring(f, ring);
        ScaledComplex val = trapezoidal_coefficient(ring, n);
        double kappa = discrete_condition_number(ring, n);
        ScaledComplex mean = mean_modulus(ring);
        double err0 = step_error(val, val_prev, mean);

        double err;
        if (err0 == 0.0)
            err = 0.0;
        else if (std::isnan(err_prev) || err_prev == 0.0)
            err = std::numeric_limits<double>::infinity();
        else
            err = (err0 / err_prev) * (err0 / err_prev) * err0;

        out.value = val.scaled_by_exp(factorial_shift);
        out.m_used = ring.count;
        out.kappa_m = kappa;
        out.rel_error_estimate = std::isfinite(err) ? err : err0;

        if (!std::isfinite(kappa)) {
            out.status = DriverStatus::degenerate_denominator;
            return out;
        }
        if (err <= kappa * cfg.tol) {
            out.status = DriverStatus::converged;
            out.rel_error_estimate = err;
            return out;
        }
        val_prev = val;
        err_prev = err0;
    }
    out.status = DriverStatus::max_nodes_reached;
    return out;
}

QuadratureOutcome derivative(const AnalyticFunction& f, int n, const RadiusPlan& plan,
                             const DriverConfig& cfg) {
    DriverConfig scaled = cfg;
    scaled.scale_to_derivative = true;
    return taylor_coefficient(f, n, plan.radius, scaled);
}

KappaMeasurement measure_condition_number(const AnalyticFunction& f, int n, double r,
                                          double kappa_rel_tol, int m_max) {
    int m = std::max(n + 1, 64);
    SampleRing ring = sample_ring(f, r, m);
    double kappa = discrete_condition_number(ring, n);
    // same two-quiet-doublings rule as converged_mean_modulus: symmetric
    // integrands can fake a plateau over a single doubling
    int quiet = 0;
    while (2 * ring.count <= m_max) {
        ring = doubled_ring(f, ring);
        double next = discrete_condition_number(ring, n);
        double diff = std::abs(next - kappa);
        kappa = next;
        if (!std::isfinite(kappa)) break;
        quiet = diff <= kappa_rel_tol * kappa ? quiet + 1 : 0;
        if (quiet >= 2) break;
    }
    return {kappa, ring.count};
}

} // namespace cauchy

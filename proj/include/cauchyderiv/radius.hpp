#pragma once

#include <optional>
#include <vector>

#include "cauchyderiv/analytic_function.hpp"
#include "cauchyderiv/radius_plan.hpp"
#include "cauchyderiv/scaled_complex.hpp"

namespace cauchy {

/// Sampled condition numbers kappa(n, r) over a radius grid, sorted by r.
struct ConditionCurve {
    struct Entry {
        double r;
        double kappa;
    };
    std::vector<Entry> entries;
    int n = 0;
};

/// Quasi-optimal radius for an entire transcendental f with non-negative
/// Taylor coefficients: the minimizer of log f(e^s) - n s over s = log r
/// (bracket expansion, golden section to |ds| <= 1e-12, then a Newton polish
/// on the first-order condition r f'(r)/f(r) = n).
RadiusPlan radius_nonneg_convex(const AnalyticFunction& f, int n);

/// Newton solve of the saddle-point equation z f'(z)/f(z) = n from the given
/// initial guess; radius is |z|. Checks the residual and that |f| at the
/// saddle is the maximum among 64 sampled ring angles.
RadiusPlan radius_saddle(const AnalyticFunction& f, int n, Complex z0);

/// r = (n / (tau rho))^{1/rho}: the perfectly-regular-growth asymptotics.
RadiusPlan radius_prg_asymptotic(int n, double rho, double tau);

/// Darboux radii for a branch point of exponent beta on the circle |z| = R.
RadiusPlan radius_darboux(int n, double beta, double R);

/// kappa over a log-spaced radius grid: reference kappa when an exact a_n is
/// given, else the discrete kappa_m of a converged driver run.
ConditionCurve scan_condition(const AnalyticFunction& f, std::optional<ScaledComplex> exact_an,
                              int n, double r_lo, double r_hi, int points);

/// Golden-section minimization of log kappa over log r (convex), to relative
/// radius tolerance 1e-3, then a leftward sweep that returns the smallest
/// radius within 1.001x of the minimal kappa.
RadiusPlan optimal_radius_empirical(const AnalyticFunction& f,
                                    std::optional<ScaledComplex> exact_an, int n, double r_lo,
                                    double r_hi);

/// Strategy dispatch: nonneg convex for entire nonnegative f; prg + saddle
/// refinement for entire f of known order/type; Darboux for finite R with
/// branch metadata; empirical scan otherwise.
RadiusPlan auto_radius(const AnalyticFunction& f, int n);

} // namespace cauchy

#pragma once

#include <vector>

#include "cauchyderiv/analytic_function.hpp"
#include "cauchyderiv/scaled_complex.hpp"

namespace cauchy {

/// Samples of f on the circle of radius r at m equispaced angles, each held
/// as a ScaledComplex. common_scale is the largest log-modulus among the
/// samples; all ring reductions work on samples shifted by -common_scale so
/// nothing overflows and scale cancels exactly.
struct SampleRing {
    double radius = 0.0;
    int count = 0;
    std::vector<ScaledComplex> samples;
    double common_scale = 0.0;
};

/// Driver / quadrature result. `value` is a_n(r,m), or n! a_n(r,m) after
/// derivative scaling. rel_error_estimate is NaN when no estimate exists yet.
enum class DriverStatus { converged, max_nodes_reached, degenerate_denominator };

struct QuadratureOutcome {
    ScaledComplex value;
    int m_used = 0;
    double kappa_m = 0.0;
    double rel_error_estimate = std::numeric_limits<double>::quiet_NaN();
    DriverStatus status = DriverStatus::converged;
};

const char* to_string(DriverStatus s);

/// Evaluate f at the m-th roots scaled by r. Node angles are 2*pi*j/m with
/// integer j, never an accumulated step. Evaluation may run on
/// CAUCHY_DERIV_THREADS threads; sample order and all reductions stay fixed.
SampleRing sample_ring(const AnalyticFunction& f, double r, int m);

/// Ring at 2m reusing the given ring's samples as its even-indexed nodes
/// (bitwise; only the odd nodes are newly evaluated).
SampleRing doubled_ring(const AnalyticFunction& f, const SampleRing& ring);

/// a_n(r,m) = (1/(m r^n)) sum_j e^{-2 pi i j n / m} f(r e^{2 pi i j / m}),
/// compensated accumulation in index order. Aliasing applies when n >= m.
ScaledComplex trapezoidal_coefficient(const SampleRing& ring, int n);

/// kappa_m(n,r) = sum_j |f_j| / |sum_j e^{-2 pi i j n/m} f_j|; +inf when the
/// denominator cancels to zero.
double discrete_condition_number(const SampleRing& ring, int n);

/// (1/m) sum_j |f_j|: the trapezoidal approximation of the circle mean M_1(r).
ScaledComplex mean_modulus(const SampleRing& ring);

/// kappa(n,r) ~= M_1(r) / (|a_n| r^n) from an exact-coefficient oracle. This
/// resolves condition numbers far beyond 1/unit-roundoff since the
/// denominator is not formed by cancelation.
double reference_condition_number(const AnalyticFunction& f, const ScaledComplex& exact_an,
                                  int n, double r, int m);
double reference_condition_number(const AnalyticFunction& f, Complex exact_an,
                                  int n, double r, int m);

/// log10 variant that stays finite when kappa overflows a double.
double reference_condition_log10(const AnalyticFunction& f, const ScaledComplex& exact_an,
                                 int n, double r, int m);

/// Circle mean of |f| with m doubled until it stabilizes to rel_tol; used by
/// oracle-mode condition scans. Starts at max(n+1, 64) nodes.
ScaledComplex converged_mean_modulus(const AnalyticFunction& f, double r, int n,
                                     double rel_tol = 1e-9, int m_max = (1 << 21));

/// Evaluation parallelism cap, from CAUCHY_DERIV_THREADS (default 1).
int evaluation_threads();

} // namespace cauchy

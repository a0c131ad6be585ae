#pragma once

#include <vector>

#include "cauchyderiv/analytic_function.hpp"
#include "cauchyderiv/scaled_complex.hpp"

namespace cauchy {

/// Data at one saddle point of |z^{-n} f(z)|: the angular-expansion
/// coefficients a = z f'/f, b = z a', and F = z^{-n} f(z).
struct SaddleInfo {
    Complex z;
    Complex a;
    Complex b;
    ScaledComplex F_value;
};

/// z L'(z) and z (z L')'(z), with L = log f. Uses the exact derivative hooks
/// when the function provides them, otherwise Richardson-refined central
/// differences of log f with step max(1e-6, 1e-6 |z|).
std::pair<Complex, Complex> log_derivative_coefficients(const AnalyticFunction& f, Complex z);

/// z f'(z)/f(z) alone (first coefficient).
Complex log_derivative_value(const AnalyticFunction& f, Complex z);

SaddleInfo make_saddle_info(const AnalyticFunction& f, Complex z, int n);

/// Multi-saddle estimate (sum |F|/sqrt(Re b)) / |sum F/sqrt(b)| of the
/// quasi-optimal condition number; +inf on a vanishing denominator.
double saddle_kappa_estimate(const std::vector<SaddleInfo>& saddles);

/// fourth root of 1 + (Im b / Re b)^2: the condition-number factor from a
/// circle missing the steepest-descent direction at the saddle.
double steepest_descent_deviation(Complex b);

/// The 1/Gamma resonance data at order n: the saddle from z = e^{W(1/2-n)},
/// the collective phase phi_n, and |sec phi_n| (the kappa prediction).
struct GammaResonance {
    double r = 0.0;       // |z_n|
    double theta = 0.0;   // arg z_n, in (pi/2, pi)
    double phi = 0.0;     // collective phase
    double sec_abs = 0.0; // |sec phi|
};

GammaResonance gamma_resonance(int n);

} // namespace cauchy

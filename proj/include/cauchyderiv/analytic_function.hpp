#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include "cauchyderiv/scaled_complex.hpp"

namespace cauchy {

/// Evaluator of an analytic function f plus the growth metadata the radius
/// strategies feed on. `log_evaluate`, when set, must be a branch of log f
/// whose exp reproduces `evaluate` wherever the latter does not over/underflow;
/// it is what makes circle values like e^1342 usable. `log_derivative` is
/// f'/f, preferred over `derivative` by the saddle solvers because the ratio
/// stays bounded where f itself leaves double range.
struct AnalyticFunction {
    using ComplexL = std::complex<long double>;

    std::function<Complex(Complex)> evaluate;
    std::function<Complex(Complex)> log_evaluate;   // optional
    std::function<Complex(Complex)> derivative;     // optional
    std::function<Complex(Complex)> log_derivative; // optional, f'/f

    // Optional extended-precision log path. Circle phases Im log f reach
    // hundreds of radians; evaluating them in long double keeps the absolute
    // phase error near machine eps, which the ring sums need once kappa
    // amplification approaches 1/eps.
    std::function<ComplexL(ComplexL)> log_evaluate_ld;

    double radius_of_convergence = std::numeric_limits<double>::infinity();
    double order = std::numeric_limits<double>::quiet_NaN(); // rho
    double type_ = std::numeric_limits<double>::quiet_NaN(); // tau
    bool nonnegative_coefficients = false;

    std::optional<double> saddle_ray;           // angle of predominant growth
    std::optional<double> darboux_beta;         // branch exponent on |z| = R
    std::optional<Complex> darboux_singularity; // its location

    bool has_log() const { return static_cast<bool>(log_evaluate); }
    bool entire() const { return std::isinf(radius_of_convergence); }
    bool has_order_and_type() const {
        return std::isfinite(order) && order > 0.0 && std::isfinite(type_) && type_ > 0.0;
    }

    /// Overflow-safe evaluation; goes through the log path when available.
    ScaledComplex eval_scaled(Complex z) const {
        if (log_evaluate) return ScaledComplex::from_log(log_evaluate(z));
        return ScaledComplex::from(evaluate(z));
    }
};

class EvaluationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace cauchy

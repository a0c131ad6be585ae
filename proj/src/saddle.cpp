#include "cauchyderiv/saddle.hpp"

#include <cmath>
#include <stdexcept>

#include "cauchyderiv/sfun.hpp"

namespace cauchy {
namespace {

Complex log_f(const AnalyticFunction& f, Complex z) {
    if (f.log_evaluate) return f.log_evaluate(z);
    Complex v = f.evaluate(z);
    if (v == Complex(0.0, 0.0))
        throw EvaluationError("log_derivative_coefficients: evaluation at a zero of f");
    return std::log(v);
}

// central difference with one Richardson pass
Complex richardson_derivative(const std::function<Complex(Complex)>& g, Complex z, double h) {
    Complex d1 = (g(z + h) - g(z - h)) / (2.0 * h);
    Complex d2 = (g(z + h / 2.0) - g(z - h / 2.0)) / h;
    return (4.0 * d2 - d1) / 3.0;
}

double step_for(Complex z) { return std::max(1e-6, 1e-6 * std::abs(z)); }

} // namespace

Complex log_derivative_value(const AnalyticFunction& f, Complex z) {
    if (f.log_derivative) return f.log_derivative(z);
    if (f.derivative) {
        Complex fz = f.evaluate(z);
        if (fz == Complex(0.0, 0.0))
            throw EvaluationError("log_derivative_value: evaluation at a zero of f");
        return f.derivative(z) / fz;
    }
    return richardson_derivative([&f](Complex w) { return log_f(f, w); }, z, step_for(z));
}

std::pair<Complex, Complex> log_derivative_coefficients(const AnalyticFunction& f, Complex z) {
    Complex a = z * log_derivative_value(f, z);
    // when a itself comes from finite differences its values carry ~eps/h
    // noise, so the outer step must widen to keep b from amplifying it
    bool exact_inner = static_cast<bool>(f.log_derivative) || static_cast<bool>(f.derivative);
    double h = exact_inner ? step_for(z) : std::max(1e-4, 1e-4 * std::abs(z));
    Complex da = richardson_derivative(
        [&f](Complex w) { return w * log_derivative_value(f, w); }, z, h);
    return {a, z * da};
}

SaddleInfo make_saddle_info(const AnalyticFunction& f, Complex z, int n) {
    SaddleInfo s;
    s.z = z;
    auto [a, b] = log_derivative_coefficients(f, z);
    s.a = a;
    s.b = b;
    s.F_value = f.eval_scaled(z).scaled_by_exp(
                    -static_cast<long double>(n) *
                    std::log(static_cast<long double>(std::abs(z)))) *
                ScaledComplex::from(std::polar(1.0, -static_cast<double>(n) * std::arg(z)));
    return s;
}

double saddle_kappa_estimate(const std::vector<SaddleInfo>& saddles) {
    if (saddles.empty())
        throw std::invalid_argument("saddle_kappa_estimate: no saddles given");
    double scale = -std::numeric_limits<double>::infinity();
    for (const auto& s : saddles) {
        if (!(s.b.real() > 0.0))
            throw std::domain_error("saddle_kappa_estimate: Re b must be positive at a saddle");
        scale = std::max(scale, s.F_value.log_abs());
    }
    Complex den(0.0, 0.0);
    double num = 0.0;
    for (const auto& s : saddles) {
        Complex F = s.F_value.mantissa() * std::exp(s.F_value.exponent() - scale);
        num += std::abs(F) / std::sqrt(s.b.real());
        den += F / std::sqrt(s.b);
    }
    double d = std::abs(den);
    if (d == 0.0) return std::numeric_limits<double>::infinity();
    return num / d;
}

double steepest_descent_deviation(Complex b) {
    if (!(b.real() > 0.0))
        throw std::domain_error("steepest_descent_deviation: Re b must be positive");
    double t = b.imag() / b.real();
    return std::pow(1.0 + t * t, 0.25);
}

GammaResonance gamma_resonance(int n) {
    if (n < 2) throw std::invalid_argument("gamma_resonance: need n >= 2");
    using CL = std::complex<long double>;
    const long double pi = 3.14159265358979323846264338327950288L;
    long double nn = static_cast<long double>(n) - 0.5L;
    CL w = lambert_w0_complex_ld(CL(0.5L - static_cast<long double>(n), 0.0L));
    long double theta = w.imag(); // arg e^W
    long double r = std::exp(w.real());
    long double st = std::sin(theta);
    long double ct = std::cos(theta);
    long double cot = ct / st;
    long double csc2 = 1.0L / (st * st);
    long double arccot_arg = cot - theta * csc2;
    // principal odd arccot; the argument stays strictly negative for
    // theta in (pi/2, pi), so this branch is continuous on the whole range
    // (and it reproduces the resonance peaks, which the (0, pi) branch
    // misses by a quarter period)
    long double arccot = std::atan(1.0L / arccot_arg);
    long double phi =
        nn * (st * st / theta - theta + theta / (12.0L * nn * nn)) - 0.5L * arccot;
    long double sec_abs = 1.0L / std::abs(std::cos(phi));

    GammaResonance out;
    out.r = static_cast<double>(r);
    out.theta = static_cast<double>(theta);
    out.phi = static_cast<double>(phi);
    out.sec_abs = static_cast<double>(sec_abs);
    return out;
}

} // namespace cauchy

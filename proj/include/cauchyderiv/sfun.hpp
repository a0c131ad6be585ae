#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "cauchyderiv/analytic_function.hpp"
#include "cauchyderiv/scaled_complex.hpp"

namespace cauchy {

/// Principal branch of the Lambert W function on the real axis, x >= -1/e.
/// Series seed near 0, asymptotic log x - log log x seed for large x, then
/// Halley iterations; W e^W = x to 1e-14 relative.
double lambert_w0(double x);

/// Principal branch in the plane. For real z < -1/e (where the principal
/// values come as a conjugate pair) the root with positive imaginary part is
/// returned.
Complex lambert_w0_complex(Complex z);

/// Same in extended precision; the gamma-resonance phase needs W to better
/// than double accuracy.
std::complex<long double> lambert_w0_complex_ld(std::complex<long double> z);

/// Analytic log-gamma (continuous off the cut (-inf, 0]); Lanczos sum for
/// Re z >= 0.5, reflection with an unwound log sin below.
Complex log_gamma_complex(Complex z);

/// psi(z) = Gamma'(z)/Gamma(z), same domain handling as log_gamma_complex.
Complex digamma_complex(Complex z);

/// One catalog function: evaluator plus an optional exact-coefficient oracle.
/// Growth and singularity metadata live on the AnalyticFunction itself.
struct CatalogEntry {
    std::string name;
    std::optional<AnalyticFunction> function;
    std::function<ScaledComplex(int)> coefficient_oracle; // may be empty
    std::string note;
};

/// All built-in test functions. Parameterized families are included with
/// their default parameters; use the make_* factories for other values.
const std::vector<CatalogEntry>& catalog();

/// Lookup by name; throws std::out_of_range listing the known names.
const CatalogEntry& find_catalog(const std::string& name);

AnalyticFunction make_f_beta(double beta);
ScaledComplex f_beta_coefficient(double beta, int n);

AnalyticFunction make_q_pochhammer(double q);
ScaledComplex q_pochhammer_coefficient(double q, int n);

AnalyticFunction make_bessel_i(int k);
AnalyticFunction make_bessel_j(int k);
AnalyticFunction make_bessel_i_scaled(int k); // z^{-k/2} I_k(2 sqrt z)

/// Order and type of alpha z^mu pFq(b; c; beta z^nu) for p <= q: the
/// generalized hypergeometric growth metadata (no evaluator attached).
struct OrderType {
    double rho;
    double tau;
};
OrderType hypergeometric_order_type(int p, int q, double beta, int nu);

/// Exact-series oracles (big-rational / big-integer arithmetic, memoized).
ScaledComplex bernoulli_gen_coefficient(int n); // B_n / n!
ScaledComplex bell_coefficient(int n);          // Bell_n / n!
ScaledComplex sec6_coefficient(int n);          // n <= 120
ScaledComplex airy_ai_coefficient(int n);
ScaledComplex airy_bi_coefficient(int n);
ScaledComplex fornberg_log_coefficient(int n);  // (1+z)^10 log(1+z)

} // namespace cauchy

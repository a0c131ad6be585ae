#include "cauchyderiv/sfun.hpp"

#include <cmath>
#include <stdexcept>

namespace cauchy {
namespace {

// Taylor series W(z) = sum (-1)^{n-1} n^{n-1} z^n / n!, |z| < 1/e.
template <typename C>
C w_series(C z) {
    C term = z;
    C sum = z;
    using R = decltype(std::abs(z));
    R nf = 1;
    for (int n = 2; n <= 22; ++n) {
        nf *= n;
        R coeff = std::pow(static_cast<R>(n), static_cast<R>(n - 1)) / nf;
        R sign = (n % 2 == 0) ? R(-1) : R(1);
        C zn = std::pow(z, n);
        sum += sign * coeff * zn;
    }
    return sum;
}

template <typename C>
C w_seed(C z) {
    using R = decltype(std::abs(z));
    R az = std::abs(z);
    C ez1 = std::exp(R(1)) * z + R(1);
    if (std::abs(ez1) < R(0.45)) {
        // branch-point expansion around z = -1/e
        C p = std::sqrt(R(2) * ez1);
        return C(-1) + p - p * p / R(3) + R(11) / R(72) * p * p * p;
    }
    if (az < R(0.25)) return w_series(z);
    if (az > R(2.5)) {
        C l1 = std::log(z);
        C l2 = std::log(l1);
        return l1 - l2 + l2 / l1;
    }
    return std::log(C(1) + z);
}

template <typename C>
C w_halley(C z, const char* who) {
    using R = decltype(std::abs(z));
    C w = w_seed(z);
    const R eps = std::numeric_limits<R>::epsilon();
    for (int it = 0; it < 100; ++it) {
        C ew = std::exp(w);
        C f = w * ew - z;
        C wp1 = w + R(1);
        C step = f / (ew * wp1 - (w + R(2)) * f / (R(2) * wp1));
        w -= step;
        if (std::abs(step) <= R(4) * eps * (std::abs(w) + eps)) return w;
    }
    // accept only if the defining identity already holds tightly
    if (std::abs(w * std::exp(w) - z) <= R(1e3) * eps * std::max(std::abs(z), R(1))) return w;
    throw std::runtime_error(std::string(who) + ": Halley iteration did not converge");
}

} // namespace

double lambert_w0(double x) {
    static const double min_x = -std::exp(-1.0);
    if (x < min_x * (1.0 + 1e-14) - 1e-300)
        throw std::domain_error("lambert_w0: argument below -1/e");
    if (x == 0.0) return 0.0;
    if (x <= min_x) return -1.0;
    Complex w = w_halley(Complex(x, 0.0), "lambert_w0");
    return w.real();
}

Complex lambert_w0_complex(Complex z) {
    if (z == Complex(0.0, 0.0)) return {0.0, 0.0};
    Complex w = w_halley(z, "lambert_w0_complex");
    // real arguments below the branch point: pick the root in the upper plane
    if (z.imag() == 0.0 && z.real() < -std::exp(-1.0) && w.imag() < 0.0) w = std::conj(w);
    return w;
}

std::complex<long double> lambert_w0_complex_ld(std::complex<long double> z) {
    if (z == std::complex<long double>(0.0L, 0.0L)) return {0.0L, 0.0L};
    std::complex<long double> w = w_halley(z, "lambert_w0_complex_ld");
    if (z.imag() == 0.0L && z.real() < -std::exp(-1.0L) && w.imag() < 0.0L) w = std::conj(w);
    return w;
}

} // namespace cauchy

#pragma once

#include <cmath>
#include <complex>
#include <limits>

namespace cauchy {

using Complex = std::complex<double>;

/// A complex value stored as mantissa * exp(exponent), with |mantissa| in
/// [1, e) after normalization. The exponent lives on the natural-log scale
/// and is carried in extended precision: magnitudes like e^1342
/// (reciprocal-gamma circle values) must keep ~1e-16 relative resolution,
/// which a double exponent of that size cannot hold.
class ScaledComplex {
public:
    ScaledComplex() = default;

    ScaledComplex(Complex mantissa, long double exponent) : m_(mantissa), e_(exponent) {
        normalize();
    }

    static ScaledComplex from(Complex value) { return ScaledComplex(value, 0.0L); }

    static ScaledComplex from(double value) { return ScaledComplex(Complex(value, 0.0), 0.0L); }

    /// Build exp(log_value) without ever forming the unscaled number.
    static ScaledComplex from_log(Complex log_value) {
        double k = std::floor(log_value.real());
        ScaledComplex r;
        r.m_ = std::exp(Complex(log_value.real() - k, log_value.imag()));
        r.e_ = k;
        r.normalize();
        return r;
    }

    static ScaledComplex zero() { return ScaledComplex(); }

    Complex mantissa() const { return m_; }
    double exponent() const { return static_cast<double>(e_); }
    bool is_zero() const { return m_ == Complex(0.0, 0.0); }

    /// Natural log of the modulus; -inf for the zero value.
    double log_abs() const {
        if (is_zero()) return -std::numeric_limits<double>::infinity();
        return static_cast<double>(e_ + static_cast<long double>(std::log(std::abs(m_))));
    }

    /// Collapse to a hardware double; overflows to inf / underflows to 0
    /// outside the representable range.
    Complex to_complex() const { return m_ * std::exp(static_cast<double>(e_)); }

    double abs() const { return std::exp(log_abs()); }
    double arg() const { return std::arg(m_); }

    /// mantissa shifted to a reference scale: mantissa * exp(exponent - scale).
    Complex shifted_mantissa(double scale) const {
        if (is_zero()) return {0.0, 0.0};
        return m_ * std::exp(static_cast<double>(e_ - static_cast<long double>(scale)));
    }

    ScaledComplex conj() const {
        ScaledComplex r;
        r.m_ = std::conj(m_);
        r.e_ = e_;
        return r;
    }

    ScaledComplex operator-() const {
        ScaledComplex r;
        r.m_ = -m_;
        r.e_ = e_;
        return r;
    }

    ScaledComplex operator*(const ScaledComplex& o) const {
        if (is_zero() || o.is_zero()) return zero();
        return ScaledComplex(m_ * o.m_, e_ + o.e_);
    }

    ScaledComplex operator/(const ScaledComplex& o) const {
        return ScaledComplex(m_ / o.m_, e_ - o.e_);
    }

    ScaledComplex operator*(double s) const { return ScaledComplex(m_ * s, e_); }
    ScaledComplex operator/(double s) const { return ScaledComplex(m_ / s, e_); }

    ScaledComplex operator+(const ScaledComplex& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        if (e_ >= o.e_)
            return ScaledComplex(m_ + o.m_ * std::exp(static_cast<double>(o.e_ - e_)), e_);
        return ScaledComplex(o.m_ + m_ * std::exp(static_cast<double>(e_ - o.e_)), o.e_);
    }

    ScaledComplex operator-(const ScaledComplex& o) const { return *this + (-o); }

    /// Multiply by exp(shift) exactly (exponent arithmetic only).
    ScaledComplex scaled_by_exp(long double shift) const {
        if (is_zero()) return zero();
        ScaledComplex r;
        r.m_ = m_;
        r.e_ = e_ + shift;
        return r;
    }

    bool finite() const {
        return std::isfinite(m_.real()) && std::isfinite(m_.imag()) && std::isfinite(e_);
    }

private:
    void normalize() {
        double a = std::abs(m_);
        if (a == 0.0) {
            m_ = Complex(0.0, 0.0);
            e_ = 0.0L;
            return;
        }
        if (!std::isfinite(a) || !std::isfinite(e_)) return;
        double k = std::floor(std::log(a));
        if (k != 0.0) {
            m_ *= std::exp(-k);
            e_ += k;
        }
        // rounding can leave |m| marginally outside [1, e); one fix-up pass
        a = std::abs(m_);
        if (a < 1.0) {
            m_ *= std::exp(1.0);
            e_ -= 1.0L;
        } else if (a >= std::exp(1.0)) {
            m_ *= std::exp(-1.0);
            e_ += 1.0L;
        }
    }

    Complex m_{0.0, 0.0};
    long double e_ = 0.0L;
};

/// Relative distance |a-b| / |b| computed on the log scale, so it works for
/// values far outside double range. Returns +inf when b is zero and a is not.
inline double relative_difference(const ScaledComplex& a, const ScaledComplex& b) {
    ScaledComplex d = a - b;
    if (d.is_zero()) return 0.0;
    if (b.is_zero()) return std::numeric_limits<double>::infinity();
    return std::exp(d.log_abs() - b.log_abs());
}

} // namespace cauchy

#include "cauchyderiv/quad.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

namespace cauchy {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Neumaier-compensated accumulator; deterministic for a fixed visit order.
struct CompensatedSum {
    double s = 0.0;
    double c = 0.0;
    void add(double x) {
        double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    double value() const { return s + c; }
};

struct CompensatedComplexSum {
    CompensatedSum re, im;
    void add(Complex z) {
        re.add(z.real());
        im.add(z.imag());
    }
    Complex value() const { return {re.value(), im.value()}; }
};

Complex node(double r, int j, int m) {
    return std::polar(r, kTwoPi * static_cast<double>(j) / static_cast<double>(m));
}

// extended-precision sample: node and log f in long double, so the stored
// double mantissa is phase-accurate to ~eps even when Im log f is large
ScaledComplex sample_ld(const AnalyticFunction& f, double r, int j, int m) {
    constexpr long double kTwoPiL = 6.283185307179586476925286766559005768L;
    long double theta = kTwoPiL * static_cast<long double>(j) / static_cast<long double>(m);
    std::complex<long double> z = std::polar(static_cast<long double>(r), theta);
    std::complex<long double> L = f.log_evaluate_ld(z);
    long double shift = std::floor(static_cast<long double>(L.real()));
    std::complex<long double> mant =
        std::exp(std::complex<long double>(L.real() - shift, L.imag()));
    return ScaledComplex(Complex(static_cast<double>(mant.real()), static_cast<double>(mant.imag())),
                         static_cast<double>(shift));
}

void eval_range(const AnalyticFunction& f, double r, int m, int stride, int offset,
                std::vector<ScaledComplex>& out, int lo, int hi) {
    if (f.log_evaluate_ld) {
        for (int k = lo; k < hi; ++k) {
            int j = offset + k * stride;
            ScaledComplex v = sample_ld(f, r, j, m);
            if (!v.finite())
                throw EvaluationError("log evaluation returned a non-finite value at node " +
                                      std::to_string(j) + " (angle 2*pi*" + std::to_string(j) +
                                      "/" + std::to_string(m) + ")");
            out[k] = v;
        }
        return;
    }
    for (int k = lo; k < hi; ++k) {
        int j = offset + k * stride;
        Complex z = node(r, j, m);
        ScaledComplex v = f.eval_scaled(z);
        if (!v.finite()) {
            if (f.has_log())
                throw EvaluationError("log evaluation returned a non-finite value at node " +
                                      std::to_string(j) + " (angle 2*pi*" + std::to_string(j) + "/" +
                                      std::to_string(m) + ")");
            throw EvaluationError("evaluation returned a non-finite value at node " +
                                  std::to_string(j) + " (angle 2*pi*" + std::to_string(j) + "/" +
                                  std::to_string(m) + ")");
        }
        out[k] = v;
    }
}

// Evaluates samples[k] = f(node(offset + k*stride)) for k in [0, count).
std::vector<ScaledComplex> evaluate_nodes(const AnalyticFunction& f, double r, int m,
                                          int stride, int offset, int count) {
    std::vector<ScaledComplex> out(count);
    int threads = std::min(evaluation_threads(), count);
    if (threads <= 1) {
        eval_range(f, r, m, stride, offset, out, 0, count);
        return out;
    }
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    int chunk = (count + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        int lo = t * chunk;
        int hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
            try {
                eval_range(f, r, m, stride, offset, out, lo, hi);
            } catch (...) {
                std::lock_guard<std::mutex> g(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    return out;
}

double max_log_abs(const std::vector<ScaledComplex>& samples) {
    double s = -std::numeric_limits<double>::infinity();
    for (const auto& v : samples) s = std::max(s, v.log_abs());
    return std::isfinite(s) ? s : 0.0;
}

// Sample shifted to the common scale; underflow of far-below-scale samples is
// the intended "trading tails" behavior.
Complex shifted(const ScaledComplex& v, double common_scale) {
    return v.shifted_mantissa(common_scale);
}

struct RingSums {
    Complex weighted;  // sum of e^{-2 pi i j n/m} f_j, at scale e^{common_scale}
    double abs_sum;    // sum of |f_j|, same scale
};

RingSums ring_sums(const SampleRing& ring, int n) {
    CompensatedComplexSum weighted;
    CompensatedSum abs_sum;
    long long m = ring.count;
    for (long long j = 0; j < m; ++j) {
        Complex g = shifted(ring.samples[static_cast<size_t>(j)], ring.common_scale);
        long long k = (j * static_cast<long long>(n)) % m;
        double angle = -kTwoPi * static_cast<double>(k) / static_cast<double>(m);
        weighted.add(std::polar(1.0, angle) * g);
        abs_sum.add(std::abs(g));
    }
    return {weighted.value(), abs_sum.value()};
}

} // namespace

const char* to_string(DriverStatus s) {
    switch (s) {
        case DriverStatus::converged: return "converged";
        case DriverStatus::max_nodes_reached: return "max_nodes_reached";
        case DriverStatus::degenerate_denominator: return "degenerate_denominator";
    }
    return "unknown";
}

int evaluation_threads() {
    const char* env = std::getenv("CAUCHY_DERIV_THREADS");
    if (!env) return 1;
    int v = std::atoi(env);
    if (v < 1) return 1;
    return std::min(v, 256);
}

SampleRing sample_ring(const AnalyticFunction& f, double r, int m) {
    if (!(r > 0.0)) throw std::invalid_argument("sample_ring: radius must be positive");
    if (m < 1) throw std::invalid_argument("sample_ring: node count must be >= 1");
    if (r > f.radius_of_convergence)
        throw std::domain_error("sample_ring: radius outside the closed disk of analyticity");
    SampleRing ring;
    ring.radius = r;
    ring.count = m;
    ring.samples = evaluate_nodes(f, r, m, 1, 0, m);
    ring.common_scale = max_log_abs(ring.samples);
    return ring;
}

SampleRing doubled_ring(const AnalyticFunction& f, const SampleRing& ring) {
    int m = ring.count;
    SampleRing out;
    out.radius = ring.radius;
    out.count = 2 * m;
    out.samples.resize(static_cast<size_t>(2) * m);
    std::vector<ScaledComplex> fresh = evaluate_nodes(f, ring.radius, 2 * m, 2, 1, m);
    for (int j = 0; j < m; ++j) {
        out.samples[static_cast<size_t>(2) * j] = ring.samples[j];
        out.samples[static_cast<size_t>(2) * j + 1] = fresh[j];
    }
    out.common_scale = std::max(ring.common_scale, max_log_abs(fresh));
    return out;
}

ScaledComplex trapezoidal_coefficient(const SampleRing& ring, int n) {
    RingSums s = ring_sums(ring, n);
    ScaledComplex sum(s.weighted, ring.common_scale);
    if (sum.is_zero()) return ScaledComplex::zero();
    sum = sum / static_cast<double>(ring.count);
    // extended-precision shift: n log r reaches hundreds, where a double
    // product alone would already cost ~1e-14 relative
    return sum.scaled_by_exp(-static_cast<long double>(n) *
                             std::log(static_cast<long double>(ring.radius)));
}

double discrete_condition_number(const SampleRing& ring, int n) {
    RingSums s = ring_sums(ring, n);
    double den = std::abs(s.weighted);
    if (den == 0.0) return std::numeric_limits<double>::infinity();
    return s.abs_sum / den;
}

ScaledComplex mean_modulus(const SampleRing& ring) {
    RingSums s = ring_sums(ring, 0);
    return ScaledComplex(Complex(s.abs_sum / ring.count, 0.0), ring.common_scale);
}

ScaledComplex converged_mean_modulus(const AnalyticFunction& f, double r, int n,
                                     double rel_tol, int m_max) {
    int m = std::max(n + 1, 64);
    SampleRing ring = sample_ring(f, r, m);
    ScaledComplex mean = mean_modulus(ring);
    // two consecutive quiet doublings: symmetric integrands have vanishing
    // odd harmonics, which makes a single small step a false plateau
    int quiet = 0;
    while (2 * ring.count <= m_max) {
        ring = doubled_ring(f, ring);
        ScaledComplex next = mean_modulus(ring);
        double diff = relative_difference(next, mean);
        mean = next;
        quiet = diff <= rel_tol ? quiet + 1 : 0;
        if (quiet >= 2) break;
    }
    return mean;
}

double reference_condition_log10(const AnalyticFunction& f, const ScaledComplex& exact_an,
                                 int n, double r, int m) {
    if (exact_an.is_zero())
        throw std::domain_error("reference_condition_number: condition number undefined (a_n = 0)");
    SampleRing ring = sample_ring(f, r, m);
    ScaledComplex mean = mean_modulus(ring);
    double log_kappa = mean.log_abs() - exact_an.log_abs() - n * std::log(r);
    return log_kappa / std::log(10.0);
}

double reference_condition_number(const AnalyticFunction& f, const ScaledComplex& exact_an,
                                  int n, double r, int m) {
    double lg = reference_condition_log10(f, exact_an, n, r, m);
    return std::pow(10.0, lg);
}

double reference_condition_number(const AnalyticFunction& f, Complex exact_an,
                                  int n, double r, int m) {
    return reference_condition_number(f, ScaledComplex::from(exact_an), n, r, m);
}

} // namespace cauchy

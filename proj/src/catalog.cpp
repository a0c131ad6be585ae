#include "cauchyderiv/sfun.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace cauchy {
namespace {

constexpr double kPi = 3.141592653589793238462643383279;
constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kLn2 = 0.69314718055994530941723212145818;
constexpr double kInf = std::numeric_limits<double>::infinity();

ScaledComplex inverse_factorial(int n) {
    return ScaledComplex::from_log(Complex(-std::lgamma(n + 1.0), 0.0));
}

// sum c_k x^k together with its x-derivative. Accumulation runs in doubles
// against a moving natural-log scale; z^k carries an exact power-of-two shift
// shared between value and derivative, so their ratio is unaffected by it.
struct SeriesValue {
    ScaledComplex value;
    ScaledComplex derivative;
};

SeriesValue evaluate_scaled_series(const std::function<ScaledComplex(int)>& coeff, int max_terms,
                                   Complex x) {
    if (x == Complex(0.0, 0.0))
        return {coeff(0), coeff(1)};
    double scale = coeff(0).log_abs();
    if (!std::isfinite(scale)) scale = 0.0;
    Complex acc(0.0, 0.0), dacc(0.0, 0.0);
    Complex xp(1.0, 0.0);
    long xp_bits = 0;
    double max_log = -kInf;
    double prev_log = -kInf;
    int below = 0;
    for (int k = 0; k < max_terms; ++k) {
        ScaledComplex c = coeff(k);
        if (!c.is_zero()) {
            Complex mant = c.mantissa() * xp;
            double e = c.exponent() + static_cast<double>(xp_bits) * kLn2;
            double term_log = e + std::log(std::abs(mant));
            if (term_log > scale + 200.0) {
                double shift = scale - term_log;
                acc *= std::exp(shift);
                dacc *= std::exp(shift);
                scale = term_log;
            }
            Complex g = mant * std::exp(e - scale);
            acc += g;
            dacc += g * (static_cast<double>(k) / x);
            max_log = std::max(max_log, term_log);
            if (k > 8 && term_log < max_log - 55.0 && term_log <= prev_log) {
                if (++below >= 8) break;
            } else {
                below = 0;
            }
            prev_log = term_log;
        }
        if (std::abs(xp) > 0x1p500) {
            xp *= 0x1p-512;
            xp_bits += 512;
        }
        xp *= x;
    }
    return {ScaledComplex(acc, scale), ScaledComplex(dacc, scale)};
}

// --- Airy -------------------------------------------------------------

SeriesValue airy_eval(Complex z, bool bi) {
    double az = std::abs(z);
    if (az > 130.0)
        throw EvaluationError("airy evaluator: series accurate only for |z| <= 110");
    int terms = static_cast<int>(3.0 * std::pow(az, 1.5)) + 400;
    auto coeff = bi ? airy_bi_coefficient : airy_ai_coefficient;
    return evaluate_scaled_series([coeff](int k) { return coeff(k); }, terms, z);
}

AnalyticFunction make_airy(bool bi) {
    AnalyticFunction f;
    f.evaluate = [bi](Complex z) { return airy_eval(z, bi).value.to_complex(); };
    f.log_evaluate = [bi](Complex z) {
        ScaledComplex v = airy_eval(z, bi).value;
        return Complex(v.log_abs(), v.arg());
    };
    f.log_derivative = [bi](Complex z) {
        SeriesValue s = airy_eval(z, bi);
        return (s.derivative / s.value).to_complex();
    };
    f.order = 1.5;
    f.type_ = 2.0 / 3.0;
    f.nonnegative_coefficients = bi;
    f.saddle_ray = bi ? 0.0 : 2.0 * kPi / 3.0;
    return f;
}

// --- Bessel-type series (in t = z^2/4 or t = z) ------------------------

ScaledComplex bessel_term(int j, int k) {
    return ScaledComplex::from_log(Complex(-std::lgamma(j + 1.0) - std::lgamma(j + k + 1.0), 0.0));
}

// f(z) = (z/2)^k S(t), t = s * z^2/4 (s = +1 for I_k, -1 for J_k)
AnalyticFunction make_bessel(int k, double s) {
    auto eval_scaled = [k, s](Complex z) {
        Complex t = s * z * z / 4.0;
        int terms = static_cast<int>(2.0 * std::sqrt(std::abs(t))) + 60;
        auto coeff = [k](int j) { return bessel_term(j, k); };
        SeriesValue sv = evaluate_scaled_series(coeff, terms, t);
        ScaledComplex front =
            k == 0 ? ScaledComplex::from(1.0)
                   : ScaledComplex::from_log(static_cast<double>(k) * std::log(z / 2.0));
        return front * sv.value;
    };
    AnalyticFunction f;
    f.evaluate = [eval_scaled](Complex z) { return eval_scaled(z).to_complex(); };
    f.log_evaluate = [eval_scaled](Complex z) {
        ScaledComplex v = eval_scaled(z);
        return Complex(v.log_abs(), v.arg());
    };
    f.order = 1.0;
    f.type_ = 1.0;
    f.nonnegative_coefficients = (s > 0.0);
    f.saddle_ray = (s > 0.0) ? 0.0 : kPi / 2.0;
    return f;
}

AnalyticFunction make_bessel_i_scaled_impl(int k) {
    auto eval_scaled = [k](Complex z) {
        int terms = static_cast<int>(2.0 * std::sqrt(std::abs(z))) + 60;
        SeriesValue sv =
            evaluate_scaled_series([k](int j) { return bessel_term(j, k); }, terms, z);
        return sv;
    };
    AnalyticFunction f;
    f.evaluate = [eval_scaled](Complex z) { return eval_scaled(z).value.to_complex(); };
    f.log_evaluate = [eval_scaled](Complex z) {
        ScaledComplex v = eval_scaled(z).value;
        return Complex(v.log_abs(), v.arg());
    };
    f.log_derivative = [eval_scaled](Complex z) {
        SeriesValue s = eval_scaled(z);
        return (s.derivative / s.value).to_complex();
    };
    f.order = 0.5;
    f.type_ = 2.0;
    f.nonnegative_coefficients = true;
    f.saddle_ray = 0.0;
    return f;
}

// --- simple closed forms ------------------------------------------------

AnalyticFunction make_exp() {
    AnalyticFunction f;
    f.evaluate = [](Complex z) { return std::exp(z); };
    f.log_evaluate = [](Complex z) { return z; };
    f.log_evaluate_ld = [](AnalyticFunction::ComplexL z) { return z; };
    f.derivative = [](Complex z) { return std::exp(z); };
    f.log_derivative = [](Complex) { return Complex(1.0, 0.0); };
    f.order = 1.0;
    f.type_ = 1.0;
    f.nonnegative_coefficients = true;
    f.saddle_ray = 0.0;
    return f;
}

AnalyticFunction make_cos() {
    AnalyticFunction f;
    f.evaluate = [](Complex z) { return std::cos(z); };
    f.derivative = [](Complex z) { return -std::sin(z); };
    f.order = 1.0;
    f.type_ = 1.0;
    f.saddle_ray = kPi / 2.0;
    return f;
}

AnalyticFunction make_sin() {
    AnalyticFunction f;
    f.evaluate = [](Complex z) { return std::sin(z); };
    f.derivative = [](Complex z) { return std::cos(z); };
    f.order = 1.0;
    f.type_ = 1.0;
    f.saddle_ray = kPi / 2.0;
    return f;
}

AnalyticFunction make_gaussian() {
    AnalyticFunction f;
    f.evaluate = [](Complex z) { return std::exp(-z * z); };
    f.log_evaluate = [](Complex z) { return -z * z; };
    f.derivative = [](Complex z) { return -2.0 * z * std::exp(-z * z); };
    f.log_derivative = [](Complex z) { return -2.0 * z; };
    f.order = 2.0;
    f.type_ = 1.0;
    f.saddle_ray = kPi / 2.0;
    return f;
}

AnalyticFunction make_erf() {
    AnalyticFunction f;
    // Maclaurin series; cancelation limits it to moderate |z| (~<= 5)
    f.evaluate = [](Complex z) {
        Complex t = -z * z;
        int terms = static_cast<int>(3.0 * std::abs(t)) + 40;
        auto coeff = [](int j) {
            return ScaledComplex::from_log(Complex(-std::lgamma(j + 1.0), 0.0)) /
                   static_cast<double>(2 * j + 1);
        };
        SeriesValue sv = evaluate_scaled_series(coeff, terms, t);
        return 2.0 / std::sqrt(kPi) * z * sv.value.to_complex();
    };
    f.order = 2.0;
    f.type_ = 1.0;
    f.saddle_ray = kPi / 2.0;
    return f;
}

AnalyticFunction make_bell() {
    AnalyticFunction f;
    f.evaluate = [](Complex z) { return std::exp(std::exp(z) - 1.0); };
    f.log_evaluate = [](Complex z) { return std::exp(z) - 1.0; };
    f.derivative = [](Complex z) { return std::exp(z) * std::exp(std::exp(z) - 1.0); };
    f.log_derivative = [](Complex z) { return std::exp(z); };
    f.order = kInf;
    f.nonnegative_coefficients = true;
    f.saddle_ray = 0.0;
    return f;
}

AnalyticFunction make_recip_gamma() {
    AnalyticFunction f;
    f.evaluate = [](Complex z) { return std::exp(-log_gamma_complex(z)); };
    f.log_evaluate = [](Complex z) { return -log_gamma_complex(z); };
    f.log_derivative = [](Complex z) { return -digamma_complex(z); };
    f.order = 1.0;
    f.type_ = kInf; // maximal type
    return f;
}

AnalyticFunction make_sec6() {
    AnalyticFunction f;
    f.evaluate = [](Complex z) {
        Complex c = std::cos(z);
        Complex s = 1.0 / c;
        Complex s2 = s * s;
        return s2 * s2 * s2;
    };
    // cos maps |z| < pi/2 into the right half plane, so the principal log is
    // a continuous branch on every admissible circle
    f.log_evaluate = [](Complex z) { return -6.0 * std::log(std::cos(z)); };
    f.log_evaluate_ld = [](AnalyticFunction::ComplexL z) { return -6.0L * std::log(std::cos(z)); };
    f.log_derivative = [](Complex z) { return 6.0 * std::tan(z); };
    f.radius_of_convergence = kPi / 2.0;
    f.nonnegative_coefficients = true;
    f.darboux_beta = -6.0;
    f.darboux_singularity = Complex(kPi / 2.0, 0.0);
    return f;
}

AnalyticFunction make_bernoulli_gen() {
    AnalyticFunction f;
    f.evaluate = [](Complex z) {
        if (std::abs(z) < 1e-4) {
            Complex d = 1.0 + z / 2.0 + z * z / 6.0 + z * z * z / 24.0 + z * z * z * z / 120.0;
            return 1.0 / d;
        }
        return z / (std::exp(z) - 1.0);
    };
    f.log_derivative = [](Complex z) {
        if (std::abs(z) < 1e-4) return Complex(-0.5, 0.0) + z / 6.0 - z * z * z / 360.0;
        return 1.0 / z - std::exp(z) / (std::exp(z) - 1.0);
    };
    f.radius_of_convergence = kTwoPi;
    f.darboux_beta = -1.0;
    f.darboux_singularity = Complex(0.0, kTwoPi);
    return f;
}

AnalyticFunction make_fornberg_shift() {
    AnalyticFunction f;
    f.evaluate = [](Complex z) { return 1e6 + 1.0 / (1.0 - z); };
    f.derivative = [](Complex z) { return 1.0 / ((1.0 - z) * (1.0 - z)); };
    f.radius_of_convergence = 1.0;
    f.darboux_beta = -1.0;
    f.darboux_singularity = Complex(1.0, 0.0);
    return f;
}

AnalyticFunction make_fornberg_log() {
    AnalyticFunction f;
    f.evaluate = [](Complex z) {
        Complex w = 1.0 + z;
        Complex w2 = w * w;
        Complex w4 = w2 * w2;
        return w4 * w4 * w2 * std::log(w);
    };
    f.radius_of_convergence = 1.0;
    // logarithmic branch point: not a Darboux power singularity
    return f;
}

ScaledComplex exp_oracle(int n) { return inverse_factorial(n); }

ScaledComplex cos_oracle(int n) {
    if (n % 2 == 1) return ScaledComplex::zero();
    ScaledComplex v = inverse_factorial(n);
    return (n / 2) % 2 == 0 ? v : -v;
}

ScaledComplex sin_oracle(int n) {
    if (n % 2 == 0) return ScaledComplex::zero();
    ScaledComplex v = inverse_factorial(n);
    return ((n - 1) / 2) % 2 == 0 ? v : -v;
}

ScaledComplex gaussian_oracle(int n) {
    if (n % 2 == 1) return ScaledComplex::zero();
    ScaledComplex v = ScaledComplex::from_log(Complex(-std::lgamma(n / 2 + 1.0), 0.0));
    return (n / 2) % 2 == 0 ? v : -v;
}

ScaledComplex fornberg_shift_oracle(int n) {
    return ScaledComplex::from(n == 0 ? 1e6 + 1.0 : 1.0);
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> entries;
    auto add = [&](std::string name, std::optional<AnalyticFunction> fn,
                   std::function<ScaledComplex(int)> oracle, std::string note) {
        CatalogEntry e;
        e.name = std::move(name);
        e.function = std::move(fn);
        e.coefficient_oracle = std::move(oracle);
        e.note = std::move(note);
        entries.push_back(std::move(e));
    };

    add("exp", make_exp(), exp_oracle, "e^z");
    add("cos", make_cos(), cos_oracle, "cos z");
    add("sin", make_sin(), sin_oracle, "sin z");
    add("bessel_i", make_bessel(0, 1.0),
        [](int n) {
            if (n % 2 == 1) return ScaledComplex::zero();
            int j = n / 2;
            return ScaledComplex::from_log(
                Complex(-j * std::log(4.0) - 2.0 * std::lgamma(j + 1.0), 0.0));
        },
        "I_0(z)");
    add("bessel_j", make_bessel(0, -1.0), nullptr, "J_0(z)");
    add("bessel_i_scaled", make_bessel_i_scaled_impl(0),
        [](int n) { return bessel_term(n, 0); }, "z^{-k/2} I_k(2 sqrt z), k = 0");
    add("erf", make_erf(), nullptr, "erf z (series evaluator, moderate |z| only)");
    add("gaussian", make_gaussian(), gaussian_oracle, "e^{-z^2}");
    add("airy_ai", make_airy(false), [](int n) { return airy_ai_coefficient(n); },
        "Ai(z), Maclaurin series, |z| <= 110");
    add("airy_bi", make_airy(true), [](int n) { return airy_bi_coefficient(n); },
        "Bi(z), Maclaurin series, |z| <= 110");
    {
        // growth metadata only; no evaluator (out of scope)
        AnalyticFunction meta;
        meta.order = 2.0;
        meta.type_ = kPi / 2.0;
        meta.saddle_ray = kPi / 4.0;
        add("fresnel_c", meta, nullptr, "Fresnel C: metadata only");
        add("fresnel_s", meta, nullptr, "Fresnel S: metadata only");
    }
    add("bell", make_bell(), [](int n) { return bell_coefficient(n); }, "e^{e^z-1}");
    add("recip_gamma", make_recip_gamma(), nullptr, "1/Gamma(z), log evaluator");
    add("qpochhammer", make_q_pochhammer(0.5),
        [](int n) { return q_pochhammer_coefficient(0.5, n); }, "(-z; q)_inf, q = 1/2");
    add("fbeta", make_f_beta(5.5), [](int n) { return f_beta_coefficient(5.5, n); },
        "(1-z)^beta, beta = 11/2");
    add("sec6", make_sec6(), [](int n) { return sec6_coefficient(n); }, "sec(z)^6");
    add("bernoulli", make_bernoulli_gen(), [](int n) { return bernoulli_gen_coefficient(n); },
        "z/(e^z-1)");
    add("fornberg_shift", make_fornberg_shift(), fornberg_shift_oracle, "10^6 + 1/(1-z)");
    add("fornberg_log", make_fornberg_log(), [](int n) { return fornberg_log_coefficient(n); },
        "(1+z)^10 log(1+z)");
    return entries;
}

} // namespace

AnalyticFunction make_f_beta(double beta) {
    AnalyticFunction f;
    f.evaluate = [beta](Complex z) { return std::exp(beta * std::log(1.0 - z)); };
    f.log_evaluate = [beta](Complex z) { return beta * std::log(1.0 - z); };
    f.log_derivative = [beta](Complex z) { return -beta / (1.0 - z); };
    f.radius_of_convergence = 1.0;
    f.nonnegative_coefficients = (beta < 0.0);
    f.darboux_beta = beta;
    f.darboux_singularity = Complex(1.0, 0.0);
    return f;
}

ScaledComplex f_beta_coefficient(double beta, int n) {
    // a_k = a_{k-1} (k - 1 - beta)/k, a_0 = 1
    ScaledComplex a = ScaledComplex::from(1.0);
    for (int k = 1; k <= n; ++k) a = a * ((k - 1.0 - beta) / k);
    return a;
}

AnalyticFunction make_q_pochhammer(double q) {
    if (!(q > 0.0 && q < 1.0))
        throw std::invalid_argument("make_q_pochhammer: q must be in (0,1)");
    AnalyticFunction f;
    auto terms_needed = [q](Complex z) {
        double az = std::max(std::abs(z), 1.0);
        return static_cast<int>(std::log(az * 1e18) / std::log(1.0 / q)) + 2;
    };
    f.evaluate = [q, terms_needed](Complex z) {
        Complex p(1.0, 0.0);
        double qk = 1.0;
        int kmax = terms_needed(z);
        for (int k = 0; k < kmax; ++k) {
            p *= 1.0 + z * qk;
            qk *= q;
        }
        return p;
    };
    f.log_evaluate = [q, terms_needed](Complex z) {
        Complex s(0.0, 0.0);
        double qk = 1.0;
        int kmax = terms_needed(z);
        for (int k = 0; k < kmax; ++k) {
            s += std::log(1.0 + z * qk);
            qk *= q;
        }
        return s;
    };
    f.log_derivative = [q, terms_needed](Complex z) {
        Complex s(0.0, 0.0);
        double qk = 1.0;
        int kmax = terms_needed(z);
        for (int k = 0; k < kmax; ++k) {
            s += qk / (1.0 + z * qk);
            qk *= q;
        }
        return s;
    };
    f.order = 0.0;
    f.nonnegative_coefficients = true;
    f.saddle_ray = 0.0;
    return f;
}

ScaledComplex q_pochhammer_coefficient(double q, int n) {
    // a_n = q^{n(n-1)/2} / ((q;q)_n)
    double log_num = 0.5 * static_cast<double>(n) * (n - 1.0) * std::log(q);
    double log_den = 0.0;
    double qk = 1.0;
    for (int k = 1; k <= n; ++k) {
        qk *= q;
        log_den += std::log1p(-qk);
    }
    return ScaledComplex::from_log(Complex(log_num - log_den, 0.0));
}

AnalyticFunction make_bessel_i(int k) { return make_bessel(k, 1.0); }
AnalyticFunction make_bessel_j(int k) { return make_bessel(k, -1.0); }
AnalyticFunction make_bessel_i_scaled(int k) { return make_bessel_i_scaled_impl(k); }

OrderType hypergeometric_order_type(int p, int q, double beta, int nu) {
    if (p > q) throw std::invalid_argument("hypergeometric_order_type: entire only for p <= q");
    if (nu < 1 || beta == 0.0)
        throw std::invalid_argument("hypergeometric_order_type: need nu >= 1 and beta != 0");
    double d = static_cast<double>(q + 1 - p);
    return {static_cast<double>(nu) / d, d * std::pow(std::abs(beta), 1.0 / d)};
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry& find_catalog(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return e;
    std::string names;
    for (const auto& e : catalog()) {
        if (!names.empty()) names += ", ";
        names += e.name;
    }
    throw std::out_of_range("unknown catalog function '" + name + "'; known: " + names);
}

} // namespace cauchy

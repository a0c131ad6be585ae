#include "cauchyderiv/radius.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cauchyderiv/budget.hpp"
#include "cauchyderiv/driver.hpp"
#include "cauchyderiv/quad.hpp"
#include "cauchyderiv/saddle.hpp"

namespace cauchy {

const char* to_string(RadiusStrategy s) {
    switch (s) {
        case RadiusStrategy::user_fixed: return "user_fixed";
        case RadiusStrategy::nonneg_convex: return "nonneg_convex";
        case RadiusStrategy::saddle: return "saddle";
        case RadiusStrategy::prg_asymptotic: return "prg_asymptotic";
        case RadiusStrategy::darboux: return "darboux";
        case RadiusStrategy::empirical_scan: return "empirical_scan";
    }
    return "unknown";
}

namespace {

constexpr double kGolden = 0.61803398874989484820458683436564;

double log_f_on_axis(const AnalyticFunction& f, double s) {
    Complex z(std::exp(s), 0.0);
    if (f.log_evaluate) return f.log_evaluate(z).real();
    Complex v = f.evaluate(z);
    double a = std::abs(v);
    if (a == 0.0) throw EvaluationError("radius_nonneg_convex: f vanishes on the positive axis");
    return std::log(a);
}

// golden-section minimization of g over [lo, hi] to width tol
double golden_minimize(const std::function<double(double)>& g, double lo, double hi, double tol) {
    double x1 = hi - kGolden * (hi - lo);
    double x2 = lo + kGolden * (hi - lo);
    double g1 = g(x1), g2 = g(x2);
    while (hi - lo > tol) {
        if (g1 <= g2) {
            hi = x2;
            x2 = x1;
            g2 = g1;
            x1 = hi - kGolden * (hi - lo);
            g1 = g(x1);
        } else {
            lo = x1;
            x1 = x2;
            g1 = g2;
            x2 = lo + kGolden * (hi - lo);
            g2 = g(x2);
        }
    }
    return 0.5 * (lo + hi);
}

void attach_prg_budget(RadiusPlan& plan, const AnalyticFunction& f, int n) {
    if (f.has_order_and_type())
        plan.predicted_nodes = nodes_prg_quasioptimal(1e-15, n, f.order).recommendation();
}

// kappa estimate at a saddle z, closed under conjugation for off-axis saddles
double predicted_loss_at_saddle(const AnalyticFunction& f, Complex z, int n) {
    SaddleInfo s = make_saddle_info(f, z, n);
    if (!(s.b.real() > 0.0)) return 0.0;
    std::vector<SaddleInfo> saddles{s};
    if (std::abs(z.imag()) > 1e-8 * std::abs(z)) saddles.push_back(make_saddle_info(f, std::conj(z), n));
    double kappa = saddle_kappa_estimate(saddles);
    return digit_loss_estimate(kappa);
}

// Oscillation count of the Cauchy integrand along the circle, estimated as
// max |z f'/f| over probe angles. Rings far smaller than this stabilize on an
// aliased value, so driver-mode condition scans must not start below it.
int frequency_floor(const AnalyticFunction& f, double r) {
    double worst = 0.0;
    for (double theta : {0.13, 0.92, 1.71, 2.50, 3.29, 4.08, 4.87, 5.66}) {
        try {
            Complex z = std::polar(r, theta);
            worst = std::max(worst, std::abs(z * log_derivative_value(f, z)));
        } catch (const std::exception&) {
            // probe landed on a zero or outside the evaluator's domain
        }
    }
    if (!(worst > 0.0)) return 0;
    return static_cast<int>(std::min(2.0 * worst, 1048576.0 / 2.0));
}

double kappa_at(const AnalyticFunction& f, const std::optional<ScaledComplex>& exact_an, int n,
                double r) {
    if (exact_an) {
        ScaledComplex mean = converged_mean_modulus(f, r, n);
        double lg = (mean.log_abs() - exact_an->log_abs() - n * std::log(r)) / std::log(10.0);
        return std::pow(10.0, lg);
    }
    DriverConfig cfg;
    cfg.m_initial_floor = std::max(cfg.m_initial_floor, frequency_floor(f, r));
    return taylor_coefficient(f, n, r, cfg).kappa_m;
}

} // namespace

RadiusPlan radius_nonneg_convex(const AnalyticFunction& f, int n) {
    if (n < 1) throw std::invalid_argument("radius_nonneg_convex: need n >= 1");
    if (!f.entire() || !f.nonnegative_coefficients)
        throw std::invalid_argument(
            "radius_nonneg_convex: needs an entire function with non-negative coefficients");

    auto g = [&](double s) { return log_f_on_axis(f, s) - n * s; };
    auto slope = [&](double s) {
        double d = 1e-4;
        return (g(s + d) - g(s - d)) / (2.0 * d);
    };

    // expand outward from s = 0 until the slope changes sign; evaluators with
    // a bounded accurate domain make the probe back off instead of failing
    double s_lo = 0.0, s_hi = 0.0;
    double dir = slope(0.0) < 0.0 ? 1.0 : -1.0;
    {
        double anchor = 0.0; // slope has the starting sign here
        double step = 1.0;
        for (;;) {
            double cand = anchor + dir * step;
            if (std::abs(cand) > 700.0)
                throw std::runtime_error("radius_nonneg_convex: no interior minimizer found");
            double sl;
            try {
                sl = slope(cand);
            } catch (const EvaluationError&) {
                step *= 0.5;
                if (step < 1e-8)
                    throw std::runtime_error(
                        "radius_nonneg_convex: evaluator domain exhausted before a minimizer");
                continue;
            }
            if (dir * sl < 0.0) {
                anchor = cand;
                step *= 2.0;
            } else {
                s_lo = std::min(anchor, cand);
                s_hi = std::max(anchor, cand);
                break;
            }
        }
    }

    double s = golden_minimize(g, s_lo, s_hi, 1e-12);

    // polish the first-order condition a(r) = n
    for (int it = 0; it < 40; ++it) {
        Complex z(std::exp(s), 0.0);
        auto [a, b] = log_derivative_coefficients(f, z);
        double residual = a.real() - n;
        if (std::abs(residual) <= 1e-12 * n) break;
        if (!(b.real() > 0.0)) break;
        double ds = residual / b.real();
        ds = std::clamp(ds, -1.0, 1.0);
        s -= ds;
        if (std::abs(ds) < 1e-15) break;
    }

    RadiusPlan plan;
    plan.radius = std::exp(s);
    plan.strategy = RadiusStrategy::nonneg_convex;
    plan.saddle_point = Complex(plan.radius, 0.0);
    attach_prg_budget(plan, f, n);
    plan.predicted_digit_loss = predicted_loss_at_saddle(f, Complex(plan.radius, 0.0), n);
    return plan;
}

RadiusPlan radius_saddle(const AnalyticFunction& f, int n, Complex z0) {
    if (n < 1) throw std::invalid_argument("radius_saddle: need n >= 1");
    if (!f.entire()) throw std::invalid_argument("radius_saddle: f must be entire");
    Complex z = z0;
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
        auto [a, b] = log_derivative_coefficients(f, z);
        Complex residual = a - static_cast<double>(n);
        if (std::abs(residual) <= 1e-10 * n) {
            converged = true;
            break;
        }
        if (b == Complex(0.0, 0.0))
            throw std::runtime_error("radius_saddle: vanishing second coefficient b(z)");
        z -= residual * z / b;
    }
    if (!converged)
        throw std::runtime_error("radius_saddle: Newton iteration did not converge (last z = (" +
                                 std::to_string(z.real()) + ", " + std::to_string(z.imag()) + "))");

    // the saddle must dominate the ring: compare against sampled angles
    double r = std::abs(z);
    double fz = f.eval_scaled(z).log_abs();
    double ring_max = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < 64; ++j) {
        Complex w = std::polar(r, 2.0 * 3.14159265358979323846 * j / 64.0);
        ring_max = std::max(ring_max, f.eval_scaled(w).log_abs());
    }
    if (fz < ring_max - 1e-6 * std::max(1.0, std::abs(ring_max)))
        throw std::runtime_error("radius_saddle: converged saddle is not the ring maximum");

    RadiusPlan plan;
    plan.radius = r;
    plan.strategy = RadiusStrategy::saddle;
    plan.saddle_point = z;
    attach_prg_budget(plan, f, n);
    plan.predicted_digit_loss = predicted_loss_at_saddle(f, z, n);
    return plan;
}

RadiusPlan radius_prg_asymptotic(int n, double rho, double tau) {
    if (n < 1 || !(rho > 0.0) || !(tau > 0.0))
        throw std::invalid_argument("radius_prg_asymptotic: need n >= 1, rho > 0, tau > 0");
    RadiusPlan plan;
    plan.radius = std::pow(n / (tau * rho), 1.0 / rho);
    plan.strategy = RadiusStrategy::prg_asymptotic;
    plan.predicted_nodes = nodes_prg_quasioptimal(1e-15, n, rho).recommendation();
    return plan;
}

RadiusPlan radius_darboux(int n, double beta, double R) {
    if (n < 2) throw std::invalid_argument("radius_darboux: need n >= 2");
    if (beta >= 0.0 && beta == std::floor(beta))
        throw std::invalid_argument("radius_darboux: beta is a nonnegative integer, not a branch point");
    if (!(R > 0.0) || !std::isfinite(R))
        throw std::invalid_argument("radius_darboux: need finite R > 0");

    RadiusPlan plan;
    plan.strategy = RadiusStrategy::darboux;
    if (beta > -1.0) {
        // Hardy-space case: kappa grows like n^{beta+1}, no interior optimum
        plan.radius = R;
        plan.predicted_digit_loss = (beta + 1.0) * std::log10(static_cast<double>(n));
        plan.predicted_nodes = nodes_darboux(1e-15, n, beta).recommendation();
        return plan;
    }
    if (beta == -1.0) {
        plan.radius = R * (1.0 - 1.0 / (n * std::log(static_cast<double>(n))));
        plan.predicted_digit_loss =
            digit_loss_estimate(std::log(static_cast<double>(n)) / 3.14159265358979323846);
        plan.predicted_nodes = nodes_darboux(1e-15, n, beta).recommendation();
        return plan;
    }
    plan.radius = R * (1.0 + (beta + 1.0) / n);
    // c_beta of the Darboux analysis: the asymptotic optimal kappa
    double c_beta = std::exp(-(beta + 1.0) * std::log(2.0 * std::exp(1.0)) +
                             beta * std::log(-beta - 1.0) - std::log(3.14159265358979323846) +
                             2.0 * std::lgamma((1.0 - beta) / 2.0));
    plan.predicted_digit_loss = digit_loss_estimate(c_beta);
    plan.predicted_nodes = nodes_darboux(1e-15, n, beta).recommendation();
    return plan;
}

ConditionCurve scan_condition(const AnalyticFunction& f, std::optional<ScaledComplex> exact_an,
                              int n, double r_lo, double r_hi, int points) {
    if (!(r_lo > 0.0) || !(r_hi > r_lo))
        throw std::invalid_argument("scan_condition: need 0 < r_lo < r_hi");
    if (!f.entire() && r_hi >= f.radius_of_convergence)
        throw std::invalid_argument("scan_condition: grid reaches outside the disk of analyticity");
    if (points < 3) throw std::invalid_argument("scan_condition: need at least 3 points");

    ConditionCurve curve;
    curve.n = n;
    double llo = std::log(r_lo), lhi = std::log(r_hi);
    for (int i = 0; i < points; ++i) {
        double r = std::exp(llo + (lhi - llo) * i / (points - 1));
        curve.entries.push_back({r, kappa_at(f, exact_an, n, r)});
    }
    return curve;
}

RadiusPlan optimal_radius_empirical(const AnalyticFunction& f,
                                    std::optional<ScaledComplex> exact_an, int n, double r_lo,
                                    double r_hi) {
    if (!(r_lo > 0.0) || !(r_hi > r_lo))
        throw std::invalid_argument("optimal_radius_empirical: need 0 < r_lo < r_hi");

    // radii the evaluator cannot reach (overflow without a log path) simply
    // cannot win the minimization
    auto log_kappa = [&](double s) {
        try {
            return std::log(kappa_at(f, exact_an, n, std::exp(s)));
        } catch (const EvaluationError&) {
            return std::numeric_limits<double>::infinity();
        }
    };

    // coarse grid, then golden section between the bracketing neighbors
    const int kCoarse = 25;
    double llo = std::log(r_lo), lhi = std::log(r_hi);
    std::vector<double> ls(kCoarse), lk(kCoarse);
    int best = 0;
    for (int i = 0; i < kCoarse; ++i) {
        ls[i] = llo + (lhi - llo) * i / (kCoarse - 1);
        lk[i] = log_kappa(ls[i]);
        if (lk[i] < lk[best]) best = i;
    }
    double blo = ls[std::max(0, best - 1)];
    double bhi = ls[std::min(kCoarse - 1, best + 1)];
    double s = golden_minimize(log_kappa, blo, bhi, 1e-3);
    double kappa_min = std::exp(log_kappa(s));

    RadiusPlan plan;
    plan.strategy = RadiusStrategy::empirical_scan;

    if (!(kappa_min <= std::exp(lk[best]) * 1.001 + 1e-12)) {
        // golden section lost against the coarse grid: kappa_m noise
        plan.flat_minimum_warning = true;
        s = ls[best];
        kappa_min = std::exp(lk[best]);
    }

    // flat minima: return the smallest radius within 1.001x of the minimum
    double s_left = s;
    for (int it = 0; it < 2000 && s_left - 1e-3 >= llo; ++it) {
        double cand = s_left - 1e-3;
        if (std::exp(log_kappa(cand)) > kappa_min * 1.001) break;
        s_left = cand;
    }

    plan.radius = std::exp(s_left);
    plan.predicted_digit_loss = digit_loss_estimate(kappa_min);
    return plan;
}

RadiusPlan auto_radius(const AnalyticFunction& f, int n) {
    if (n < 1) throw std::invalid_argument("auto_radius: need n >= 1");
    if (f.entire() && f.nonnegative_coefficients && f.evaluate) return radius_nonneg_convex(f, n);
    if (f.entire() && f.has_order_and_type() && f.evaluate) {
        RadiusPlan prg = radius_prg_asymptotic(n, f.order, f.type_);
        double ray = f.saddle_ray.value_or(0.0);
        try {
            return radius_saddle(f, n, std::polar(prg.radius, ray));
        } catch (const std::exception&) {
            return prg; // asymptotic radius is still sound
        }
    }
    if (!f.entire() && f.darboux_beta)
        return radius_darboux(n, *f.darboux_beta, f.radius_of_convergence);
    if (f.evaluate) {
        if (f.entire())
            return optimal_radius_empirical(f, std::nullopt, n, 1e-2 * std::max(n, 1),
                                            1e2 * std::max(n, 1));
        double R = f.radius_of_convergence;
        return optimal_radius_empirical(f, std::nullopt, n, R * 1e-3, R * (1.0 - 1e-6));
    }
    throw std::invalid_argument(
        "auto_radius: no applicable strategy (function has no evaluator and no usable metadata)");
}

} // namespace cauchy

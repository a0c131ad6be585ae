#include <doctest.h>

#include <cmath>

#include "cauchyderiv/quad.hpp"
#include "cauchyderiv/radius.hpp"
#include "cauchyderiv/saddle.hpp"
#include "cauchyderiv/sfun.hpp"

using namespace cauchy;

namespace {
constexpr double kPi = 3.14159265358979323846;
} // namespace

TEST_CASE("radius_nonneg_convex") {
    SUBCASE("exp: r = n exactly") {
        for (int n : {3, 7, 50}) {
            RadiusPlan p = radius_nonneg_convex(*find_catalog("exp").function, n);
            CHECK(p.strategy == RadiusStrategy::nonneg_convex);
            CHECK(p.radius == doctest::Approx(static_cast<double>(n)).epsilon(1e-10));
        }
    }
    SUBCASE("bell: r = W(n)") {
        RadiusPlan p = radius_nonneg_convex(*find_catalog("bell").function, 100);
        CHECK(p.radius == doctest::Approx(lambert_w0(100.0)).epsilon(1e-8));
    }
    SUBCASE("q-pochhammer: r within 5% of q^{1/2-n}") {
        RadiusPlan p = radius_nonneg_convex(*find_catalog("qpochhammer").function, 20);
        CHECK(p.radius == doctest::Approx(std::pow(2.0, 19.5)).epsilon(0.05));
    }
    SUBCASE("rejects unsuitable functions") {
        CHECK_THROWS_AS(radius_nonneg_convex(*find_catalog("bernoulli").function, 5),
                        std::invalid_argument);
    }
}

TEST_CASE("first-order condition at nonneg-convex radii") {
    // |r D log f(r) - n| <= 1e-6 n, derivative by central differences
    for (const char* name : {"exp", "bell", "qpochhammer", "airy_bi"}) {
        const AnalyticFunction& f = *find_catalog(name).function;
        for (int n : {5, 20, 60}) {
            CAPTURE(name);
            CAPTURE(n);
            RadiusPlan p = radius_nonneg_convex(f, n);
            double h = 1e-5 * p.radius;
            auto logf = [&](double r) {
                if (f.log_evaluate) return f.log_evaluate(Complex(r, 0.0)).real();
                return std::log(std::abs(f.evaluate(Complex(r, 0.0))));
            };
            double slope = p.radius * (logf(p.radius + h) - logf(p.radius - h)) / (2.0 * h);
            CHECK(std::abs(slope - n) <= 1e-6 * n);
        }
    }
}

TEST_CASE("monotonicity of the quasi-optimal radius over n") {
    for (const char* name : {"exp", "bell"}) {
        const AnalyticFunction& f = *find_catalog(name).function;
        double prev = 0.0;
        for (int n = 2; n <= 50; ++n) {
            double r = radius_nonneg_convex(f, n).radius;
            CHECK(r >= prev * (1.0 - 1e-12));
            prev = r;
        }
    }
}

TEST_CASE("radius_saddle") {
    SUBCASE("exp is exact: z = n") {
        RadiusPlan p = radius_saddle(*find_catalog("exp").function, 12, Complex(9.0, 0.0));
        // G is linear so Newton lands on n up to the finite-difference noise
        // in G'; the residual stop at 1e-10 n bounds the radius error
        CHECK(p.radius == doctest::Approx(12.0).epsilon(1e-9));
        CHECK(p.saddle_point->imag() == doctest::Approx(0.0));
    }
    SUBCASE("airy_ai at n = 10 on the 2pi/3 ray") {
        const AnalyticFunction& ai = *find_catalog("airy_ai").function;
        RadiusPlan p = radius_saddle(ai, 10, std::polar(std::pow(10.0, 2.0 / 3.0), 2.0 * kPi / 3.0));
        CHECK(p.radius == doctest::Approx(4.72421).epsilon(5e-6 / 4.72421));
        // saddle residual invariant
        auto [a, b] = log_derivative_coefficients(ai, *p.saddle_point);
        CHECK(std::abs(a - 10.0) <= 1e-10 * 10.0);
        CHECK(b.real() > 0.0);
    }
    SUBCASE("airy_bi at n = 100 via its real growth direction") {
        const AnalyticFunction& bi = *find_catalog("airy_bi").function;
        RadiusPlan p = radius_saddle(bi, 100, Complex(std::pow(100.0, 2.0 / 3.0), 0.0));
        CHECK(p.radius == doctest::Approx(21.58047).epsilon(5e-6 / 21.58047));
    }
}

TEST_CASE("radius_prg_asymptotic") {
    CHECK(radius_prg_asymptotic(10, 1.0, 1.0).radius == doctest::Approx(10.0).epsilon(1e-14));
    CHECK(radius_prg_asymptotic(100, 1.5, 2.0 / 3.0).radius ==
          doctest::Approx(std::pow(100.0, 2.0 / 3.0)).epsilon(1e-14));
    CHECK(radius_prg_asymptotic(100, 1.5, 2.0 / 3.0).radius ==
          doctest::Approx(21.5443).epsilon(1e-5));
    CHECK(radius_prg_asymptotic(8, 2.0, 1.0).radius == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("radius_darboux") {
    SUBCASE("beta < -1 pulls inside the disk") {
        RadiusPlan p = radius_darboux(100, -6.0, kPi / 2.0);
        CHECK(p.radius == doctest::Approx(kPi / 2.0 * 0.95).epsilon(1e-14));
        CHECK(p.radius == doctest::Approx(1.49226).epsilon(1e-5));
    }
    SUBCASE("beta = -1 backs off by 1/(n log n)") {
        RadiusPlan p = radius_darboux(100, -1.0, 1.0);
        CHECK(p.radius == doctest::Approx(1.0 - 1.0 / (100.0 * std::log(100.0))).epsilon(1e-14));
        CHECK(p.radius == doctest::Approx(0.997829).epsilon(1e-5));
        RadiusPlan p2 = radius_darboux(100, -1.0, 2.0 * kPi);
        CHECK(p2.radius ==
              doctest::Approx(2.0 * kPi * (1.0 - 1.0 / (100.0 * std::log(100.0)))).epsilon(1e-14));
    }
    SUBCASE("beta > -1 sits on the boundary with unbounded loss") {
        RadiusPlan p = radius_darboux(100, 5.5, 1.0);
        CHECK(p.radius == 1.0);
        CHECK(*p.predicted_digit_loss > 12.0);
    }
    SUBCASE("nonnegative integer beta is not a branch point") {
        CHECK_THROWS_AS(radius_darboux(10, 3.0, 1.0), std::invalid_argument);
    }
}

TEST_CASE("scan_condition") {
    SUBCASE("exp n = 10 over [1, 100] dips near 10.5") {
        const auto& e = find_catalog("exp");
        ConditionCurve c = scan_condition(*e.function, e.coefficient_oracle(10), 10, 1.0, 100.0, 50);
        REQUIRE(c.entries.size() == 50);
        double best_r = 0.0, best_k = 1e300;
        double prev_r = 0.0;
        for (const auto& en : c.entries) {
            CHECK(en.r > prev_r);
            prev_r = en.r;
            if (en.kappa < best_k) {
                best_k = en.kappa;
                best_r = en.r;
            }
        }
        CHECK(std::abs(best_r - 10.5) <= 0.15 * 10.5);
    }
    SUBCASE("exp n = 100 at r = 1 reproduces the huge reference kappa") {
        const auto& e = find_catalog("exp");
        ConditionCurve c =
            scan_condition(*e.function, e.coefficient_oracle(100), 100, 0.9, 1.1, 3);
        // middle grid point is exactly r = sqrt(0.9*1.1) ~ 0.9949; rebuild at 1.0
        double kappa = reference_condition_number(*e.function, e.coefficient_oracle(100), 100,
                                                  1.0, 256);
        CHECK(kappa == doctest::Approx(1.182e158).epsilon(1e-3));
        CHECK(c.entries.front().kappa > 1e150);
    }
    SUBCASE("monomial: kappa = 1 at every radius") {
        AnalyticFunction mono;
        mono.evaluate = [](Complex z) { return z * z; };
        ConditionCurve c = scan_condition(mono, ScaledComplex::from(1.0), 2, 0.3, 3.0, 7);
        for (const auto& en : c.entries) CHECK(en.kappa == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("log kappa is convex in log r on oracle curves") {
    for (const char* name : {"exp", "gaussian", "bell"}) {
        const auto& entry = find_catalog(name);
        CAPTURE(name);
        int n = 12;
        // center the grid on the quasi-optimal radius
        double r0 = entry.function->nonnegative_coefficients
                        ? radius_nonneg_convex(*entry.function, n).radius
                        : radius_prg_asymptotic(n, entry.function->order, entry.function->type_)
                              .radius;
        ConditionCurve c = scan_condition(*entry.function, entry.coefficient_oracle(n), n,
                                          0.2 * r0, 3.0 * r0, 25);
        for (size_t i = 1; i + 1 < c.entries.size(); ++i) {
            double l0 = std::log(c.entries[i - 1].kappa);
            double l1 = std::log(c.entries[i].kappa);
            double l2 = std::log(c.entries[i + 1].kappa);
            double scale = std::max({std::abs(l0), std::abs(l1), std::abs(l2), 1.0});
            CHECK(l0 - 2.0 * l1 + l2 >= -1e-6 * scale);
        }
    }
}

TEST_CASE("coercivity of the reference kappa for exp") {
    const auto& e = find_catalog("exp");
    CHECK(reference_condition_number(*e.function, e.coefficient_oracle(10), 10, 0.01, 64) > 1e10);
    CHECK(reference_condition_number(*e.function, e.coefficient_oracle(10), 10, 1e4, 64) > 1e10);
}

TEST_CASE("optimal_radius_empirical") {
    SUBCASE("exp n = 10: within 2% of 10.5 and kappa <= 1.3") {
        const auto& e = find_catalog("exp");
        RadiusPlan p = optimal_radius_empirical(*e.function, e.coefficient_oracle(10), 10, 1.0,
                                                100.0);
        CHECK(p.strategy == RadiusStrategy::empirical_scan);
        CHECK(std::abs(p.radius - 10.5) <= 0.02 * 10.5);
        double kappa =
            reference_condition_number(*e.function, e.coefficient_oracle(10), 10, p.radius, 256);
        CHECK(kappa < 1.3);
        CHECK(kappa > 1.0);
    }
    SUBCASE("f_{-1} on (0.9, 0.9999): kappa at the optimum is below 4.8") {
        AnalyticFunction f = make_f_beta(-1.0);
        RadiusPlan p =
            optimal_radius_empirical(f, f_beta_coefficient(-1.0, 100), 100, 0.9, 0.9999);
        ScaledComplex mean = converged_mean_modulus(f, p.radius, 100);
        double kappa = std::exp(mean.log_abs() - 100.0 * std::log(p.radius));
        CHECK(kappa <= 4.8);
        CHECK(kappa > 1.0);
    }
    SUBCASE("monomial: any radius, kappa = 1") {
        AnalyticFunction mono;
        mono.evaluate = [](Complex z) { return z * z; };
        RadiusPlan p = optimal_radius_empirical(mono, ScaledComplex::from(1.0), 2, 0.5, 2.0);
        ScaledComplex mean = converged_mean_modulus(mono, p.radius, 2);
        double kappa = std::exp(mean.log_abs() - 2.0 * std::log(p.radius));
        CHECK(kappa == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("auto_radius dispatch") {
    SUBCASE("exp goes through the convex route") {
        RadiusPlan p = auto_radius(*find_catalog("exp").function, 50);
        CHECK(p.strategy == RadiusStrategy::nonneg_convex);
        CHECK(p.radius == doctest::Approx(50.0).epsilon(1e-9));
    }
    SUBCASE("bernoulli goes through Darboux") {
        RadiusPlan p = auto_radius(*find_catalog("bernoulli").function, 100);
        CHECK(p.strategy == RadiusStrategy::darboux);
        CHECK(p.radius < 2.0 * kPi);
    }
    SUBCASE("airy_ai goes through the saddle") {
        RadiusPlan p = auto_radius(*find_catalog("airy_ai").function, 10);
        CHECK(p.strategy == RadiusStrategy::saddle);
        CHECK(p.radius == doctest::Approx(4.72421).epsilon(1e-5));
    }
    SUBCASE("cos refines the asymptotic radius through its off-axis saddle") {
        RadiusPlan p = auto_radius(*find_catalog("cos").function, 10);
        CHECK(p.strategy == RadiusStrategy::saddle);
        CHECK(p.radius == doctest::Approx(10.0).epsilon(1e-3));
        CHECK(std::abs(p.saddle_point->real()) < 1e-6 * p.radius); // sits on the imaginary axis
    }
    SUBCASE("finite-R function without branch metadata scans empirically") {
        RadiusPlan p = auto_radius(*find_catalog("fornberg_log").function, 12);
        CHECK(p.strategy == RadiusStrategy::empirical_scan);
        CHECK(p.radius < 1.0);
        CHECK(p.radius > 0.0);
    }
    SUBCASE("entire expression function without metadata scans empirically") {
        AnalyticFunction f;
        f.evaluate = [](Complex z) { return std::exp(z); };
        RadiusPlan p = auto_radius(f, 10);
        CHECK(p.strategy == RadiusStrategy::empirical_scan);
        CHECK(std::abs(p.radius - 10.5) <= 0.1 * 10.5);
    }
    SUBCASE("no evaluator and no metadata is an error") {
        AnalyticFunction bare;
        CHECK_THROWS_AS(auto_radius(bare, 5), std::invalid_argument);
    }
}

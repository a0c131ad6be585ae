#include <doctest.h>

#include <cmath>
#include <vector>

#include "cauchyderiv/driver.hpp"
#include "cauchyderiv/sfun.hpp"

using namespace cauchy;

namespace {

AnalyticFunction plain(std::function<Complex(Complex)> eval) {
    AnalyticFunction f;
    f.evaluate = std::move(eval);
    return f;
}

} // namespace

TEST_CASE("digit_loss_estimate") {
    CHECK(digit_loss_estimate(1.0) == 0.0);
    CHECK(digit_loss_estimate(10.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(digit_loss_estimate(1.502e13) == doctest::Approx(13.18).epsilon(1e-3));
    CHECK(digit_loss_estimate(0.3) == 0.0); // clamp below 1
}

TEST_CASE("exp coefficient at n = 10, r = 10") {
    const auto& e = find_catalog("exp");
    QuadratureOutcome out = taylor_coefficient(*e.function, 10, 10.0);
    CHECK(out.status == DriverStatus::converged);
    CHECK(out.m_used <= 64);
    CHECK(relative_difference(out.value, e.coefficient_oracle(10)) <= 1e-13);
    CHECK(out.rel_error_estimate <= out.kappa_m * 1e-15);
}

TEST_CASE("polynomial coefficients are exact from the first ring") {
    QuadratureOutcome out = taylor_coefficient(plain([](Complex z) { return 1.0 + z; }), 1, 0.5);
    CHECK(out.status == DriverStatus::converged);
    CHECK(std::abs(out.value.to_complex() - Complex(1.0, 0.0)) < 1e-14);
    CHECK(out.m_used <= 64); // stops once the error extrapolation sees two quiet doublings
}

TEST_CASE("Bernoulli generating function at n = 100") {
    const auto& e = find_catalog("bernoulli");
    DriverConfig cfg;
    cfg.tol = 1e-12;
    QuadratureOutcome out = taylor_coefficient(*e.function, 100, 6.22, cfg);
    CHECK(out.status == DriverStatus::converged);
    CHECK(out.m_used >= 2734);
    CHECK(out.m_used <= 8192);
    CHECK(relative_difference(out.value, e.coefficient_oracle(100)) <= 1e-11);
}

TEST_CASE("derivative scaling through log-gamma") {
    SUBCASE("all derivatives of exp at 0 are 1") {
        const auto& e = find_catalog("exp");
        QuadratureOutcome out = derivative(*e.function, 100, RadiusPlan::fixed(100.0));
        CHECK(out.status == DriverStatus::converged);
        CHECK(std::abs(out.value.to_complex() - Complex(1.0, 0.0)) <= 5e-13);
    }
    SUBCASE("(z^3)''' = 6") {
        QuadratureOutcome out =
            derivative(plain([](Complex z) { return z * z * z; }), 3, RadiusPlan::fixed(1.0));
        CHECK(out.status == DriverStatus::converged);
        CHECK(std::abs(out.value.to_complex() - Complex(6.0, 0.0)) < 1e-13);
    }
    SUBCASE("sec^6 derivative at the Darboux radius matches the exact oracle") {
        const auto& e = find_catalog("sec6");
        double r = 3.14159265358979323846 / 2.0 * (1.0 - 5.0 / 100.0);
        QuadratureOutcome out = derivative(*e.function, 100, RadiusPlan::fixed(r));
        CHECK(out.status == DriverStatus::converged);
        // the doubling grid from m = 101 lands on 1616 for tol = 1e-15; the
        // reference m = 880 computation corresponds to a looser tolerance
        CHECK(out.m_used <= 2048);
        ScaledComplex want = e.coefficient_oracle(100).scaled_by_exp(std::lgamma(101.0L));
        CHECK(relative_difference(out.value, want) <= 1e-14);

        DriverConfig loose;
        loose.tol = 1e-12;
        QuadratureOutcome out2 = derivative(*e.function, 100, RadiusPlan::fixed(r), loose);
        CHECK(out2.m_used <= 1024);
        CHECK(relative_difference(out2.value, want) <= 1e-12);
    }
}

TEST_CASE("radius preconditions") {
    const auto& bern = find_catalog("bernoulli");
    CHECK_THROWS_WITH_AS(taylor_coefficient(*bern.function, 3, 6.3),
                         doctest::Contains("radius outside disk"), std::domain_error);
    CHECK_THROWS_AS(taylor_coefficient(*bern.function, 3, -1.0), std::invalid_argument);
}

TEST_CASE("sample reuse is bitwise across doubling") {
    const auto& e = find_catalog("bernoulli");
    SampleRing ring = sample_ring(*e.function, 3.0, 16);
    SampleRing twice = doubled_ring(*e.function, ring);
    REQUIRE(twice.count == 32);
    for (int j = 0; j < 16; ++j) {
        CHECK(twice.samples[2 * j].mantissa() == ring.samples[j].mantissa());
        CHECK(twice.samples[2 * j].exponent() == ring.samples[j].exponent());
    }
}

TEST_CASE("m never exceeds the cap and the stop inequality holds as stated") {
    DriverConfig cfg;
    cfg.m_max = 256;
    cfg.tol = 1e-30; // unattainable: must run into the cap
    const auto& e = find_catalog("bernoulli");
    QuadratureOutcome out = taylor_coefficient(*e.function, 10, 6.0, cfg);
    CHECK(out.status == DriverStatus::max_nodes_reached);
    CHECK(out.m_used <= 256);

    cfg = DriverConfig{};
    QuadratureOutcome ok = taylor_coefficient(*e.function, 10, 3.0, cfg);
    CHECK(ok.status == DriverStatus::converged);
    CHECK(ok.rel_error_estimate <= ok.kappa_m * cfg.tol);
}

TEST_CASE("degenerate denominator stops the driver") {
    // the zero function cancels exactly: kappa_m = +inf is the stop signal
    QuadratureOutcome out =
        taylor_coefficient(plain([](Complex) { return Complex(0.0, 0.0); }), 2, 1.0);
    CHECK(out.status == DriverStatus::degenerate_denominator);
    CHECK(out.value.is_zero());
}

TEST_CASE("near-total cancelation at n = 0 stays finite") {
    // a_0 of z - 1/z vanishes; the relative-error guard must not divide by 0
    auto f = plain([](Complex z) { return z - 1.0 / z; });
    QuadratureOutcome out = taylor_coefficient(f, 0, 1.0);
    CHECK((out.status == DriverStatus::degenerate_denominator ||
           out.status == DriverStatus::converged));
    CHECK(out.value.abs() < 1e-14);
}

TEST_CASE("round-off model: measured digit loss tracks log10 kappa") {
    // grid over (n, r) with 1e2 <= kappa <= 1e12: the empirical loss
    // log10(relerr/u) must lie within +-1.5 of log10 kappa for >= 90%
    const double u = 1.1102230246251565e-16; // unit roundoff
    const auto& e = find_catalog("exp");
    int total = 0, hits = 0;
    auto visit = [&](double kappa, double relerr) {
        if (kappa < 1e2 || kappa > 1e12) return;
        ++total;
        if (relerr == 0.0) return; // exact hit counts as a miss of the model
        double measured = std::log10(relerr / u);
        if (std::abs(measured - std::log10(kappa)) <= 1.5) ++hits;
    };
    for (int n : {10, 30}) {
        for (int i = 0; i < 14; ++i) {
            double r_left = 0.25 * std::pow(2.2 / 0.25, i / 13.0);
            double r_right = 4.0 * n * std::pow(15.0 / 4.0, i / 13.0);
            for (double r : {r_left, r_right}) {
                double kappa =
                    reference_condition_number(*e.function, e.coefficient_oracle(n), n, r, 2048);
                QuadratureOutcome out = taylor_coefficient(*e.function, n, r);
                double relerr = relative_difference(out.value, e.coefficient_oracle(n));
                visit(kappa, relerr);
            }
        }
    }
    // a finite-R family as well: f_{-1} = 1/(1-z), oracle a_n = 1
    AnalyticFunction fm1 = make_f_beta(-1.0);
    for (int i = 0; i < 12; ++i) {
        double r = 0.93 + (0.9985 - 0.93) * i / 11.0;
        double kappa = reference_condition_number(fm1, Complex(1.0, 0.0), 100, r, 1 << 15);
        QuadratureOutcome out = taylor_coefficient(fm1, 100, r);
        double relerr = relative_difference(out.value, f_beta_coefficient(-1.0, 100));
        visit(kappa, relerr);
    }
    CAPTURE(total);
    CAPTURE(hits);
    CHECK(total >= 20);
    CHECK(hits >= (total * 9 + 9) / 10);
}

TEST_CASE("measure_condition_number stabilizes kappa") {
    const auto& e = find_catalog("exp");
    KappaMeasurement km = measure_condition_number(*e.function, 100, 100.0);
    CHECK(km.kappa == doctest::Approx(1.002).epsilon(1e-3));
}

#include <doctest.h>

#include <cmath>
#include <random>

#include "cauchyderiv/quad.hpp"
#include "cauchyderiv/sfun.hpp"

using namespace cauchy;

namespace {

AnalyticFunction plain(std::function<Complex(Complex)> eval) {
    AnalyticFunction f;
    f.evaluate = std::move(eval);
    return f;
}

AnalyticFunction monomial(int d) {
    return plain([d](Complex z) { return std::pow(z, d); });
}

// independent Bessel-series oracle for M_1 of exp: I_0(r) = sum (r/2)^{2k}/(k!)^2
double bessel_i0(double r) {
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 200; ++k) {
        term *= (r / 2.0) * (r / 2.0) / (static_cast<double>(k) * k);
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    return sum;
}

} // namespace

TEST_CASE("sample_ring places f at the m-th roots") {
    SUBCASE("constant function") {
        SampleRing ring = sample_ring(plain([](Complex) { return Complex(1.0, 0.0); }), 1.0, 4);
        for (const auto& s : ring.samples)
            CHECK(std::abs(s.to_complex() - Complex(1.0, 0.0)) < 1e-15);
    }
    SUBCASE("identity map on the circle") {
        SampleRing ring = sample_ring(plain([](Complex z) { return z; }), 2.0, 4);
        Complex want[4] = {{2, 0}, {0, 2}, {-2, 0}, {0, -2}};
        for (int j = 0; j < 4; ++j)
            CHECK(std::abs(ring.samples[j].to_complex() - want[j]) < 1e-14);
    }
    SUBCASE("exp at +-1") {
        SampleRing ring = sample_ring(*find_catalog("exp").function, 1.0, 2);
        CHECK(ring.samples[0].to_complex().real() == doctest::Approx(std::exp(1.0)).epsilon(1e-14));
        CHECK(ring.samples[1].to_complex().real() == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    }
    SUBCASE("non-finite evaluation names the node") {
        auto f = plain([](Complex z) {
            return std::abs(z - Complex(0.0, 1.0)) < 1e-9 ? Complex(1.0 / 0.0, 0.0)
                                                          : Complex(1.0, 0.0);
        });
        CHECK_THROWS_WITH_AS(sample_ring(f, 1.0, 4), doctest::Contains("node 1"), EvaluationError);
    }
}

TEST_CASE("trapezoidal_coefficient") {
    SUBCASE("polynomial exactness") {
        SampleRing ring = sample_ring(monomial(2), 0.7, 8);
        ScaledComplex a2 = trapezoidal_coefficient(ring, 2);
        CHECK(std::abs(a2.to_complex() - 1.0) < 1e-14);
        for (int n : {0, 1, 3, 4, 5, 6, 7})
            CHECK(trapezoidal_coefficient(ring, n).abs() < 1e-14);
    }
    SUBCASE("exp coefficient at n = 10") {
        SampleRing ring = sample_ring(*find_catalog("exp").function, 10.0, 32);
        ScaledComplex a10 = trapezoidal_coefficient(ring, 10);
        ScaledComplex exact = find_catalog("exp").coefficient_oracle(10);
        CHECK(relative_difference(a10, exact) < 1e-12);
    }
    SUBCASE("aliasing identity at fixed ring") {
        SampleRing ring = sample_ring(*find_catalog("exp").function, 1.0, 6);
        ScaledComplex lhs = trapezoidal_coefficient(ring, 1);
        ScaledComplex rhs = trapezoidal_coefficient(ring, 7);
        // r^1 a_1 = r^7 a_7 with r = 1
        CHECK(relative_difference(lhs, rhs) < 1e-12);
    }
}

TEST_CASE("aliasing property on random rings") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        double c0 = u(rng), c1 = u(rng), c2 = u(rng), c3 = u(rng);
        auto f = plain([=](Complex z) {
            return c0 + c1 * z + c2 * z * z + c3 * std::exp(z);
        });
        double r = 0.3 + 1.5 * (u(rng) + 1.0);
        int m = 4 + (trial % 13);
        int n = trial % m;
        SampleRing ring = sample_ring(f, r, m);
        ScaledComplex a_n = trapezoidal_coefficient(ring, n);
        ScaledComplex a_alias = trapezoidal_coefficient(ring, n + m);
        double scale = static_cast<double>(n) * std::log(r);
        double scale_alias = static_cast<double>(n + m) * std::log(r);
        ScaledComplex lhs = a_n.scaled_by_exp(scale);
        ScaledComplex rhs = a_alias.scaled_by_exp(scale_alias);
        if (lhs.is_zero() && rhs.is_zero()) continue;
        CHECK(relative_difference(lhs, rhs) < 1e-12);
    }
}

TEST_CASE("discrete_condition_number") {
    SUBCASE("no cancelation at n = 0 for positive samples") {
        SampleRing ring = sample_ring(plain([](Complex) { return Complex(2.5, 0.0); }), 1.0, 8);
        CHECK(discrete_condition_number(ring, 0) == 1.0);
    }
    SUBCASE("exp at r = 100, n = 100") {
        SampleRing ring = sample_ring(*find_catalog("exp").function, 100.0, 256);
        CHECK(discrete_condition_number(ring, 100) == doctest::Approx(1.002).epsilon(1e-3));
    }
    SUBCASE("exp at r = 200, n = 100") {
        SampleRing ring = sample_ring(*find_catalog("exp").function, 200.0, 512);
        CHECK(discrete_condition_number(ring, 100) == doctest::Approx(1.502e13).epsilon(0.01));
    }
    SUBCASE("total cancelation at an absent coefficient") {
        // a_3 of z^2 is zero; the denominator cancels to rounding noise, so
        // kappa_m is either +inf or astronomically large
        SampleRing ring = sample_ring(monomial(2), 1.0, 8);
        CHECK(discrete_condition_number(ring, 3) > 1e14);
    }
    SUBCASE("exactly zero samples give +inf") {
        SampleRing ring = sample_ring(monomial(2), 1.0, 8);
        for (auto& s : ring.samples) s = ScaledComplex::zero();
        CHECK(std::isinf(discrete_condition_number(ring, 0)));
    }
    SUBCASE("kappa_m >= 1 - 1e-12 on random rings") {
        std::mt19937_64 rng(3);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (int trial = 0; trial < 100; ++trial) {
            double c1 = u(rng), c2 = u(rng);
            auto f = plain([=](Complex z) { return std::exp(c1 * z) + c2 * z; });
            SampleRing ring = sample_ring(f, 0.5 + (trial % 7) * 0.4, 8 + (trial % 9));
            double kappa = discrete_condition_number(ring, trial % 5);
            CHECK(kappa >= 1.0 - 1e-12);
        }
    }
}

TEST_CASE("scale invariance of kappa_m is bitwise") {
    // synthetic ring with integer exponents so the shift is exact
    SampleRing ring;
    ring.radius = 1.0;
    ring.count = 8;
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int j = 0; j < 8; ++j)
        ring.samples.push_back(
            ScaledComplex(Complex(1.0 + 0.5 * u(rng), u(rng)), static_cast<double>(j % 3)));
    ring.common_scale = 2.0;
    double before = discrete_condition_number(ring, 3);

    SampleRing shifted = ring;
    for (auto& s : shifted.samples) s = s.scaled_by_exp(64.0);
    shifted.common_scale += 64.0;
    double after = discrete_condition_number(shifted, 3);
    CHECK(before == after); // bitwise
}

TEST_CASE("absolute-error stability of normalized coefficients") {
    // perturbing every sample by <= eps moves r^n a_n by <= eps (1 + 1e-12)
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    auto f = plain([](Complex z) { return std::exp(z) / (2.0 - z); });
    double r = 1.3;
    int m = 16, n = 5;
    SampleRing ring = sample_ring(f, r, m);
    ScaledComplex base = trapezoidal_coefficient(ring, n).scaled_by_exp(n * std::log(r));
    for (int trial = 0; trial < 40; ++trial) {
        double eps = std::pow(10.0, -6.0 * (trial % 5) / 4.0);
        SampleRing pert = ring;
        for (size_t j = 0; j < pert.samples.size(); ++j) {
            Complex noise = eps * std::polar(1.0, 3.0 * u(rng)) * (0.25 + 0.75 * std::abs(u(rng)));
            pert.samples[j] = ScaledComplex::from(ring.samples[j].to_complex() + noise);
        }
        pert.common_scale = 0.0;
        for (const auto& s : pert.samples)
            pert.common_scale = std::max(pert.common_scale, s.log_abs());
        ScaledComplex moved = trapezoidal_coefficient(pert, n).scaled_by_exp(n * std::log(r));
        CHECK((moved - base).abs() <= eps * (1.0 + 1e-12));
    }
}

TEST_CASE("mean_modulus") {
    SUBCASE("constant") {
        SampleRing ring = sample_ring(plain([](Complex) { return Complex(-3.0, 4.0); }), 2.0, 16);
        CHECK(mean_modulus(ring).to_complex().real() == doctest::Approx(5.0).epsilon(1e-14));
    }
    SUBCASE("exp at tiny radius tends to |a_0|") {
        SampleRing ring = sample_ring(*find_catalog("exp").function, 1e-8, 8);
        CHECK(mean_modulus(ring).to_complex().real() == doctest::Approx(1.0).epsilon(1e-7));
    }
    SUBCASE("exp at r = 1 matches the Bessel oracle") {
        SampleRing ring = sample_ring(*find_catalog("exp").function, 1.0, 64);
        CHECK(mean_modulus(ring).to_complex().real() ==
              doctest::Approx(bessel_i0(1.0)).epsilon(1e-12));
    }
}

TEST_CASE("reference_condition_number") {
    const auto& exp_entry = find_catalog("exp");
    SUBCASE("exp n = 100 at r = 1") {
        double kappa = reference_condition_number(*exp_entry.function,
                                                  exp_entry.coefficient_oracle(100), 100, 1.0, 64);
        CHECK(kappa == doctest::Approx(1.182e158).epsilon(1e-3));
    }
    SUBCASE("exp n = 0 at r = 1 is the Bessel mean") {
        double kappa = reference_condition_number(*exp_entry.function,
                                                  exp_entry.coefficient_oracle(0), 0, 1.0, 64);
        CHECK(kappa == doctest::Approx(bessel_i0(1.0)).epsilon(1e-12));
    }
    SUBCASE("monomial at its own degree") {
        double kappa =
            reference_condition_number(monomial(2), Complex(1.0, 0.0), 2, 1.7, 16);
        CHECK(kappa == doctest::Approx(1.0).epsilon(1e-14));
    }
    SUBCASE("zero oracle coefficient is an error") {
        CHECK_THROWS_AS(reference_condition_number(monomial(2), Complex(0.0, 0.0), 2, 1.0, 8),
                        std::domain_error);
    }
}

TEST_CASE("sampling is deterministic and thread-count independent") {
    auto f = plain([](Complex z) { return std::exp(std::sin(z)) + z * z; });
    SampleRing a = sample_ring(f, 1.7, 64);
    SampleRing b = sample_ring(f, 1.7, 64);
    REQUIRE(a.samples.size() == b.samples.size());
    for (size_t j = 0; j < a.samples.size(); ++j) {
        CHECK(a.samples[j].mantissa() == b.samples[j].mantissa());
        CHECK(a.samples[j].exponent() == b.samples[j].exponent());
    }

    setenv("CAUCHY_DERIV_THREADS", "4", 1);
    SampleRing c = sample_ring(f, 1.7, 64);
    setenv("CAUCHY_DERIV_THREADS", "1", 1);
    ScaledComplex va = trapezoidal_coefficient(a, 7);
    ScaledComplex vc = trapezoidal_coefficient(c, 7);
    CHECK(va.mantissa() == vc.mantissa());
    CHECK(va.exponent() == vc.exponent());
}

TEST_CASE("log-path rings keep huge values finite") {
    const auto& rg = find_catalog("recip_gamma");
    SampleRing ring = sample_ring(*rg.function, 200.0, 256);
    CHECK(std::isfinite(ring.common_scale));
    CHECK(ring.common_scale > 500.0); // 1/Gamma reaches e^{O(r log r)} on the circle
    double kappa = discrete_condition_number(ring, 201);
    CHECK(std::isfinite(kappa));
    CHECK(kappa >= 1.0 - 1e-12);
}

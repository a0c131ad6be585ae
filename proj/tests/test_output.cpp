#include <doctest.h>

#include <cstdlib>
#include <random>

#include "cauchyderiv/output.hpp"

using namespace cauchy;

TEST_CASE("format_double round-trips every double bit pattern tried") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> mag(-300.0, 300.0);
    std::uniform_real_distribution<double> mant(-1.0, 1.0);
    for (int i = 0; i < 5000; ++i) {
        double x = mant(rng) * std::pow(10.0, mag(rng));
        std::string s = format_double(x);
        double back = std::strtod(s.c_str(), nullptr);
        CHECK(back == x); // bitwise
    }
}

TEST_CASE("format_value uses plain doubles inside [1e-300, 1e300]") {
    CHECK(format_value(ScaledComplex::from(1.0)) == "1");
    std::string s = format_value(ScaledComplex::from(0.1));
    CHECK(std::strtod(s.c_str(), nullptr) == 0.1);
    CHECK(format_value(ScaledComplex::zero()) == "0");
}

TEST_CASE("format_value switches to mantissa-exponent form outside double range") {
    ScaledComplex big = ScaledComplex::from_log(Complex(1342.0, 0.0));
    std::string s = format_value(big);
    CHECK(s.find('e') != std::string::npos);
    // decimal exponent of e^1342 is 582
    CHECK(s.find("e+582") != std::string::npos);
    ScaledComplex tiny = ScaledComplex::from_log(Complex(-800.0, 0.0));
    CHECK(format_value(tiny).find("e-348") != std::string::npos);
}

TEST_CASE("record serializations carry 17-digit round-trip values") {
    OutputRecord rec;
    rec.value = ScaledComplex::from(1.0 / 3.0);
    rec.kappa = 1.2345678901234567;
    rec.m_used = 64;
    rec.radius = 10.5;
    rec.strategy = "nonneg_convex";
    rec.digit_loss = 0.09151498112135022;
    rec.status = "converged";

    std::string json = to_json(rec);
    CHECK(json.find("\"kappa\":1.2345678901234567") != std::string::npos);
    CHECK(json.find("\"status\":\"converged\"") != std::string::npos);

    std::string csv = to_csv(rec);
    auto newline = csv.find('\n');
    std::string head = csv.substr(0, newline);
    CHECK(head == "value,radius,strategy,kappa,digit_loss,m,status");
    std::string row = csv.substr(newline + 1);
    // the first field reproduces the serialized double bitwise
    CHECK(std::strtod(row.c_str(), nullptr) == rec.value.to_complex().real());

    std::string text = to_text(rec);
    CHECK(text.find("kappa") != std::string::npos);
}

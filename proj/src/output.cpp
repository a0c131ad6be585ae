#include "cauchyderiv/output.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace cauchy {
namespace {

constexpr double kLn10 = 2.3025850929940456840179914546844;

std::string format_mantissa_exponent(const ScaledComplex& v) {
    double lg = v.log_abs() / kLn10;
    double dec_exp = std::floor(lg);
    double frac = lg - dec_exp;
    Complex mant10 = (v.mantissa() / std::abs(v.mantissa())) * std::pow(10.0, frac);
    char buf[96];
    if (std::abs(mant10.imag()) <= 1e-13 * std::abs(mant10)) {
        std::snprintf(buf, sizeof(buf), "%.17ge%+d", mant10.real(), static_cast<int>(dec_exp));
    } else {
        std::snprintf(buf, sizeof(buf), "(%.17g,%.17g)e%+d", mant10.real(), mant10.imag(),
                      static_cast<int>(dec_exp));
    }
    return buf;
}

} // namespace

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string format_value(const ScaledComplex& v) {
    if (v.is_zero()) return "0";
    double lg = v.log_abs() / kLn10;
    if (lg < -300.0 || lg > 300.0) return format_mantissa_exponent(v);
    Complex c = v.to_complex();
    if (std::abs(c.imag()) <= 1e-13 * std::abs(c)) return format_double(c.real());
    return "(" + format_double(c.real()) + "," + format_double(c.imag()) + ")";
}

std::string to_text(const OutputRecord& rec) {
    std::ostringstream os;
    os << "value:      " << format_value(rec.value) << "\n";
    if (std::isfinite(rec.radius)) os << "radius:     " << format_double(rec.radius) << "\n";
    if (!rec.strategy.empty()) os << "strategy:   " << rec.strategy << "\n";
    if (!std::isnan(rec.kappa)) os << "kappa:      " << format_double(rec.kappa) << "\n";
    if (!std::isnan(rec.digit_loss))
        os << "digit_loss: " << format_double(rec.digit_loss) << "\n";
    if (rec.predicted_digit_loss)
        os << "predicted_digit_loss: " << format_double(*rec.predicted_digit_loss) << "\n";
    if (rec.predicted_nodes) os << "predicted_nodes: " << *rec.predicted_nodes << "\n";
    if (rec.m_used > 0) os << "m:          " << rec.m_used << "\n";
    if (rec.rel_error_estimate)
        os << "rel_error_estimate: " << format_double(*rec.rel_error_estimate) << "\n";
    if (!rec.status.empty()) os << "status:     " << rec.status << "\n";
    if (!rec.warning.empty()) os << "warning:    " << rec.warning << "\n";
    return os.str();
}

std::string to_json(const OutputRecord& rec) {
    std::ostringstream os;
    os << "{";
    os << "\"value\":\"" << format_value(rec.value) << "\"";
    if (std::isfinite(rec.radius)) os << ",\"radius\":" << format_double(rec.radius);
    if (!rec.strategy.empty()) os << ",\"strategy\":\"" << rec.strategy << "\"";
    if (!std::isnan(rec.kappa)) os << ",\"kappa\":" << format_double(rec.kappa);
    if (!std::isnan(rec.digit_loss)) os << ",\"digit_loss\":" << format_double(rec.digit_loss);
    if (rec.predicted_digit_loss)
        os << ",\"predicted_digit_loss\":" << format_double(*rec.predicted_digit_loss);
    if (rec.predicted_nodes) os << ",\"predicted_nodes\":" << *rec.predicted_nodes;
    if (rec.m_used > 0) os << ",\"m\":" << rec.m_used;
    if (rec.rel_error_estimate)
        os << ",\"rel_error_estimate\":" << format_double(*rec.rel_error_estimate);
    if (!rec.status.empty()) os << ",\"status\":\"" << rec.status << "\"";
    if (!rec.warning.empty()) os << ",\"warning\":\"" << rec.warning << "\"";
    os << "}";
    return os.str();
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find(',') == std::string::npos) return s;
    return "\"" + s + "\"";
}

} // namespace

std::string to_csv(const OutputRecord& rec) {
    std::ostringstream head, row;
    head << "value";
    row << csv_field(format_value(rec.value));
    if (std::isfinite(rec.radius)) {
        head << ",radius";
        row << "," << format_double(rec.radius);
    }
    if (!rec.strategy.empty()) {
        head << ",strategy";
        row << "," << rec.strategy;
    }
    if (!std::isnan(rec.kappa)) {
        head << ",kappa";
        row << "," << format_double(rec.kappa);
    }
    if (!std::isnan(rec.digit_loss)) {
        head << ",digit_loss";
        row << "," << format_double(rec.digit_loss);
    }
    if (rec.m_used > 0) {
        head << ",m";
        row << "," << rec.m_used;
    }
    if (!rec.status.empty()) {
        head << ",status";
        row << "," << rec.status;
    }
    return head.str() + "\n" + row.str() + "\n";
}

} // namespace cauchy

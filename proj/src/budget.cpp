#include "cauchyderiv/budget.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "cauchyderiv/sfun.hpp"

namespace cauchy {

const char* to_string(BudgetRegime r) {
    switch (r) {
        case BudgetRegime::finite_R: return "finite_R";
        case BudgetRegime::entire_order_type: return "entire_order_type";
        case BudgetRegime::prg_quasioptimal: return "prg_quasioptimal";
        case BudgetRegime::darboux_suboptimal: return "darboux_suboptimal";
    }
    return "unknown";
}

namespace {

double to_L(double eps) {
    if (!(eps > 0.0 && eps < 1.0))
        throw std::invalid_argument("node budget: eps must lie in (0,1)");
    return std::log(1.0 / eps);
}

double check_L(double L) {
    if (!(L > 0.0) || !std::isfinite(L))
        throw std::invalid_argument("node budget: log(1/eps) must be positive and finite");
    return L;
}

} // namespace

NodeBudget nodes_finite_R_log(double L, double r, double R, int n) {
    check_L(L);
    if (!(r > 0.0) || !(R > r) || !std::isfinite(R))
        throw std::invalid_argument("nodes_finite_R: need 0 < r < R < inf");
    NodeBudget b;
    b.m_estimate = L / std::log(R / r);
    b.regime = BudgetRegime::finite_R;
    b.sampling_floor = n + 1;
    return b;
}

NodeBudget nodes_finite_R(double eps, double r, double R, int n) {
    return nodes_finite_R_log(to_L(eps), r, R, n);
}

NodeBudget nodes_entire_log(double L, double r, double rho, double tau, int n) {
    check_L(L);
    if (!(r > 0.0) || !(rho > 0.0) || !(tau > 0.0))
        throw std::invalid_argument("nodes_entire: r, rho, tau must be positive");
    double w_arg = L / (std::exp(1.0) * tau * std::pow(r, rho));
    NodeBudget b;
    b.m_estimate = rho * L / lambert_w0(w_arg);
    b.regime = BudgetRegime::entire_order_type;
    b.sampling_floor = n + 1;
    return b;
}

NodeBudget nodes_entire(double eps, double r, double rho, double tau, int n) {
    return nodes_entire_log(to_L(eps), r, rho, tau, n);
}

NodeBudget nodes_prg_quasioptimal_log(double L, int n, double rho) {
    check_L(L);
    if (n < 0 || !(rho > 0.0))
        throw std::invalid_argument("nodes_prg_quasioptimal: need n >= 0 and rho > 0");
    NodeBudget b;
    b.m_estimate = std::exp(1.0) * n + rho * L;
    b.regime = BudgetRegime::prg_quasioptimal;
    b.sampling_floor = n + 1;
    return b;
}

NodeBudget nodes_prg_quasioptimal(double eps, int n, double rho) {
    return nodes_prg_quasioptimal_log(to_L(eps), n, rho);
}

NodeBudget nodes_darboux_log(double L, int n, double beta, std::optional<double> alpha) {
    check_L(L);
    if (n < 2) throw std::invalid_argument("nodes_darboux: need n >= 2");
    NodeBudget b;
    b.regime = BudgetRegime::darboux_suboptimal;
    b.sampling_floor = n + 1;
    if (beta > -1.0) {
        // Hardy-space case: only the generic finite-R bound applies, with the
        // radius pushed against the boundary
        b.m_estimate = L / -std::log1p(-1e-6);
        return b;
    }
    if (beta == -1.0) {
        if (alpha)
            b.m_estimate = n / *alpha * L;
        else
            b.m_estimate = n * std::log(static_cast<double>(n)) * L;
        return b;
    }
    b.m_estimate = n / (-beta - 1.0) * L;
    return b;
}

NodeBudget nodes_darboux(double eps, int n, double beta, std::optional<double> alpha) {
    return nodes_darboux_log(to_L(eps), n, beta, alpha);
}

double log_inverse_eps(const char* text) {
    // ordinary parse first; fall back to mantissa/exponent splitting when the
    // decimal exponent is beyond double range
    char* end = nullptr;
    double v = std::strtod(text, &end);
    if (end && *end == '\0' && v > 0.0 && v < 1.0 && std::isfinite(v)) return std::log(1.0 / v);
    std::string s(text);
    auto epos = s.find_first_of("eE");
    if (epos == std::string::npos)
        throw std::invalid_argument("eps: cannot parse '" + s + "'");
    double mant = std::strtod(s.substr(0, epos).c_str(), nullptr);
    long expo = std::strtol(s.c_str() + epos + 1, nullptr, 10);
    if (!(mant > 0.0))
        throw std::invalid_argument("eps: cannot parse '" + s + "'");
    constexpr double kLn10 = 2.3025850929940456840179914546844;
    double log_eps = std::log(mant) + expo * kLn10;
    if (!(log_eps < 0.0))
        throw std::invalid_argument("eps must lie in (0,1): '" + s + "'");
    return -log_eps;
}

} // namespace cauchy

#pragma once

#include <string>
#include <vector>

namespace cauchy {

/// Regenerators for the reference tables; each returns CSV-ready rows.
/// Columns are documented per function.

/// n, r_diamond, kappa_diamond, n^(2/3), kappa at the asymptotic radius.
struct AiryRow {
    int n;
    double r_diamond;
    double kappa_diamond;
    double r_asymptotic;
    double kappa_asymptotic;
};
std::vector<AiryRow> airy_table(const std::vector<int>& orders, bool bi);

/// eps = 10^-neg_log10_eps; exact minimal m (aliasing series), measured
/// minimal m in hardware doubles (-1 when eps is below what doubles can
/// verify), asymptotic bound. eps reaches 1e-1000, hence the log encoding.
struct MExpRow {
    int neg_log10_eps;
    int m_exact;
    int m_measured;
    double bound;
};
std::vector<MExpRow> m_exp_table();

/// n, saddle radius, measured kappa (log-evaluator driver), |sec phi_n|.
struct GammaRow {
    int n;
    double r;
    double kappa_measured;
    double sec_abs;
};
std::vector<GammaRow> gamma_table(const std::vector<int>& orders);

/// Catalog growth metadata.
struct FunctionRow {
    std::string name;
    double rho;
    double tau;
    double radius_of_convergence;
    bool nonnegative;
    std::string note;
};
std::vector<FunctionRow> functions_table();

} // namespace cauchy

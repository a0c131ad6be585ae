#include "cauchyderiv/tables.hpp"

#include <cmath>

#include "cauchyderiv/driver.hpp"
#include "cauchyderiv/budget.hpp"
#include "cauchyderiv/radius.hpp"
#include "cauchyderiv/saddle.hpp"
#include "cauchyderiv/sfun.hpp"

namespace cauchy {
namespace {

// log of the exact trapezoidal error for f = exp: the aliasing tail
// sum_{j>=1} n! r^{jm} / (n+jm)!  (all terms positive).
double log_alias_error_exp(int n, double r, int m) {
    double lg_n = std::lgamma(n + 1.0);
    double log_sum = -std::numeric_limits<double>::infinity();
    for (int j = 1; j <= 8; ++j) {
        double lt = lg_n - std::lgamma(n + 1.0 + static_cast<double>(j) * m) +
                    static_cast<double>(j) * m * std::log(r);
        if (log_sum == -std::numeric_limits<double>::infinity())
            log_sum = lt;
        else if (lt < log_sum)
            log_sum += std::log1p(std::exp(lt - log_sum));
        else
            log_sum = lt + std::log1p(std::exp(log_sum - lt));
        if (lt < log_sum - 40.0) break;
    }
    return log_sum;
}

int exact_minimal_m_exp(int n, double r, double log_eps) {
    for (int m = n + 1; m < 100000; ++m)
        if (log_alias_error_exp(n, r, m) <= log_eps) return m;
    return -1;
}

int measured_minimal_m_exp(int n, double r, double eps, int m_hi) {
    const AnalyticFunction& f = *find_catalog("exp").function;
    ScaledComplex exact = find_catalog("exp").coefficient_oracle(n);
    int last_violation = n;
    for (int m = n + 1; m <= m_hi; ++m) {
        SampleRing ring = sample_ring(f, r, m);
        double rel = relative_difference(trapezoidal_coefficient(ring, n), exact);
        if (rel > eps) last_violation = m;
    }
    return last_violation + 1;
}

} // namespace

std::vector<AiryRow> airy_table(const std::vector<int>& orders, bool bi) {
    const CatalogEntry& entry = find_catalog(bi ? "airy_bi" : "airy_ai");
    const AnalyticFunction& f = *entry.function;
    std::vector<AiryRow> rows;
    for (int n : orders) {
        RadiusPlan plan;
        if (bi) {
            plan = radius_nonneg_convex(f, n);
        } else {
            double seed_r = radius_prg_asymptotic(n, f.order, f.type_).radius;
            plan = radius_saddle(f, n, std::polar(seed_r, *f.saddle_ray));
        }
        AiryRow row;
        row.n = n;
        row.r_diamond = plan.radius;
        row.kappa_diamond = measure_condition_number(f, n, plan.radius).kappa;
        row.r_asymptotic = std::pow(static_cast<double>(n), 2.0 / 3.0);
        row.kappa_asymptotic = measure_condition_number(f, n, row.r_asymptotic).kappa;
        rows.push_back(row);
    }
    return rows;
}

std::vector<MExpRow> m_exp_table() {
    const int n = 10;
    const double r = 10.0;
    const double ln10 = std::log(10.0);
    std::vector<MExpRow> rows;
    for (int k : {12, 100, 1000}) {
        MExpRow row;
        row.neg_log10_eps = k;
        row.m_exact = exact_minimal_m_exp(n, r, -k * ln10);
        row.m_measured = k <= 13 ? measured_minimal_m_exp(n, r, std::pow(10.0, -k), 200) : -1;
        row.bound = nodes_entire_log(k * ln10, r, 1.0, 1.0, n).m_estimate;
        rows.push_back(row);
    }
    return rows;
}

std::vector<GammaRow> gamma_table(const std::vector<int>& orders) {
    const AnalyticFunction& f = *find_catalog("recip_gamma").function;
    std::vector<GammaRow> rows;
    for (int n : orders) {
        GammaResonance res = gamma_resonance(n);
        GammaRow row;
        row.n = n;
        row.r = res.r;
        row.sec_abs = res.sec_abs;
        row.kappa_measured = measure_condition_number(f, n, res.r).kappa;
        rows.push_back(row);
    }
    return rows;
}

std::vector<FunctionRow> functions_table() {
    std::vector<FunctionRow> rows;
    for (const auto& e : catalog()) {
        FunctionRow row;
        row.name = e.name;
        row.rho = e.function ? e.function->order : std::numeric_limits<double>::quiet_NaN();
        row.tau = e.function ? e.function->type_ : std::numeric_limits<double>::quiet_NaN();
        row.radius_of_convergence =
            e.function ? e.function->radius_of_convergence : std::numeric_limits<double>::infinity();
        row.nonnegative = e.function && e.function->nonnegative_coefficients;
        row.note = e.note;
        rows.push_back(row);
    }
    return rows;
}

} // namespace cauchy

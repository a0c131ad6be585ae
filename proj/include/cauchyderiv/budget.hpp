#pragma once

#include <cmath>
#include <optional>

namespace cauchy {

enum class BudgetRegime { finite_R, entire_order_type, prg_quasioptimal, darboux_suboptimal };

const char* to_string(BudgetRegime r);

/// Closed-form node-count predictor. The raw (un-ceiled) asymptotic estimate
/// is kept so it can be quoted to decimals; the integer recommendation always
/// respects the sampling condition m > n.
struct NodeBudget {
    double m_estimate = 0.0;
    BudgetRegime regime = BudgetRegime::finite_R;
    int sampling_floor = 1; // n + 1

    int recommendation() const {
        double c = std::ceil(m_estimate);
        if (!(c > sampling_floor)) return sampling_floor;
        return static_cast<int>(c);
    }
};

/// Accuracy targets far below double range (eps = 1e-1000) only exist on the
/// log scale, so every predictor has an *_log form taking L = log(1/eps);
/// the eps forms are wrappers.

/// m ~ log(1/eps) / log(R/r) for 0 < r < R < inf.
NodeBudget nodes_finite_R(double eps, double r, double R, int n = 0);
NodeBudget nodes_finite_R_log(double L, double r, double R, int n = 0);

/// m ~ rho L / W(L / (e tau r^rho)), L = log(1/eps), for entire f of
/// order rho and type tau.
NodeBudget nodes_entire(double eps, double r, double rho, double tau, int n = 0);
NodeBudget nodes_entire_log(double L, double r, double rho, double tau, int n = 0);

/// m ~ e n + rho log(1/eps) at the quasi-optimal radius.
NodeBudget nodes_prg_quasioptimal(double eps, int n, double rho);
NodeBudget nodes_prg_quasioptimal_log(double L, int n, double rho);

/// Darboux radii: beta = -1 with suboptimal 1 - alpha/n gives (n/alpha) L;
/// beta = -1 at the near-optimal radius gives n log n L; beta < -1 gives
/// n L / (-beta - 1). For beta > -1 the finite-R bound applies with r
/// pushed to R(1 - 1e-6) (callers are warned: the count explodes).
NodeBudget nodes_darboux(double eps, int n, double beta, std::optional<double> alpha = {});
NodeBudget nodes_darboux_log(double L, int n, double beta, std::optional<double> alpha = {});

/// log(1/eps) from a decimal string; survives exponents far below double
/// range ("1e-1000").
double log_inverse_eps(const char* text);

} // namespace cauchy

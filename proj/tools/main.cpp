#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "cauchyderiv/budget.hpp"
#include "cauchyderiv/driver.hpp"
#include "cauchyderiv/expr.hpp"
#include "cauchyderiv/output.hpp"
#include "cauchyderiv/quad.hpp"
#include "cauchyderiv/radius.hpp"
#include "cauchyderiv/sfun.hpp"
#include "cauchyderiv/tables.hpp"

namespace {

using namespace cauchy;

struct FunctionArgs {
    std::string fn;
    std::string expr;
    double beta = 5.5;
    double q = 0.5;
    int k = 0;
    double disk_radius = 0.0; // 0 = unset
};

struct ResolvedFunction {
    AnalyticFunction f;
    std::function<ScaledComplex(int)> oracle; // may be empty
    std::string label;
};

ResolvedFunction resolve_function(const FunctionArgs& args) {
    if (args.fn.empty() == args.expr.empty())
        throw CLI::ValidationError("exactly one of --fn and --expr is required");
    ResolvedFunction out;
    if (!args.fn.empty()) {
        if (args.fn == "fbeta") {
            out.f = make_f_beta(args.beta);
            double beta = args.beta;
            out.oracle = [beta](int n) { return f_beta_coefficient(beta, n); };
        } else if (args.fn == "qpochhammer") {
            out.f = make_q_pochhammer(args.q);
            double q = args.q;
            out.oracle = [q](int n) { return q_pochhammer_coefficient(q, n); };
        } else if (args.fn == "bessel_i") {
            out.f = make_bessel_i(args.k);
        } else if (args.fn == "bessel_j") {
            out.f = make_bessel_j(args.k);
        } else if (args.fn == "bessel_i_scaled") {
            out.f = make_bessel_i_scaled(args.k);
        } else {
            const CatalogEntry& entry = find_catalog(args.fn);
            if (!entry.function || !entry.function->evaluate)
                throw std::runtime_error("catalog entry '" + args.fn + "' carries no evaluator");
            out.f = *entry.function;
            out.oracle = entry.coefficient_oracle;
        }
        out.label = args.fn;
    } else {
        Expression e = parse(args.expr);
        std::optional<double> R;
        if (args.disk_radius > 0.0) R = args.disk_radius;
        out.f = make_expression_function(e, R);
        out.label = args.expr;
    }
    return out;
}

RadiusPlan plan_for_method(const std::string& method, const AnalyticFunction& f, int n,
                           const std::function<ScaledComplex(int)>& oracle) {
    if (method == "auto") return auto_radius(f, n);
    if (method == "nonneg") return radius_nonneg_convex(f, n);
    if (method == "saddle") {
        if (!f.has_order_and_type())
            throw std::runtime_error(
                "radius method 'saddle' needs order/type metadata for the initial guess");
        double seed = radius_prg_asymptotic(n, f.order, f.type_).radius;
        return radius_saddle(f, n, std::polar(seed, f.saddle_ray.value_or(0.0)));
    }
    if (method == "prg") {
        if (!f.has_order_and_type())
            throw std::runtime_error("radius method 'prg' needs known order and type");
        return radius_prg_asymptotic(n, f.order, f.type_);
    }
    if (method == "darboux") {
        if (!f.darboux_beta || f.entire())
            throw std::runtime_error("radius method 'darboux' needs branch-point metadata");
        return radius_darboux(n, *f.darboux_beta, f.radius_of_convergence);
    }
    if (method == "scan") {
        std::optional<ScaledComplex> an;
        if (oracle) an = oracle(n);
        if (f.entire())
            return optimal_radius_empirical(f, an, n, 1e-2 * std::max(n, 1), 1e2 * std::max(n, 1));
        double R = f.radius_of_convergence;
        return optimal_radius_empirical(f, an, n, R * 1e-3, R * (1.0 - 1e-6));
    }
    throw std::runtime_error("unknown radius method '" + method +
                             "' (expected auto|nonneg|saddle|prg|darboux|scan)");
}

void print_record(const OutputRecord& rec, const std::string& format) {
    if (format == "json")
        std::cout << to_json(rec) << "\n";
    else if (format == "csv")
        std::cout << to_csv(rec);
    else
        std::cout << to_text(rec);
}

int cmd_derive(const FunctionArgs& fargs, int n, double r_fixed, const std::string& method,
               double tol, bool coefficient, const std::string& format) {
    ResolvedFunction rf = resolve_function(fargs);
    RadiusPlan plan =
        r_fixed > 0.0 ? RadiusPlan::fixed(r_fixed) : plan_for_method(method, rf.f, n, rf.oracle);

    DriverConfig cfg;
    cfg.tol = tol;
    QuadratureOutcome out = coefficient ? taylor_coefficient(rf.f, n, plan.radius, cfg)
                                        : derivative(rf.f, n, plan, cfg);

    OutputRecord rec;
    rec.value = out.value;
    rec.kappa = out.kappa_m;
    rec.m_used = out.m_used;
    rec.radius = plan.radius;
    rec.strategy = to_string(plan.strategy);
    rec.digit_loss = digit_loss_estimate(out.kappa_m);
    rec.status = to_string(out.status);
    rec.predicted_digit_loss = plan.predicted_digit_loss;
    rec.predicted_nodes = plan.predicted_nodes;
    if (!std::isnan(out.rel_error_estimate)) rec.rel_error_estimate = out.rel_error_estimate;
    if (out.kappa_m * tol > 1.0)
        rec.warning = "kappa * tol exceeds 1: no significant digits at this radius";
    if (plan.flat_minimum_warning) rec.warning = "flat or noisy condition minimum";
    print_record(rec, format);
    return out.status == DriverStatus::converged ? 0 : 1;
}

int cmd_scan(const FunctionArgs& fargs, int n, double rmin, double rmax, int points,
             bool use_oracle) {
    ResolvedFunction rf = resolve_function(fargs);
    std::optional<ScaledComplex> an;
    if (use_oracle) {
        if (!rf.oracle)
            throw std::runtime_error("--oracle requested but no exact-coefficient oracle exists");
        an = rf.oracle(n);
    }
    ConditionCurve curve = scan_condition(rf.f, an, n, rmin, rmax, points);
    std::cout << "r,kappa,digit_loss\n";
    for (const auto& e : curve.entries)
        std::cout << format_double(e.r) << "," << format_double(e.kappa) << ","
                  << format_double(digit_loss_estimate(e.kappa)) << "\n";
    return 0;
}

int cmd_radius(const FunctionArgs& fargs, int n, const std::string& method,
               const std::string& format) {
    ResolvedFunction rf = resolve_function(fargs);
    RadiusPlan plan = plan_for_method(method, rf.f, n, rf.oracle);
    OutputRecord rec;
    rec.value = ScaledComplex::from(plan.radius);
    rec.radius = plan.radius;
    rec.strategy = to_string(plan.strategy);
    rec.predicted_digit_loss = plan.predicted_digit_loss;
    rec.predicted_nodes = plan.predicted_nodes;
    if (plan.saddle_point) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "saddle point (%.17g,%.17g)", plan.saddle_point->real(),
                      plan.saddle_point->imag());
        rec.warning = plan.flat_minimum_warning ? "flat or noisy condition minimum" : "";
        rec.status = buf;
    } else if (plan.flat_minimum_warning) {
        rec.warning = "flat or noisy condition minimum";
    }
    print_record(rec, format);
    return 0;
}

int cmd_nodes(const std::string& eps, double r, double R, double rho, double tau, int n,
              double beta, double alpha, const std::string& format) {
    double L = log_inverse_eps(eps.c_str()); // eps may be far below double range
    bool has_r = r > 0.0, has_R = std::isfinite(R) && R > 0.0, has_rho = rho > 0.0,
         has_tau = tau > 0.0, has_n = n >= 0, has_beta = !std::isnan(beta),
         has_alpha = alpha > 0.0;
    NodeBudget budget;
    if (has_r && has_R && !has_rho && !has_beta) {
        budget = nodes_finite_R_log(L, r, R, has_n ? n : 0);
    } else if (has_r && has_rho && has_tau && !has_R && !has_beta) {
        budget = nodes_entire_log(L, r, rho, tau, has_n ? n : 0);
    } else if (has_n && has_rho && !has_r && !has_beta) {
        budget = nodes_prg_quasioptimal_log(L, n, rho);
    } else if (has_n && has_beta && !has_r && !has_rho) {
        budget =
            nodes_darboux_log(L, n, beta, has_alpha ? std::optional<double>(alpha) : std::nullopt);
    } else {
        throw std::runtime_error(
            "nodes: give exactly one of (--r --R) | (--r --rho --tau) | (--n --rho) | "
            "(--n --beta [--alpha])");
    }
    OutputRecord rec;
    rec.value = ScaledComplex::from(budget.m_estimate);
    rec.strategy = to_string(budget.regime);
    rec.predicted_nodes = budget.recommendation();
    rec.status = "asymptotic estimate";
    print_record(rec, format);
    return 0;
}

int cmd_table(const std::string& name) {
    if (name == "airy" || name == "bi") {
        auto rows = airy_table({1, 10, 100, 1000}, name == "bi");
        std::cout << "n,r_diamond,kappa_diamond,r_asymptotic,kappa_asymptotic\n";
        for (const auto& r : rows)
            std::cout << r.n << "," << format_double(r.r_diamond) << ","
                      << format_double(r.kappa_diamond) << "," << format_double(r.r_asymptotic)
                      << "," << format_double(r.kappa_asymptotic) << "\n";
        return 0;
    }
    if (name == "m_exp") {
        std::cout << "eps,m_exact,m_measured,bound\n";
        for (const auto& r : m_exp_table()) {
            std::cout << "1e-" << r.neg_log10_eps << "," << r.m_exact << ",";
            if (r.m_measured >= 0) std::cout << r.m_measured;
            std::cout << "," << format_double(r.bound) << "\n";
        }
        return 0;
    }
    if (name == "gamma") {
        std::vector<int> orders;
        for (int n = 2002; n <= 2010; ++n) orders.push_back(n);
        for (int n = 10931; n <= 10939; ++n) orders.push_back(n);
        std::cout << "n,r,kappa,sec_phi\n";
        for (const auto& r : gamma_table(orders))
            std::cout << r.n << "," << format_double(r.r) << "," << format_double(r.kappa_measured)
                      << "," << format_double(r.sec_abs) << "\n";
        return 0;
    }
    if (name == "functions") {
        std::cout << "name,rho,tau,R,nonnegative,note\n";
        for (const auto& r : functions_table())
            std::cout << r.name << "," << format_double(r.rho) << "," << format_double(r.tau)
                      << "," << format_double(r.radius_of_convergence) << ","
                      << (r.nonnegative ? 1 : 0) << ",\"" << r.note << "\"\n";
        return 0;
    }
    throw std::runtime_error("unknown table '" + name +
                             "' (expected airy|bi|m_exp|gamma|functions)");
}

void add_function_options(CLI::App* cmd, FunctionArgs& fargs) {
    cmd->add_option("--fn", fargs.fn, "catalog function name");
    cmd->add_option("--expr", fargs.expr, "analytic expression in z");
    cmd->add_option("--beta", fargs.beta, "beta for --fn fbeta (default 11/2)");
    cmd->add_option("--q", fargs.q, "q for --fn qpochhammer (default 1/2)");
    cmd->add_option("--k", fargs.k, "index for --fn bessel_*");
    cmd->add_option("--R", fargs.disk_radius, "radius of convergence for --expr functions");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"High-order Taylor coefficients and derivatives via Cauchy integrals"};
    app.require_subcommand(1);

    // derive
    FunctionArgs d_fargs;
    int d_n = 0;
    double d_r = 0.0, d_tol = 1e-15;
    std::string d_method = "auto", d_format = "text";
    bool d_coefficient = false;
    CLI::App* derive = app.add_subcommand("derive", "compute f^(n)(0) or a_n");
    add_function_options(derive, d_fargs);
    derive->add_option("--n", d_n, "derivative order")->required();
    derive->add_option("--r", d_r, "fixed contour radius");
    derive->add_option("--radius-method", d_method, "auto|nonneg|saddle|prg|darboux|scan");
    derive->add_option("--tol", d_tol, "target relative tolerance (default 1e-15)");
    derive->add_flag("--coefficient", d_coefficient, "emit a_n instead of f^(n)(0)");
    derive->add_option("--format", d_format, "text|json|csv");

    // scan
    FunctionArgs s_fargs;
    int s_n = 0, s_points = 50;
    double s_rmin = 0.0, s_rmax = 0.0;
    bool s_oracle = false;
    CLI::App* scan = app.add_subcommand("scan", "condition-number curve as CSV");
    add_function_options(scan, s_fargs);
    scan->add_option("--n", s_n, "derivative order")->required();
    scan->add_option("--rmin", s_rmin, "smallest radius")->required();
    scan->add_option("--rmax", s_rmax, "largest radius")->required();
    scan->add_option("--points", s_points, "grid size (default 50)");
    scan->add_flag("--oracle", s_oracle, "use the exact-coefficient oracle for kappa");

    // radius
    FunctionArgs r_fargs;
    int r_n = 0;
    std::string r_method = "auto", r_format = "text";
    CLI::App* radius = app.add_subcommand("radius", "choose a contour radius");
    add_function_options(radius, r_fargs);
    radius->add_option("--n", r_n, "derivative order")->required();
    radius->add_option("--method", r_method, "auto|nonneg|saddle|prg|darboux|scan");
    radius->add_option("--format", r_format, "text|json|csv");

    // nodes
    std::string n_eps;
    double n_r = 0.0, n_R = std::numeric_limits<double>::quiet_NaN();
    double n_rho = 0.0, n_tau = 0.0, n_beta = std::numeric_limits<double>::quiet_NaN(),
           n_alpha = 0.0;
    int n_n = -1;
    std::string n_format = "text";
    CLI::App* nodes = app.add_subcommand("nodes", "trapezoidal node-count estimates");
    nodes->add_option("--eps", n_eps, "target relative error (may be below double range)")
        ->required();
    nodes->add_option("--r", n_r, "contour radius");
    nodes->add_option("--R", n_R, "radius of convergence");
    nodes->add_option("--rho", n_rho, "order of the entire function");
    nodes->add_option("--tau", n_tau, "type of the entire function");
    nodes->add_option("--n", n_n, "derivative order");
    nodes->add_option("--beta", n_beta, "Darboux branch exponent");
    nodes->add_option("--alpha", n_alpha, "suboptimal-radius parameter (beta = -1)");
    nodes->add_option("--format", n_format, "text|json|csv");

    // table
    std::string t_name;
    CLI::App* table = app.add_subcommand("table", "regenerate a reference table as CSV");
    table->add_option("name", t_name, "airy|bi|m_exp|gamma|functions")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (derive->parsed())
            return cmd_derive(d_fargs, d_n, d_r, d_method, d_tol, d_coefficient, d_format);
        if (scan->parsed()) return cmd_scan(s_fargs, s_n, s_rmin, s_rmax, s_points, s_oracle);
        if (radius->parsed()) return cmd_radius(r_fargs, r_n, r_method, r_format);
        if (nodes->parsed())
            return cmd_nodes(n_eps, n_r, n_R, n_rho, n_tau, n_n, n_beta, n_alpha, n_format);
        if (table->parsed()) return cmd_table(t_name);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

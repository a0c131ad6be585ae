#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cauchyderiv/budget.hpp"
#include "cauchyderiv/driver.hpp"
#include "cauchyderiv/expr.hpp"
#include "cauchyderiv/quad.hpp"
#include "cauchyderiv/radius.hpp"
#include "cauchyderiv/saddle.hpp"
#include "cauchyderiv/sfun.hpp"

namespace py = pybind11;
using namespace cauchy;

namespace {

AnalyticFunction resolve(const std::string& fn, const std::string& expr,
                         std::optional<double> R) {
    if (fn.empty() == expr.empty())
        throw std::invalid_argument("give exactly one of fn= and expr=");
    if (!fn.empty()) {
        const CatalogEntry& entry = find_catalog(fn);
        if (!entry.function || !entry.function->evaluate)
            throw std::invalid_argument("catalog entry '" + fn + "' carries no evaluator");
        return *entry.function;
    }
    return make_expression_function(parse(expr), R);
}

py::dict outcome_to_dict(const QuadratureOutcome& out, double radius,
                         const std::string& strategy) {
    py::dict d;
    d["value"] = out.value.to_complex();
    d["log_abs_value"] = out.value.log_abs();
    d["arg_value"] = out.value.arg();
    d["kappa"] = out.kappa_m;
    d["m"] = out.m_used;
    d["radius"] = radius;
    d["strategy"] = strategy;
    d["digit_loss"] = digit_loss_estimate(out.kappa_m);
    d["rel_error_estimate"] = out.rel_error_estimate;
    d["status"] = std::string(to_string(out.status));
    return d;
}

py::dict plan_to_dict(const RadiusPlan& plan) {
    py::dict d;
    d["radius"] = plan.radius;
    d["strategy"] = std::string(to_string(plan.strategy));
    if (plan.predicted_nodes) d["predicted_nodes"] = *plan.predicted_nodes;
    if (plan.predicted_digit_loss) d["predicted_digit_loss"] = *plan.predicted_digit_loss;
    if (plan.saddle_point) d["saddle_point"] = *plan.saddle_point;
    if (plan.flat_minimum_warning) d["warning"] = "flat or noisy condition minimum";
    return d;
}

RadiusPlan plan_for(const AnalyticFunction& f, int n, const std::string& method) {
    if (method == "auto") return auto_radius(f, n);
    if (method == "nonneg") return radius_nonneg_convex(f, n);
    if (method == "prg") return radius_prg_asymptotic(n, f.order, f.type_);
    if (method == "saddle") {
        double seed = radius_prg_asymptotic(n, f.order, f.type_).radius;
        return radius_saddle(f, n, std::polar(seed, f.saddle_ray.value_or(0.0)));
    }
    if (method == "darboux") {
        if (!f.darboux_beta) throw std::invalid_argument("no darboux metadata");
        return radius_darboux(n, *f.darboux_beta, f.radius_of_convergence);
    }
    throw std::invalid_argument("unknown radius method '" + method + "'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Taylor coefficients and high-order derivatives of analytic functions "
              "by trapezoidal sums over Cauchy integrals, with condition-number "
              "diagnostics and automatic contour-radius selection";

    m.def(
        "derivative",
        [](int n, const std::string& fn, const std::string& expr, std::optional<double> r,
           const std::string& method, double tol, bool coefficient, std::optional<double> R) {
            AnalyticFunction f = resolve(fn, expr, R);
            RadiusPlan plan = r ? RadiusPlan::fixed(*r) : plan_for(f, n, method);
            DriverConfig cfg;
            cfg.tol = tol;
            QuadratureOutcome out = coefficient ? taylor_coefficient(f, n, plan.radius, cfg)
                                                : cauchy::derivative(f, n, plan, cfg);
            return outcome_to_dict(out, plan.radius, to_string(plan.strategy));
        },
        py::arg("n"), py::kw_only(), py::arg("fn") = "", py::arg("expr") = "",
        py::arg("r") = std::nullopt, py::arg("method") = "auto", py::arg("tol") = 1e-15,
        py::arg("coefficient") = false, py::arg("R") = std::nullopt,
        "Compute f^(n)(0) (or a_n with coefficient=True) of a catalog function or "
        "an expression in z; returns value and diagnostics as a dict");

    m.def(
        "radius",
        [](int n, const std::string& fn, const std::string& expr, const std::string& method,
           std::optional<double> R) {
            return plan_to_dict(plan_for(resolve(fn, expr, R), n, method));
        },
        py::arg("n"), py::kw_only(), py::arg("fn") = "", py::arg("expr") = "",
        py::arg("method") = "auto", py::arg("R") = std::nullopt,
        "Choose a contour radius for order n");

    m.def(
        "scan",
        [](int n, double rmin, double rmax, int points, const std::string& fn,
           const std::string& expr, bool oracle, std::optional<double> R) {
            AnalyticFunction f = resolve(fn, expr, R);
            std::optional<ScaledComplex> an;
            if (oracle) {
                const CatalogEntry& entry = find_catalog(fn);
                if (!entry.coefficient_oracle)
                    throw std::invalid_argument("no exact-coefficient oracle for '" + fn + "'");
                an = entry.coefficient_oracle(n);
            }
            ConditionCurve curve = scan_condition(f, an, n, rmin, rmax, points);
            std::vector<std::pair<double, double>> out;
            for (const auto& e : curve.entries) out.emplace_back(e.r, e.kappa);
            return out;
        },
        py::arg("n"), py::arg("rmin"), py::arg("rmax"), py::arg("points") = 50, py::kw_only(),
        py::arg("fn") = "", py::arg("expr") = "", py::arg("oracle") = false,
        py::arg("R") = std::nullopt, "Condition-number curve as a list of (r, kappa) pairs");

    m.def(
        "nodes_finite_R",
        [](double eps, double r, double R) { return nodes_finite_R(eps, r, R).m_estimate; },
        py::arg("eps"), py::arg("r"), py::arg("R"));
    m.def(
        "nodes_entire",
        [](double eps, double r, double rho, double tau) {
            return nodes_entire(eps, r, rho, tau).m_estimate;
        },
        py::arg("eps"), py::arg("r"), py::arg("rho"), py::arg("tau"));
    m.def(
        "nodes_prg_quasioptimal",
        [](double eps, int n, double rho) { return nodes_prg_quasioptimal(eps, n, rho).m_estimate; },
        py::arg("eps"), py::arg("n"), py::arg("rho"));

    m.def("lambert_w0", &lambert_w0, py::arg("x"),
          "Principal branch of the Lambert W function on [-1/e, inf)");
    m.def("lambert_w0_complex", &lambert_w0_complex, py::arg("z"));
    m.def("log_gamma", &log_gamma_complex, py::arg("z"),
          "Analytic log-gamma, continuous off the cut (-inf, 0]");
    m.def("digamma", &digamma_complex, py::arg("z"));

    m.def(
        "gamma_resonance",
        [](int n) {
            GammaResonance g = gamma_resonance(n);
            py::dict d;
            d["r"] = g.r;
            d["theta"] = g.theta;
            d["phi"] = g.phi;
            d["sec_abs"] = g.sec_abs;
            return d;
        },
        py::arg("n"), "Saddle radius and |sec phi_n| prediction for 1/Gamma at order n");

    m.def(
        "evaluate_expression",
        [](const std::string& text, Complex z) { return evaluate(parse(text), z); },
        py::arg("text"), py::arg("z"), "Parse and evaluate an expression at z");

    m.def("catalog_names", [] {
        std::vector<std::string> names;
        for (const auto& e : catalog()) names.push_back(e.name);
        return names;
    });

    m.def(
        "coefficient_oracle",
        [](const std::string& fn, int n) {
            const CatalogEntry& entry = find_catalog(fn);
            if (!entry.coefficient_oracle)
                throw std::invalid_argument("no exact-coefficient oracle for '" + fn + "'");
            ScaledComplex v = entry.coefficient_oracle(n);
            py::dict d;
            d["value"] = v.to_complex();
            d["log_abs"] = v.log_abs();
            d["arg"] = v.arg();
            return d;
        },
        py::arg("fn"), py::arg("n"), "Exact a_n from the catalog oracle, with log-scale fields");
}

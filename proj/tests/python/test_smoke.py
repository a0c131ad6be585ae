"""Smoke tests for the pybind11 extension. ctest points PYTHONPATH at the
build directory, so the raw _core module is importable directly; the installed
package re-exports the same symbols as cauchyderiv."""

import math
import os
import subprocess

import pytest

core = pytest.importorskip("_core")


def test_derivative_of_exp_is_one():
    out = core.derivative(10, fn="exp", r=10.0)
    assert out["status"] == "converged"
    assert abs(out["value"] - 1.0) < 1e-12
    assert out["kappa"] < 1.3
    assert out["m"] <= 64


def test_coefficient_mode_matches_oracle():
    out = core.derivative(10, fn="exp", r=10.0, coefficient=True)
    want = core.coefficient_oracle("exp", 10)["value"]
    assert abs(out["value"] - want) <= 1e-13 * abs(want)


def test_expression_functions():
    val = core.evaluate_expression("z/(exp(z)-1)", 1.0 + 0.0j)
    assert abs(val - 1.0 / (math.exp(1.0) - 1.0)) < 1e-14
    out = core.derivative(100, expr="z/(exp(z)-1)", r=6.2203, tol=1e-12, coefficient=True)
    assert out["status"] == "converged"
    oracle = core.coefficient_oracle("bernoulli", 100)["value"]
    assert abs(out["value"] - oracle) <= 1e-11 * abs(oracle)


def test_radius_selection():
    plan = core.radius(100, fn="bell", method="nonneg")
    assert plan["strategy"] == "nonneg_convex"
    assert abs(plan["radius"] - core.lambert_w0(100.0)) < 1e-7
    plan = core.radius(10, fn="airy_ai")
    assert plan["strategy"] == "saddle"
    assert abs(plan["radius"] - 4.72421) < 1e-4


def test_node_budgets():
    assert abs(core.nodes_finite_R(1e-12, 6.22, 2.0 * math.pi) - 2733.80) < 0.01
    assert abs(core.nodes_entire(1e-12, 10.0, 1.0, 1.0) - 48.21) < 0.05
    assert abs(core.nodes_prg_quasioptimal(1e-15, 100, 1.0) - 306.3) < 0.1


def test_scan_returns_a_curve():
    curve = core.scan(10, 1.0, 100.0, 21, fn="exp", oracle=True)
    assert len(curve) == 21
    best_r = min(curve, key=lambda e: e[1])[0]
    assert abs(best_r - 10.5) < 0.15 * 10.5


def test_special_functions():
    assert abs(core.lambert_w0(1.0) - 0.5671432904097838) < 1e-14
    w = core.lambert_w0_complex(-2005.5 + 0j)
    assert w.imag > 0
    assert abs(w * complex(math.e) ** w - (-2005.5)) < 1e-9
    assert abs(core.log_gamma(101.0 + 0j).real - math.lgamma(101.0)) < 1e-10
    res = core.gamma_resonance(2006)
    assert abs(res["sec_abs"] - 42811.637) < 0.01


def test_scaled_outputs_survive_double_overflow():
    # the 1000th derivative of exp: n! alone overflows a double
    out = core.derivative(1000, fn="exp", r=1000.0)
    assert out["status"] == "converged"
    assert math.isfinite(out["log_abs_value"])
    assert abs(out["log_abs_value"]) < 1e-10  # the derivative is exactly 1


def test_catalog_listing():
    names = core.catalog_names()
    for expected in ("exp", "airy_ai", "bell", "bernoulli", "sec6", "recip_gamma"):
        assert expected in names


def test_cli_binary_if_provided():
    cli = os.environ.get("CAUCHY_SMOKE_CLI")
    if not cli:
        pytest.skip("CLI path not provided")
    run = subprocess.run(
        [cli, "derive", "--fn", "exp", "--n", "10", "--r", "10", "--format", "json"],
        capture_output=True,
        text=True,
        timeout=120,
    )
    assert run.returncode == 0
    import json

    record = json.loads(run.stdout)
    assert record["status"] == "converged"
    assert abs(float(record["value"]) - 1.0) < 1e-12

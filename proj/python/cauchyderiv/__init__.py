"""Taylor coefficients and high-order derivatives of analytic functions via
trapezoidal sums over Cauchy integrals, with condition-number diagnostics and
automatic contour-radius selection."""

from cauchyderiv._core import (
    catalog_names,
    coefficient_oracle,
    derivative,
    digamma,
    evaluate_expression,
    gamma_resonance,
    lambert_w0,
    lambert_w0_complex,
    log_gamma,
    nodes_entire,
    nodes_finite_R,
    nodes_prg_quasioptimal,
    radius,
    scan,
)

__all__ = [
    "catalog_names",
    "coefficient_oracle",
    "derivative",
    "digamma",
    "evaluate_expression",
    "gamma_resonance",
    "lambert_w0",
    "lambert_w0_complex",
    "log_gamma",
    "nodes_entire",
    "nodes_finite_R",
    "nodes_prg_quasioptimal",
    "radius",
    "scan",
]

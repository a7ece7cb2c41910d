"""Entropic uncertainty bounds for Dirac modes near a Schwarzschild horizon."""

import json

from ._horizon_eur import (
    ConsistencyError,
    DomainError,
    Error,
    NotPositiveSemidefiniteError,
    PreconditionError,
    UnsupportedInputError,
    c1,
    conditional_entropy,
    dilation_angle,
    dilation_angle_physical,
    eigenbasis,
    example_state,
    holevo_quantity,
    mode_isometry,
    mutual_information,
    partial_trace,
    shannon_entropy,
    spin_observable,
    transform_memory,
    verify,
    von_neumann_entropy,
)
from . import _horizon_eur


def evaluate(state, omega, r0, bases=("x", "y")):
    """Every bound for an example state at one (omega, r0) point, as a dict."""
    return json.loads(_horizon_eur._evaluate_json(state, omega, r0, bases[0], bases[1]))


def report(rho, dims, bases=("x", "y")):
    """Every bound for an arbitrary bipartite density matrix."""
    return json.loads(_horizon_eur._report_json(rho, list(dims), bases[0], bases[1]))


def sweep(state, omegas=(10.0, 30.0), r0_min=1.001, r0_max=1.05, steps=100, bases=("x", "y"), format="records"):
    """Grid evaluation. format is "records" (list of dicts), "csv" or "json" (strings)."""
    raw = "json" if format == "records" else format
    out = _horizon_eur._sweep(state, list(omegas), r0_min, r0_max, steps, bases[0], bases[1], raw)
    return json.loads(out) if format == "records" else out


__all__ = [
    "ConsistencyError",
    "DomainError",
    "Error",
    "NotPositiveSemidefiniteError",
    "PreconditionError",
    "UnsupportedInputError",
    "c1",
    "conditional_entropy",
    "dilation_angle",
    "dilation_angle_physical",
    "eigenbasis",
    "evaluate",
    "example_state",
    "holevo_quantity",
    "mode_isometry",
    "mutual_information",
    "partial_trace",
    "report",
    "shannon_entropy",
    "spin_observable",
    "sweep",
    "transform_memory",
    "verify",
    "von_neumann_entropy",
]

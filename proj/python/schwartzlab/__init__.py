"""Numerical laboratory for smooth crossed products by R and T."""

import json

from ._core import (
    Action,
    DomainTruncationError,
    GridMismatchError,
    Grid,
    InputError,
    LabError,
    MeanNotZeroError,
    NotInIdealError,
    StructuralError,
    UsageError,
    VerificationFailure,
    convolve,
    d_alpha,
    differentiate,
    fourier_transform,
    homotopy_beta,
    integrate,
    map_iota,
    map_pi,
    op_T,
    run_cli,
    sect_rho,
    suite_names,
    twisted_convolve,
)
from ._core import _run_suite_json


def run_suite(name, config=None):
    """Run one verification suite; returns the report as a dict."""
    return json.loads(_run_suite_json(name, json.dumps(config or {})))


__all__ = [name for name in dir() if not name.startswith("_")]

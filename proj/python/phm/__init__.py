"""Numerical checks for pluriharmonic maps f = h + conj(g) on the unit polydisk.

Reports are returned as plain dicts with the same fields as the CLI's
``--json`` output.
"""

from ._core import (
    DegreeCapError,
    Map,
    UsageError,
    certified_upper_bound,
    coefficient_audit,
    convex_combine,
    default_sample,
    derivative_band,
    dft_coefficients,
    epsilon_family_check,
    growth_check,
    injectivity_scan,
    lambda_value,
    local_nonvanishing,
    membership,
    noshiro_warschawski,
    orthogonality_selftest,
    schwarz_check,
    stable_scan,
    sufficient_condition,
    sup_estimate,
    unimodular_sample,
)

__all__ = [
    "DegreeCapError",
    "Map",
    "UsageError",
    "certified_upper_bound",
    "coefficient_audit",
    "convex_combine",
    "default_sample",
    "derivative_band",
    "dft_coefficients",
    "epsilon_family_check",
    "growth_check",
    "injectivity_scan",
    "lambda_value",
    "local_nonvanishing",
    "membership",
    "noshiro_warschawski",
    "orthogonality_selftest",
    "schwarz_check",
    "stable_scan",
    "sufficient_condition",
    "sup_estimate",
    "unimodular_sample",
]

__version__ = "0.1.0"

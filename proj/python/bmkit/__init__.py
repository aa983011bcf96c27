"""Exact Boros-Moll coefficient tables, verification sweeps, and the
exhaustive enumeration oracle.

All exact values are fractions.Fraction; floats appear only in the
quadrature cross-check.
"""

import json as _json

from ._bmkit import (
    DEFAULT_ENUMERATION_MAX_M,
    _verify_model_json,
    big_d,
    check_unimodality,
    d_coeffs,
    family_weight,
    identity_a1,
    integral_check,
    log_concavity_margins,
    p_eval,
    product_inequality,
    recurrence_residual,
    table_json,
    table_tsv,
)

__all__ = [
    "DEFAULT_ENUMERATION_MAX_M",
    "big_d",
    "check_unimodality",
    "d_coeffs",
    "family_weight",
    "identity_a1",
    "integral_check",
    "log_concavity_margins",
    "p_eval",
    "product_inequality",
    "recurrence_residual",
    "table_json",
    "table_tsv",
    "verify_model",
]


def verify_model(m, max_m=DEFAULT_ENUMERATION_MAX_M):
    """Run every enumeration check for one m; returns the report as a dict."""
    return _json.loads(_verify_model_json(m, max_m))

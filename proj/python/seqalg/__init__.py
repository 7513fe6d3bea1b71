"""Exact lazy power-series (sequence algebra) kernel.

Thin wrapper around the compiled extension; all coefficients are exact and
rendered as strings ("p/q" for rationals, "a+bi" for Gaussian rationals).
"""

from ._seqalg import (
    EvalError,
    ParseError,
    check,
    names,
    run,
    terms,
    triangle,
)

__all__ = [
    "EvalError",
    "ParseError",
    "check",
    "names",
    "run",
    "terms",
    "triangle",
]

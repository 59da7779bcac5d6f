"""Exact computations in the BMW algebras BWM_n(r, q)."""

import json

from ._core import (
    DEFAULT_BUDGET,
    DEFAULT_PRIME,
    BudgetExhausted,
    BwmError,
    ExprSyntaxError,
    IndexDomain,
    ParameterSingular,
    RankMismatch,
    basis,
    dimension,
    equal,
    reduce_expr,
    reduce_text,
    suite_names,
)
from . import _core


def reduce(expr, n):
    """Normal form of `expr` in BWM_n as a dict with keys rank and terms."""
    return json.loads(_core.reduce_json(expr, n))


def symmetrizer(n, variant="right-b"):
    return json.loads(_core.idempotent_json(n, True, variant))


def antisymmetrizer(n, variant="right-b"):
    return json.loads(_core.idempotent_json(n, False, variant))


def verify(suite="all", n=3, seed=1, backend="exact", prime=DEFAULT_PRIME, budget=DEFAULT_BUDGET):
    """Runs a verification suite at ranks up to n and returns the report."""
    return json.loads(_core.verify_json(suite, n, seed, backend, prime, budget))


__all__ = [
    "BudgetExhausted",
    "BwmError",
    "ExprSyntaxError",
    "IndexDomain",
    "ParameterSingular",
    "RankMismatch",
    "antisymmetrizer",
    "basis",
    "dimension",
    "equal",
    "reduce",
    "reduce_expr",
    "reduce_text",
    "suite_names",
    "symmetrizer",
    "verify",
]

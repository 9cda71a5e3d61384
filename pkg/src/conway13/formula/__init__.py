"""Closed-form expression DAGs for the digit toolkit.

``build_formula`` produces macro-mode formulas (floor, ceiling, modulo and
abs as nodes), ``lower`` expands those macros into the seven permitted
operations, and the evaluators, ``stats`` and ``render`` inspect the result.
"""

from .build import TARGETS, Toolkit, build_formula, canonical_target, inputs_of, reference
from .evaluate import ComplexResult, eval_complex, eval_exact
from .expr import ExprStats, Expr, const, is_macro_free, node, stats, var
from .lower import lower
from .render import render

__all__ = [
    "TARGETS", "Toolkit", "build_formula", "canonical_target", "inputs_of",
    "reference", "ComplexResult", "eval_complex", "eval_exact", "Expr",
    "ExprStats", "const", "is_macro_free", "node", "stats", "var", "lower",
    "render",
]

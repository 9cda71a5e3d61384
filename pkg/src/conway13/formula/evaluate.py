"""Exact and complex floating evaluation of expression DAGs."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .. import numeric
from ..errors import DomainError, UnsupportedEvaluation
from .expr import (
    ABS, ADD, CEIL, CONST, DIV, FLOOR, INPUT, LOG, MACROS, MOD, MUL, POW, ROOT, SUB,
    Expr, postorder,
)

DEFAULT_GUARD = 1e-6


def _bind(e: Expr, bindings) -> dict[str, Fraction]:
    names = {n.name for n in postorder(e) if n.kind == INPUT}
    missing = names - set(bindings)
    if missing:
        raise DomainError(f"unbound inputs: {sorted(missing)}")
    return {k: numeric.as_rational(bindings[k]) for k in names}


def _ceil_log_ratio(u: Fraction, v: Fraction) -> int:
    # least t with v**t >= u, for u > 0 and v > 1
    if u <= 0 or v <= 1:
        raise UnsupportedEvaluation(f"log_{v}({u}) is not handled exactly")
    t, power = 0, Fraction(1)
    while power < u:
        power *= v
        t += 1
    while power / v >= u:
        power /= v
        t -= 1
    return t


def _exact_root(q: Fraction) -> Fraction:
    if q < 0:
        raise UnsupportedEvaluation(f"sqrt({q}) is not real")
    num, den = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if num * num != q.numerator or den * den != q.denominator:
        raise UnsupportedEvaluation(f"sqrt({q}) is irrational")
    return Fraction(num, den)


def _exact_log_ratio(n: Expr, values) -> Fraction | None:
    # ceil(Log(u) / Log(v)) evaluated by comparing u with powers of v
    child = n.children[0]
    if child.kind == DIV and all(c.kind == LOG for c in child.children):
        u, v = (values[id(c.children[0])] for c in child.children)
        return Fraction(_ceil_log_ratio(u, v))
    return None


def eval_exact(e: Expr, bindings) -> Fraction:
    """Exact value of a macro-mode expression.

    Macros use the exact primitives of :mod:`conway13.numeric`.  A Log node
    is only evaluated as ``Log(1) = 0`` or inside ``ceil(Log(u)/Log(v))``;
    anything leaving the rationals raises :class:`UnsupportedEvaluation`.
    """
    env = _bind(e, bindings)
    values: dict[int, Fraction] = {}
    # Irrational Log values propagate as deferred errors; they only surface
    # if something other than the ceil-log ratio needs them.
    deferred: dict[int, UnsupportedEvaluation] = {}
    for n in postorder(e):
        k = n.kind
        if k == LOG:
            arg = values[id(n.children[0])]
            if arg == 1:
                values[id(n)] = Fraction(0)
            else:
                deferred[id(n)] = UnsupportedEvaluation(f"Log({arg}) is irrational")
            continue
        if k == CEIL:
            special = _exact_log_ratio(n, values)
            if special is not None:
                values[id(n)] = special
                continue
        blocked = next((deferred[id(c)] for c in n.children if id(c) in deferred), None)
        if blocked is not None:
            deferred[id(n)] = blocked
            continue
        args = [values[id(c)] for c in n.children]
        if k == CONST:
            v = n.value
        elif k == INPUT:
            v = env[n.name]
        elif k == ADD:
            v = args[0] + args[1]
        elif k == SUB:
            v = args[0] - args[1]
        elif k == MUL:
            v = args[0] * args[1]
        elif k == DIV:
            if args[1] == 0:
                raise DomainError("division by zero")
            v = args[0] / args[1]
        elif k == POW:
            if args[1].denominator != 1:
                raise UnsupportedEvaluation(f"non-integer exponent {args[1]}")
            v = numeric.pow_int(args[0], args[1].numerator)
        elif k == ROOT:
            v = _exact_root(args[0])
        elif k == FLOOR:
            v = Fraction(numeric.floor(args[0]))
        elif k == CEIL:
            v = Fraction(numeric.ceil(args[0]))
        elif k == MOD:
            v = numeric.mod_exact(args[0], args[1])
        elif k == ABS:
            v = numeric.abs_exact(args[0])
        else:  # pragma: no cover
            raise DomainError(f"unknown node kind {k!r}")
        values[id(n)] = v
    if id(e) in deferred:
        raise deferred[id(e)]
    return values[id(e)]


@dataclass(frozen=True)
class ComplexResult:
    """Floating value plus a flag set when a Log argument sat within the
    guard band of the branch cut (the value may then be off by a period)."""

    value: mpmath.mpc
    ill_conditioned: bool = False

    @property
    def real(self) -> float:
        return float(self.value.real)


class _Evaluator:
    def __init__(self, guard):
        self.guard = guard
        self.flagged = False
        self.two_pi = 2 * mpmath.pi

    def log(self, z):
        """Log with imaginary part in [0, 2*pi)."""
        if z == 0:
            raise DomainError("Log(0) is undefined")
        theta = mpmath.atan2(z.imag, z.real)
        if theta < 0:
            theta += self.two_pi
        if z.imag != 0 or z.real < 0:
            turn = theta / self.two_pi
            if min(turn, 1 - turn) < self.guard:
                self.flagged = True
        return mpmath.mpc(mpmath.log(abs(z)), theta)

    def power(self, z, w):
        if w.imag == 0 and mpmath.isint(w.real):
            n = int(w.real)
            if z == 0 and n < 0:
                raise DomainError("zero to a negative power")
            return z**n
        if z == 0:
            if w.real > 0:
                return mpmath.mpc(0)
            raise DomainError("zero to a non-positive power")
        return mpmath.exp(w * self.log(z))


def eval_complex(
    e: Expr, bindings, precision: int = 50, guard: float = DEFAULT_GUARD
) -> ComplexResult:
    """Evaluate a lowered expression with ``precision`` significant digits.

    Log uses the ``[0, 2*pi)`` branch; powers are ``exp(w*Log z)`` (integer
    exponents by repeated multiplication) and the root is ``z ** (1/2)`` on
    the same branch.
    """
    if precision < 16:
        raise DomainError("precision must be at least 16 digits")
    env = _bind(e, bindings)
    order = postorder(e)
    if any(n.kind in MACROS for n in order):
        raise DomainError("eval_complex needs a lowered (macro-free) expression")
    with mpmath.workdps(precision):
        ev = _Evaluator(guard)
        values: dict[int, mpmath.mpc] = {}
        for n in order:
            k = n.kind
            args = [values[id(c)] for c in n.children]
            if k == CONST:
                v = mpmath.mpc(mpmath.mpf(n.value.numerator) / n.value.denominator)
            elif k == INPUT:
                q = env[n.name]
                v = mpmath.mpc(mpmath.mpf(q.numerator) / q.denominator)
            elif k == ADD:
                v = args[0] + args[1]
            elif k == SUB:
                v = args[0] - args[1]
            elif k == MUL:
                v = args[0] * args[1]
            elif k == DIV:
                if args[1] == 0:
                    raise DomainError("division by zero")
                v = args[0] / args[1]
            elif k == POW:
                v = ev.power(args[0], args[1])
            elif k == ROOT:
                v = ev.power(args[0], mpmath.mpc(mpmath.mpf(1) / 2))
            elif k == LOG:
                v = ev.log(args[0])
            else:  # pragma: no cover
                raise DomainError(f"unknown node kind {k!r}")
            values[id(n)] = v
        return ComplexResult(+values[id(e)], ev.flagged)

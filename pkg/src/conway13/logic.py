"""Closed-form logical-conditional functions on integers.

Each function evaluates its defining formula in exact rational arithmetic:

    equal(a, b)         = floor((1+eps) ** -|a-b|)
    not_equal(a, b)     = 1 - equal(a, b)
    greater_equal(a, b) = floor(1/2 + 1/(1 + (1+eps) ** (b-a)))
    minimum(a, b)       = a*greater_equal(b, a) + b*greater_equal(a, b) - a*equal(a, b)

Any ``eps > 0`` gives the same 0/1 outputs; the default ``eps = 1`` keeps
``(1+eps)**n`` a power of two.

Exponents are saturated at +/-``SATURATION`` before the power is taken.  Both
floors are monotone in the exponent and already constant for ``|n| >= 1``,
so saturation never changes a result, while it keeps inputs such as two
40-digit numbers from asking for a power with a 40-digit exponent.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError
from .numeric import as_rational, floor

SATURATION = 64

_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class LogicConfig:
    """Choice of ``eps``.

    Because exponents saturate, each formula only ever sees a bounded set of
    exponents; the floors for all of them are evaluated once, verbatim, when
    the config is created.
    """

    epsilon: Fraction = Fraction(1)
    _equal_table: tuple = field(init=False, repr=False, compare=False)
    _ge_table: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        eps = as_rational(self.epsilon)
        if eps <= 0:
            raise DomainError(f"epsilon must be positive, got {eps}")
        object.__setattr__(self, "epsilon", eps)
        base = 1 + eps
        object.__setattr__(
            self, "_equal_table",
            tuple(floor(base**-d) for d in range(SATURATION + 1)),
        )
        # index n + SATURATION holds the value for exponent n = b - a
        object.__setattr__(
            self, "_ge_table",
            tuple(
                floor(_HALF + 1 / (1 + base**n))
                for n in range(-SATURATION, SATURATION + 1)
            ),
        )


DEFAULT = LogicConfig()


def _check_int(v) -> int:
    if type(v) is int:
        return v
    if isinstance(v, bool) or not isinstance(v, int):
        if isinstance(v, Fraction) and v.denominator == 1:
            return v.numerator
        raise DomainError(f"logical functions take integer arguments, got {v!r}")
    return v


def equal(a: int, b: int, config: LogicConfig = DEFAULT) -> int:
    d = _check_int(a) - _check_int(b)
    return config._equal_table[min(abs(d), SATURATION)]


def not_equal(a: int, b: int, config: LogicConfig = DEFAULT) -> int:
    return 1 - equal(a, b, config)


def greater_equal(a: int, b: int, config: LogicConfig = DEFAULT) -> int:
    n = _check_int(b) - _check_int(a)
    return config._ge_table[max(-SATURATION, min(SATURATION, n)) + SATURATION]


def minimum(a: int, b: int, config: LogicConfig = DEFAULT) -> int:
    return (
        a * greater_equal(b, a, config)
        + b * greater_equal(a, b, config)
        - a * equal(a, b, config)
    )

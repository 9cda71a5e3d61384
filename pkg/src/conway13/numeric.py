"""Exact integer/rational substrate and the derived closed-form primitives.

Python ``int`` is the arbitrary-precision natural/integer type and
``fractions.Fraction`` is the exact rational: it is always reduced and keeps
a positive denominator, which is exactly the canonical form we need.

floor, ceiling and modulo are defined in closed form through the principal
logarithm (``x mod y = y/(2*pi*i) * Log(exp(2*pi*i*x/y))`` with the imaginary
part of Log taken in ``[0, 2*pi)``).  On rationals that identity collapses to
floored division, which is what is computed here; the Log form itself is
evaluated numerically in :mod:`conway13.formula`.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from .errors import DomainError

Natural = int
ExactRational = Fraction


def as_rational(x) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, Rational):
        raise DomainError(f"expected an exact rational, got {x!r}")
    return Fraction(x)


def as_natural(x) -> int:
    """Validate a non-negative integer argument.

    Integral ``Fraction`` values are accepted and converted; negative or
    fractional values raise :class:`DomainError` rather than being truncated.
    """
    if isinstance(x, bool):
        raise DomainError(f"expected a natural number, got {x!r}")
    if isinstance(x, Fraction):
        if x.denominator != 1:
            raise DomainError(f"expected a natural number, got {x}")
        x = x.numerator
    if not isinstance(x, int):
        raise DomainError(f"expected a natural number, got {x!r}")
    if x < 0:
        raise DomainError(f"expected a natural number, got {x}")
    return x


def floor(x) -> int:
    x = as_rational(x)
    return x.numerator // x.denominator


def ceil(x) -> int:
    return -floor(-as_rational(x))


def mod_exact(x, y) -> Fraction:
    """Floored-division remainder: ``0 <= r < y`` and ``(x - r) / y`` integral."""
    x, y = as_rational(x), as_rational(y)
    if y <= 0:
        raise DomainError(f"modulus must be positive, got {y}")
    return x - y * floor(x / y)


def abs_exact(x) -> Fraction:
    x = as_rational(x)
    return -x if x < 0 else x


def pow_int(base, exponent: int) -> Fraction:
    base = as_rational(base)
    if isinstance(exponent, bool) or not isinstance(exponent, int):
        raise DomainError(f"exponent must be an integer, got {exponent!r}")
    if base == 0 and exponent < 0:
        raise DomainError("zero cannot be raised to a negative power")
    return base**exponent


def ceil_log(x: int, b: int) -> int:
    """``ceil(log_b(x))`` for integers ``x >= 1``, ``b >= 2``, by comparison.

    No floating logarithm is taken: the result is the least ``t`` with
    ``b**t >= x``.
    """
    if x < 1 or b < 2:
        raise DomainError(f"ceil_log needs x >= 1 and b >= 2, got x={x}, b={b}")
    t, power = 0, 1
    while power < x:
        power *= b
        t += 1
    return t

"""Digit manipulation by arithmetic alone.

Every function here is the literal closed-form sum or floor expression, with
the equality/comparison tests going through :mod:`conway13.logic`; no
function looks at a digit string.  Arguments are natural numbers ``x``, a
base ``b >= 2``, a digit index ``n >= 0`` or a digit ``p`` in ``0..b-1``.

The one exception to "literal formula" is :func:`length`, which counts
divisions by ``b`` instead of taking ``ceil(log_b(x+1))`` with floats; the
two agree on every natural number and the tests check that.

Sums whose upper bound depends on ``length(x)`` are empty for ``x = 0``.
"""

from __future__ import annotations

from .digits import check_base, check_digit
from .logic import equal
from .numeric import as_natural


def _check_index(n) -> int:
    return as_natural(n)


# Unchecked kernels.  The public wrappers below validate once and then call
# these, which keeps the O(L^2) loops in rightmost_index tolerable.

def _trunc_trailing(x, b, n):
    return x // b**n


def _digit_at(x, b, n):
    return x // b**n - b * (x // b ** (n + 1))


def _length(x, b):
    count = 0
    while x:
        x //= b
        count += 1
    return count


def _count(x, b, p):
    return sum(equal(_digit_at(x, b, k), p) for k in range(_length(x, b)))


def _rightmost(x, b, p):
    total = _count(x, b, p)
    return sum(
        equal(_count(_trunc_trailing(x, b, k), b, p), total)
        for k in range(1, _length(x, b) + 1)
    )


def _trunc_leading(x, b, n):
    return sum(b**k * _digit_at(x, b, k) for k in range(_length(x, b) - n))


def _cut(x, b, p):
    return sum(b**k * _digit_at(x, b, k) for k in range(_rightmost(x, b, p) + 1))


def trunc_trailing(x: int, b: int, n: int) -> int:
    """Drop the ``n`` lowest digits: ``floor(x / b**n)``."""
    return _trunc_trailing(as_natural(x), check_base(b), _check_index(n))


def digit_at(x: int, b: int, n: int) -> int:
    """Digit at index ``n``: ``T(x, n) - b*T(x, n+1)``; zero above the top digit."""
    return _digit_at(as_natural(x), check_base(b), _check_index(n))


def length(x: int, b: int) -> int:
    """Number of base-``b`` digits of ``x``, with ``length(0) == 0``."""
    return _length(as_natural(x), check_base(b))


def count_occurrences(x: int, b: int, p: int) -> int:
    """How many times digit ``p`` occurs in the expansion of ``x``."""
    x, b = as_natural(x), check_base(b)
    return _count(x, b, check_digit(p, b))


def rightmost_index(x: int, b: int, p: int) -> int:
    """Index of the lowest occurrence of ``p``, or ``length(x, b)`` if none.

    Computed as the number of ``k`` in ``1..L`` for which dropping the ``k``
    lowest digits loses no occurrence of ``p``.
    """
    x, b = as_natural(x), check_base(b)
    return _rightmost(x, b, check_digit(p, b))


def trunc_leading(x: int, b: int, n: int) -> int:
    """Drop the ``n`` highest digits (0 once ``n >= length``)."""
    return _trunc_leading(as_natural(x), check_base(b), _check_index(n))


def cut_to_index(x: int, b: int, p: int) -> int:
    """Keep the digits at indices ``0..rightmost_index(x, b, p)``.

    When ``p`` occurs it becomes the leading digit; otherwise ``x`` is
    returned unchanged.
    """
    x, b = as_natural(x), check_base(b)
    return _cut(x, b, check_digit(p, b))

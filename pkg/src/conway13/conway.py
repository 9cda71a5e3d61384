"""Closed-form Conway base-13 function over the integers and Z[1/13].

The value is built in three arithmetic phases on ``|x|`` written in base 13:

1. cut the expansion just above the rightmost A or B (keeping that digit),
2. zero it unless exactly one C remains,
3. take the sign from the lone A/B, drop that leading digit and reread the
   rest as a base-10 numeral with the C acting as the decimal point.

Points ``y / 13**n`` of Z[1/13] take the value at ``y``, which is consistent
because the function is invariant under multiplication by 13.
"""

from __future__ import annotations

from fractions import Fraction

from .digit_ops import _count, _cut, _digit_at, _length, _rightmost, _trunc_leading
from .digits import A, B, C, DigitString, check_base, check_digit, to_natural
from .errors import DomainError
from .logic import equal, greater_equal, minimum, not_equal
from .numeric import abs_exact, as_natural, pow_int
from .values import DecimalValue, Z13Point


def _radix_shift(k: int, index: int) -> int:
    # 1 for digits left of the marker (k > index).  The k == index term is
    # already zeroed by not_equal, so >= and > coincide.
    return greater_equal(k, index)


def re_radix(x: int, b1: int, b2: int, p: int) -> Fraction:
    """Delete the digit ``p`` and reread the rest in base ``b2`` around it.

    With exactly one ``p`` at index ``j``, digits above ``j`` become the
    integer part and digits below it the fractional part, e.g. base-13
    ``1C3`` with marker C read in base 10 is ``13/10``.  The result for zero
    or several occurrences is well defined but carries no meaning.
    """
    x, b1, b2 = as_natural(x), check_base(b1), check_base(b2)
    check_digit(p, b1)
    return _re_radix(x, b1, b2, p)


def _re_radix(x, b1, b2, p):
    index = _rightmost(x, b1, p)
    total = Fraction(0)
    for k in range(_length(x, b1)):
        d = _digit_at(x, b1, k)
        total += not_equal(d, p) * d * pow_int(b2, k - index - _radix_shift(k, index))
    return total


def resulting_sign(x: int, b: int, p1: int, p2: int) -> int:
    """+1 if ``p1`` occurs exactly once and ``p2`` does not, -1 for the
    mirror case, 0 otherwise."""
    x, b = as_natural(x), check_base(b)
    check_digit(p1, b)
    check_digit(p2, b)
    return _sign(x, b, p1, p2)


def _sign(x, b, p1, p2):
    return equal(_count(x, b, p1), 1) - equal(_count(x, b, p2), 1)


def _abs_int(x) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise DomainError(f"expected an integer, got {x!r}")
    return int(abs_exact(x))


def phase1(x: int) -> int:
    """Keep the digits of ``|x|`` up to and including the rightmost A or B."""
    ax = _abs_int(x)
    return minimum(_cut(ax, 13, A), _cut(ax, 13, B))


def phase2(x: int) -> int:
    """``phase1(x)`` if it contains exactly one C, else 0."""
    f1 = phase1(x)
    return f1 * equal(_count(f1, 13, C), 1)


def phase3(x: int) -> DecimalValue:
    """Conway base-13 function of an integer, as an exact decimal."""
    f2 = phase2(x)
    value = _sign(f2, 13, A, B) * _re_radix(_trunc_leading(f2, 13, 1), 13, 10, C)
    return DecimalValue.of(value)


def eval_z13(point: Z13Point) -> DecimalValue:
    point = Z13Point.make(point.y, point.n)
    return phase3(point.y)


def encode_decimal(v: DecimalValue) -> int:
    """A natural number whose base-13 digits spell ``v``: A/B, digits, C, digits.

    ``phase3(encode_decimal(v)) == v``.  Zero has no chosen preimage.
    """
    if v.sign == 0:
        raise DomainError("zero has no canonical preimage")
    num, den = v.scaled()
    whole, frac = divmod(abs(num), den)
    whole_digits = str(whole) if whole else ""
    frac_digits = str(frac).rjust(v.places, "0") if v.places else ""
    digits = (A if v.sign > 0 else B,) + tuple(map(int, whole_digits)) + (C,)
    digits += tuple(map(int, frac_digits))
    return to_natural(DigitString(13, digits))

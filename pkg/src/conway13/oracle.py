"""Conway's base-13 function straight from its digit-level description.

This path only reads and splices digit strings; it never calls the
arithmetic toolkit, so it can serve as an independent reference when
checking :func:`conway13.conway.phase3`.  It also provides seeded input
generators shaped to hit each case.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .digits import A, B, C, DigitString, from_natural, to_natural
from .errors import DomainError
from .values import DecimalValue





class Case(Enum):
    CASE1 = "Case1"
    CASE2 = "Case2"
    OTHERWISE = "Otherwise"


@dataclass(frozen=True)
class CaseClassification:
    case: Case
    j_sign: int | None = None
    j_c: int | None = None


def classify(s: DigitString) -> CaseClassification:
    """Which case the base-13 digit string falls in, with the governing indices."""
    if s.base != 13:
        raise DomainError("classification is defined on base-13 strings")
    # (index, digit) pairs from the units digit upwards
    indexed = list(enumerate(reversed(s.digits)))
    j_sign = next((k for k, d in indexed if d in (A, B)), None)
    if j_sign is None:
        return CaseClassification(Case.OTHERWISE)
    c_positions = [k for k, d in indexed[:j_sign] if d == C]
    if len(c_positions) != 1:
        return CaseClassification(Case.OTHERWISE)
    case = Case.CASE1 if s[j_sign] == A else Case.CASE2
    return CaseClassification(case, j_sign, c_positions[0])


def oracle_f(x: int) -> DecimalValue:
    """Conway base-13 value of the integer ``x`` by digit surgery.

    The digits between the sign digit and the C form the integer part, those
    after the C the fraction.
    """
    s = from_natural(abs(x), 13)
    cls = classify(s)
    if cls.case is Case.OTHERWISE:
        return DecimalValue.of(0)
    text = "".join("0123456789ABC"[d] for d in s.digits)
    top = len(text) - 1
    whole = text[top - cls.j_sign + 1 : top - cls.j_c]
    frac = text[top - cls.j_c + 1 :]
    value = Fraction(int(whole or "0")) + Fraction(int(frac or "0"), 10 ** len(frac))
    return DecimalValue.of(value if cls.case is Case.CASE1 else -value)


PROFILES = (
    "uniform-digits",
    "case1-shaped",
    "case2-shaped",
    "multi-C",
    "multi-AB",
    "no-C",
    "boundary",
)


def _decimals(rng, n):
    return [rng.randrange(10) for _ in range(n)]


def _shaped(rng, length, sign_digit, c_count):
    # prefix (any digits) + sign digit + decimal/C run with c_count Cs
    tail_len = rng.randint(c_count, max(c_count, length - 1))
    tail = _decimals(rng, tail_len - c_count)
    for _ in range(c_count):
        tail.insert(rng.randint(0, len(tail)), C)
    prefix = [rng.randrange(13) for _ in range(length - 1 - tail_len)]
    if prefix and prefix[0] == 0:
        prefix[0] = rng.randrange(1, 13)
    return prefix + [sign_digit] + tail


def gen_structured(seed: int, profile: str, min_digits: int = 7, max_digits: int = 40) -> int:
    """Deterministic pseudo-random integer whose base-13 digits fit ``profile``.

    The result is a non-negative integer; same ``(seed, profile)`` gives the
    same value.  It never has more than ``max_digits`` digits; a shape that
    cannot fit (two Cs in two digits, say) is cut down to its low digits.
    """
    if profile not in PROFILES:
        raise DomainError(f"unknown generator profile {profile!r}")
    rng = random.Random(f"{profile}:{seed}")
    length = rng.randint(min_digits, max_digits)
    if profile == "uniform-digits":
        digits = [rng.randrange(1, 13)] + [rng.randrange(13) for _ in range(length - 1)]
    elif profile == "case1-shaped":
        digits = _shaped(rng, length, A, 1)
    elif profile == "case2-shaped":
        digits = _shaped(rng, length, B, 1)
    elif profile == "multi-C":
        digits = _shaped(rng, length, rng.choice((A, B)), rng.randint(2, max(2, length // 4)))
    elif profile == "multi-AB":
        digits = [rng.choice((A, B, C, rng.randrange(10))) for _ in range(length)]
        for _ in range(rng.randint(2, 4)):
            digits[rng.randrange(length)] = rng.choice((A, B))
    elif profile == "no-C":
        digits = [rng.randrange(12) for _ in range(length)]
    else:
        choice = rng.randrange(6)
        if choice == 0 or seed == 0:
            return 0
        if choice == 1:
            return rng.randrange(1, 13)
        if choice == 2:
            digits = [C] * rng.randint(1, max_digits)
        elif choice == 3:
            digits = [rng.choice((A, B)), C]
        elif choice == 4:
            digits = [rng.choice((A, B))] + [C] * rng.randint(0, 3)
        else:
            digits = [C, rng.choice((A, B))] + _decimals(rng, rng.randint(0, 5))
    return to_natural(DigitString(13, tuple(digits[-max_digits:])))

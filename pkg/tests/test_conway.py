import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conway13 import conway
from conway13.conway import (
    encode_decimal, eval_z13, phase1, phase2, phase3, re_radix, resulting_sign,
)
from conway13.digits import A, B, C
from conway13.errors import DomainError
from conway13.oracle import oracle_f
from conway13.values import DecimalValue, Z13Point

from conftest import digit_text, tri


def test_re_radix_examples():
    assert re_radix(tri("1C3"), 13, 10, C) == Fraction(13, 10)
    assert re_radix(tri("C"), 13, 10, C) == 0
    assert re_radix(tri("12C"), 13, 10, C) == 12


def test_resulting_sign_examples():
    assert resulting_sign(tri("A1C2"), 13, A, B) == 1
    assert resulting_sign(tri("B17C11"), 13, A, B) == -1
    assert resulting_sign(tri("137"), 13, A, B) == 0


def test_phase_examples():
    assert phase1(tri("B17C11")) == tri("B17C11")
    assert phase1(tri("137")) == tri("137")
    assert phase1(0) == 0
    assert phase1(tri("5A9B3C1")) == tri("B3C1")
    assert phase1(-tri("5B9A3C1")) == tri("A3C1")
    assert phase2(tri("B17C11")) == tri("B17C11")
    assert phase2(tri("1C3C")) == 0
    assert phase2(tri("137")) == 0


def test_phase3_examples():
    assert phase3(tri("137")) == DecimalValue.of(0)
    assert phase3(tri("B17C11")) == DecimalValue.of(Fraction(-1711, 100))
    assert phase3(tri("A3C14")) == DecimalValue.of(Fraction(314, 100))


def test_leftover_c_without_sign_digit_is_annihilated():
    # no A/B but exactly one C: phase2 keeps the number, the sign factor is 0
    for lit in ("1C3", "C", "99C0", "C12"):
        x = tri(lit)
        assert phase2(x) == x
        assert resulting_sign(phase2(x), 13, A, B) == 0
        assert phase3(x).sign == 0


def test_eval_z13_examples():
    assert eval_z13(Z13Point(0, 0)) == DecimalValue.of(0)
    assert eval_z13(Z13Point(tri("B17C11"), 4)) == DecimalValue.of(Fraction(-1711, 100))
    assert eval_z13(Z13Point(227, 1)) == DecimalValue.of(0)
    # a non-canonical point is canonicalised first
    assert eval_z13(Z13Point(13 * tri("B17C11"), 3)) == phase3(tri("B17C11"))


def test_encode_decimal_examples():
    assert encode_decimal(DecimalValue.of(Fraction(314, 100))) == tri("A3C14")
    assert encode_decimal(DecimalValue.of(Fraction(-1711, 100))) == tri("B17C11")
    assert encode_decimal(DecimalValue.of(1)) == tri("A1C")
    assert encode_decimal(DecimalValue.of(Fraction(1, 2))) == tri("AC5")
    with pytest.raises(DomainError):
        encode_decimal(DecimalValue.of(0))


def test_mutated_shift_breaks_golden(monkeypatch):
    from conway13.logic import greater_equal

    monkeypatch.setattr(conway, "_radix_shift", lambda k, index: greater_equal(index, k))
    assert re_radix(tri("1C3"), 13, 10, C) != Fraction(13, 10)


def _splice(x, b1, b2, p):
    # independent reading of the single-marker re-radix rule
    text = digit_text(x, b1)
    marker = "0123456789ABC"[p]
    left, _, right = text.partition(marker)
    value = Fraction(0)
    for ch in left:
        value = value * b2 + int(ch, 13)
    frac = Fraction(0)
    for ch in reversed(right):
        frac = (frac + int(ch, 13)) / b2
    return value + frac


@pytest.mark.parametrize("b1, b2", [(13, 10), (13, 13), (10, 13), (10, 10)])
def test_re_radix_single_marker(b1, b2):
    rng = random.Random(b1 * 100 + b2)
    p = b1 - 1
    alphabet = [d for d in range(b1) if d != p]
    for _ in range(2000):
        digits = [rng.choice(alphabet) for _ in range(rng.randint(0, 12))]
        digits.insert(rng.randint(0, len(digits)), p)
        if digits[0] == 0:
            digits[0] = rng.choice(alphabet[1:])
        x = 0
        for d in digits:
            x = x * b1 + d
        assert re_radix(x, b1, b2, p) == _splice(x, b1, b2, p)


@given(st.integers(min_value=-(13**25), max_value=13**25))
def test_sign_and_fractal_symmetry(x):
    v = phase3(x)
    assert phase3(-x) == v
    assert phase3(13 * x) == v
    assert v == oracle_f(x)


@given(st.integers(min_value=0, max_value=13**20))
def test_output_discipline(x):
    v = phase3(x)
    assert v.places <= len(digit_text(x, 13))


def test_decimal_value_rendering():
    assert str(DecimalValue.of(Fraction(-1711, 100))) == "-17.11"
    assert str(DecimalValue.of(Fraction(1, 20))) == "0.05"
    assert str(DecimalValue.of(0)) == "0"
    assert DecimalValue.of(Fraction(157, 50)).scaled() == (314, 100)
    with pytest.raises(DomainError):
        DecimalValue.of(Fraction(1, 3))
    with pytest.raises(DomainError):
        DecimalValue(1, Fraction(0))


def test_z13_point_canonical():
    assert Z13Point.make(13 * 5, 2) == Z13Point(5, 1)
    assert Z13Point.make(0, 3) == Z13Point(0, 0)
    assert Z13Point.make(169, 1) == Z13Point(13, 0)
    assert Z13Point.from_fraction(Fraction(5, 169)) == Z13Point(5, 2)
    with pytest.raises(DomainError):
        Z13Point.from_fraction(Fraction(1, 2))

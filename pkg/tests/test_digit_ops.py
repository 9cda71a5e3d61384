import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conway13.digit_ops import (
    count_occurrences, cut_to_index, digit_at, length, rightmost_index,
    trunc_leading, trunc_trailing,
)
from conway13.digits import C
from conway13.errors import DomainError
from conway13.numeric import ceil_log

from conftest import digit_text, tri

ALPHABET = "0123456789ABC"


def test_trunc_trailing_examples():
    assert trunc_trailing(123456, 10, 2) == 1234
    assert trunc_trailing(98765, 13, 0) == 98765
    assert trunc_trailing(227, 13, 5) == 0


def test_digit_at_examples():
    assert digit_at(123456, 10, 2) == 4
    assert digit_at(7, 10, 0) == 7
    assert digit_at(tri("137"), 13, 1) == 3
    assert digit_at(tri("137"), 13, 9) == 0


def test_length_examples():
    assert length(10, 10) == length(99, 10) == 2
    assert length(0, 13) == 0


def test_count_examples():
    assert count_occurrences(999, 10, 9) == 3
    assert count_occurrences(0, 13, 0) == 0
    assert count_occurrences(tri("B17C11"), 13, C) == 1


def test_rightmost_index_examples():
    assert rightmost_index(123456, 10, 4) == 2
    assert rightmost_index(tri("137"), 13, C) == 3
    assert rightmost_index(227, 13, C) == 3
    assert rightmost_index(0, 13, 10) == 0


def test_trunc_leading_examples():
    assert trunc_leading(123456, 10, 1) == 23456
    assert trunc_leading(4567, 13, 0) == 4567
    assert trunc_leading(0, 13, 1) == 0


def test_cut_to_index_examples():
    assert cut_to_index(123456, 10, 4) == 456
    assert cut_to_index(227, 13, C) == 227
    assert cut_to_index(0, 13, 5) == 0


@pytest.mark.parametrize(
    "fn, args",
    [
        (digit_at, (-1, 10, 0)),
        (trunc_trailing, (5, 10, -1)),
        (length, (5, 1)),
        (count_occurrences, (5, 10, 10)),
        (rightmost_index, (5, 13, 13)),
        (cut_to_index, (5, 13, -1)),
        (trunc_leading, (5.0, 13, 1)),
    ],
)
def test_domain_errors(fn, args):
    with pytest.raises(DomainError):
        fn(*args)


naturals = st.integers(min_value=0, max_value=13**30)
bases = st.sampled_from([2, 3, 10, 13])


@given(naturals, bases)
def test_reassembly(x, b):
    assert sum(b**k * digit_at(x, b, k) for k in range(length(x, b))) == x


@given(naturals, bases)
def test_length_matches_logs(x, b):
    L = length(x, b)
    assert L == (0 if x == 0 else len(digit_text(x, b)))
    assert L == ceil_log(x + 1, b)


@given(naturals, bases)
def test_occurrence_counts_sum_to_length(x, b):
    assert sum(count_occurrences(x, b, p) for p in range(b)) == length(x, b)


@given(naturals, bases, st.data())
def test_cut_idempotent(x, b, data):
    p = data.draw(st.integers(min_value=0, max_value=b - 1))
    once = cut_to_index(x, b, p)
    assert cut_to_index(once, b, p) == once


@given(naturals, bases, st.data())
def test_truncations_complement(x, b, data):
    L = length(x, b)
    n = data.draw(st.integers(min_value=0, max_value=L))
    # top L-n digits kept by trunc_trailing, low n digits by trunc_leading
    assert trunc_trailing(x, b, n) * b**n + trunc_leading(x, b, L - n) == x


def test_random_reassembly_per_base():
    rng = random.Random(7)
    for b in (2, 10, 13):
        for _ in range(10_000):
            x = rng.randrange(13**rng.randint(0, 25))
            assert sum(b**k * digit_at(x, b, k) for k in range(length(x, b))) == x

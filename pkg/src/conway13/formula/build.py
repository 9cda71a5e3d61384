"""Builders turning each toolkit function into a single static formula.

Sums whose range depends on the input's digit count are unrolled to a fixed
bound ``m_max`` (the largest number of base-13 digits the formula must
handle).  Terms that would be wrong past the true digit count carry a
``GE`` gate that zeroes them; terms whose digit factor is already zero there
are left ungated.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .. import conway, digit_ops, logic
from ..digits import A, B, C
from ..errors import DomainError
from ..logic import LogicConfig
from .expr import Expr, absolute, ceil, const, floor, log, total, var

TARGETS = (
    "E", "N", "GE", "M",
    "T_trail", "D", "L", "O", "I", "T_lead", "K",
    "X", "S", "f1", "f2", "f3",
)

ALIASES = {"T<-": "T_trail", "T←": "T_trail", "T->": "T_lead", "T→": "T_lead"}

LOGIC_TARGETS = ("E", "N", "GE", "M")


def canonical_target(target: str) -> str:
    t = ALIASES.get(target, target)
    if t not in TARGETS:
        raise DomainError(f"unknown formula target {target!r}")
    return t


def inputs_of(target: str) -> tuple[str, ...]:
    return ("a", "b") if canonical_target(target) in LOGIC_TARGETS else ("x",)


class Toolkit:
    """Formula builders for one ``(m_max, epsilon)`` setting.

    Every method returns an :class:`Expr`; results are memoised on the
    identity of the argument nodes so repeated subformulas are built once.
    """

    def __init__(self, m_max: int = 4, epsilon=1):
        if m_max < 1:
            raise DomainError("m_max must be at least 1")
        self.m = m_max
        self.eps = Fraction(epsilon)
        self._memo: dict = {}

    def _cached(self, key, make):
        hit = self._memo.get(key)
        if hit is None:
            hit = self._memo[key] = make()
        return hit

    # logical-conditional functions

    def equal(self, a, b) -> Expr:
        return floor((1 + const(self.eps)) ** (0 - absolute(a - b)))

    def not_equal(self, a, b) -> Expr:
        return 1 - self.equal(a, b)

    def ge(self, a, b) -> Expr:
        return floor(Fraction(1, 2) + 1 / (1 + (1 + const(self.eps)) ** (b - a)))

    def minimum(self, a, b) -> Expr:
        return a * self.ge(b, a) + b * self.ge(a, b) - a * self.equal(a, b)

    # digit manipulation

    def trunc_trailing(self, x, b, n) -> Expr:
        return floor(x / const(b) ** n)

    def digit(self, x, b, n) -> Expr:
        return self._cached(
            ("D", id(x), b, n),
            lambda: self.trunc_trailing(x, b, n) - b * self.trunc_trailing(x, b, n + 1),
        )

    def length(self, x, b) -> Expr:
        return self._cached(("L", id(x), b), lambda: ceil(log(x + 1) / log(const(b))))

    def count(self, x, b, p) -> Expr:
        def make():
            L = self.length(x, b)
            return total(
                self.ge(L, k + 1) * self.equal(self.digit(x, b, k), p)
                for k in range(self.m)
            )

        return self._cached(("O", id(x), b, p), make)

    def rightmost(self, x, b, p) -> Expr:
        def make():
            L = self.length(x, b)
            everything = self.count(x, b, p)
            return total(
                self.ge(L, k)
                * self.equal(self.count(self.trunc_trailing(x, b, k), b, p), everything)
                for k in range(1, self.m + 1)
            )

        return self._cached(("I", id(x), b, p), make)

    def trunc_leading(self, x, b, n) -> Expr:
        def make():
            top = self.length(x, b) - n - 1
            return total(
                self.ge(top, k) * const(b) ** k * self.digit(x, b, k)
                for k in range(self.m - n)
            )

        return self._cached(("Tl", id(x), b, n), make)

    def cut(self, x, b, p) -> Expr:
        def make():
            index = self.rightmost(x, b, p)
            return total(
                self.ge(index, k) * const(b) ** k * self.digit(x, b, k)
                for k in range(self.m)
            )

        return self._cached(("K", id(x), b, p), make)

    # assembly

    def re_radix(self, x, b1, b2, p) -> Expr:
        def make():
            index = self.rightmost(x, b1, p)
            terms = []
            for k in range(self.m):
                d = self.digit(x, b1, k)
                shift = self.ge(k, index)
                terms.append(self.not_equal(d, p) * d * const(b2) ** (k - index - shift))
            return total(terms)

        return self._cached(("X", id(x), b1, b2, p), make)

    def sign(self, x, b, p1, p2) -> Expr:
        return self.equal(self.count(x, b, p1), 1) - self.equal(self.count(x, b, p2), 1)

    def f1(self, x) -> Expr:
        ax = absolute(x)
        return self._cached(
            ("f1", id(x)), lambda: self.minimum(self.cut(ax, 13, A), self.cut(ax, 13, B))
        )

    def f2(self, x) -> Expr:
        def make():
            first = self.f1(x)
            return first * self.equal(self.count(first, 13, C), 1)

        return self._cached(("f2", id(x)), make)

    def f3(self, x) -> Expr:
        def make():
            second = self.f2(x)
            return self.sign(second, 13, A, B) * self.re_radix(
                self.trunc_leading(second, 13, 1), 13, 10, C
            )

        return self._cached(("f3", id(x)), make)


_DEFAULTS = dict(base=13, n=0, p=C, b2=10, p1=A, p2=B, m_max=4, epsilon=1)


def _params(overrides) -> dict:
    unknown = set(overrides) - set(_DEFAULTS)
    if unknown:
        raise DomainError(f"unknown formula parameters: {sorted(unknown)}")
    return {**_DEFAULTS, **{k: v for k, v in overrides.items() if v is not None}}


def build_formula(target: str, **params) -> Expr:
    """Macro-mode formula for ``target`` valid on inputs of at most ``m_max`` digits.

    Parameters (all optional): ``base``, ``n``, ``p``, ``b2``, ``p1``,
    ``p2``, ``m_max``, ``epsilon``.  Inputs are named ``a``/``b`` for the
    logical functions and ``x`` otherwise.
    """
    t = canonical_target(target)
    q = _params(params)
    kit = Toolkit(q["m_max"], q["epsilon"])
    b = q["base"]
    if t in LOGIC_TARGETS:
        a, bb = var("a"), var("b")
        return {
            "E": kit.equal, "N": kit.not_equal, "GE": kit.ge, "M": kit.minimum,
        }[t](a, bb)
    x = var("x")
    builders: dict[str, Callable[[], Expr]] = {
        "T_trail": lambda: kit.trunc_trailing(x, b, q["n"]),
        "D": lambda: kit.digit(x, b, q["n"]),
        "L": lambda: kit.length(x, b),
        "O": lambda: kit.count(x, b, q["p"]),
        "I": lambda: kit.rightmost(x, b, q["p"]),
        "T_lead": lambda: kit.trunc_leading(x, b, q["n"]),
        "K": lambda: kit.cut(x, b, q["p"]),
        "X": lambda: kit.re_radix(x, b, q["b2"], q["p"]),
        "S": lambda: kit.sign(x, b, q["p1"], q["p2"]),
        "f1": lambda: kit.f1(x),
        "f2": lambda: kit.f2(x),
        "f3": lambda: kit.f3(x),
    }
    return builders[t]()


def reference(target: str, **params) -> Callable[..., Fraction]:
    """The directly implemented toolkit function a built formula must match.

    The returned callable takes the same keyword inputs as the formula
    (``a``/``b`` or ``x``) and returns an exact rational.
    """
    t = canonical_target(target)
    q = _params(params)
    cfg = LogicConfig(Fraction(q["epsilon"]))
    b, n, p = q["base"], q["n"], q["p"]
    table = {
        "E": lambda a, b: logic.equal(a, b, cfg),
        "N": lambda a, b: logic.not_equal(a, b, cfg),
        "GE": lambda a, b: logic.greater_equal(a, b, cfg),
        "M": lambda a, b: logic.minimum(a, b, cfg),
        "T_trail": lambda x: digit_ops.trunc_trailing(x, b, n),
        "D": lambda x: digit_ops.digit_at(x, b, n),
        "L": lambda x: digit_ops.length(x, b),
        "O": lambda x: digit_ops.count_occurrences(x, b, p),
        "I": lambda x: digit_ops.rightmost_index(x, b, p),
        "T_lead": lambda x: digit_ops.trunc_leading(x, b, n),
        "K": lambda x: digit_ops.cut_to_index(x, b, p),
        "X": lambda x: conway.re_radix(x, b, q["b2"], p),
        "S": lambda x: conway.resulting_sign(x, b, q["p1"], q["p2"]),
        "f1": conway.phase1,
        "f2": conway.phase2,
        "f3": lambda x: conway.phase3(x).value,
    }
    fn = table[t]
    return lambda **bindings: Fraction(fn(**bindings))

"""Expression DAG nodes.

Nodes are immutable and hash-consed: building the same operation on the
same children twice returns the same object, so shared subformulas are
shared in memory and counted once by :func:`stats`.  Equality is identity.
"""

from __future__ import annotations

import weakref
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import DomainError
from ..numeric import as_rational

CONST = "constant"
INPUT = "input"
ADD = "add"
SUB = "subtract"
MUL = "multiply"
DIV = "divide"
POW = "power"
ROOT = "root"
LOG = "log"
FLOOR = "floor"
CEIL = "ceiling"
MOD = "modulo"
ABS = "abs"

PERMITTED = (ADD, SUB, MUL, DIV, POW, ROOT, LOG)
MACROS = (FLOOR, CEIL, MOD, ABS)
BINARY = (ADD, SUB, MUL, DIV, POW, MOD)
UNARY = (ROOT, LOG, FLOOR, CEIL, ABS)

_ARITY = {CONST: 0, INPUT: 0, **{k: 2 for k in BINARY}, **{k: 1 for k in UNARY}}

_interned: weakref.WeakValueDictionary = weakref.WeakValueDictionary()


class Expr:
    """One node of a closed-form expression.

    ``kind`` is one of the module-level kind names; ``value`` is set for
    constants and ``name`` for input references.  Arithmetic operators build
    new nodes, coercing ints and Fractions to constants.
    """

    __slots__ = ("kind", "children", "value", "name", "__weakref__")

    def __init__(self, kind, children=(), value=None, name=None):
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "children", children)
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "name", name)

    def __setattr__(self, key, val):
        raise AttributeError("Expr nodes are immutable")

    def __repr__(self):
        if self.kind == CONST:
            return f"Expr(constant {self.value})"
        if self.kind == INPUT:
            return f"Expr(input {self.name})"
        return f"Expr({self.kind}, {len(self.children)} children)"

    def __add__(self, other):
        return node(ADD, self, other)

    def __radd__(self, other):
        return node(ADD, other, self)

    def __sub__(self, other):
        return node(SUB, self, other)

    def __rsub__(self, other):
        return node(SUB, other, self)

    def __mul__(self, other):
        return node(MUL, self, other)

    def __rmul__(self, other):
        return node(MUL, other, self)

    def __truediv__(self, other):
        return node(DIV, self, other)

    def __rtruediv__(self, other):
        return node(DIV, other, self)

    def __pow__(self, other):
        return node(POW, self, other)

    def __rpow__(self, other):
        return node(POW, other, self)

    def __neg__(self):
        return node(SUB, 0, self)


def const(q) -> Expr:
    q = as_rational(q)
    key = (CONST, q.numerator, q.denominator)
    e = _interned.get(key)
    if e is None:
        e = Expr(CONST, (), q)
        _interned[key] = e
    return e


def var(name: str) -> Expr:
    key = (INPUT, name)
    e = _interned.get(key)
    if e is None:
        e = Expr(INPUT, (), None, name)
        _interned[key] = e
    return e


def _coerce(x) -> Expr:
    return x if isinstance(x, Expr) else const(x)


def node(kind: str, *children) -> Expr:
    if kind not in _ARITY or kind in (CONST, INPUT):
        raise DomainError(f"unknown operator kind {kind!r}")
    if len(children) != _ARITY[kind]:
        raise DomainError(f"{kind} takes {_ARITY[kind]} operands, got {len(children)}")
    children = tuple(_coerce(c) for c in children)
    key = (kind,) + tuple(id(c) for c in children)
    e = _interned.get(key)
    if e is None:
        e = Expr(kind, children)
        _interned[key] = e
    return e


def floor(x) -> Expr:
    return node(FLOOR, x)


def ceil(x) -> Expr:
    return node(CEIL, x)


def mod(x, y) -> Expr:
    return node(MOD, x, y)


def absolute(x) -> Expr:
    return node(ABS, x)


def root(x) -> Expr:
    """Principal square root."""
    return node(ROOT, x)


def log(x) -> Expr:
    """Principal logarithm."""
    return node(LOG, x)


def total(terms) -> Expr:
    """Left fold of ``+``; the empty sum is the constant 0."""
    out = None
    for t in terms:
        out = t if out is None else out + t
    return const(0) if out is None else _coerce(out)


def postorder(e: Expr) -> list[Expr]:
    """Distinct nodes reachable from ``e``, children before parents."""
    seen: set[int] = set()
    order: list[Expr] = []
    stack = [(e, False)]
    while stack:
        cur, expanded = stack.pop()
        if expanded:
            order.append(cur)
            continue
        if id(cur) in seen:
            continue
        seen.add(id(cur))
        stack.append((cur, True))
        for child in reversed(cur.children):
            if id(child) not in seen:
                stack.append((child, False))
    return order


def is_macro_free(e: Expr) -> bool:
    return all(n.kind not in MACROS for n in postorder(e))


@dataclass(frozen=True)
class ExprStats:
    total: int
    by_kind: dict[str, int] = field(default_factory=dict)
    depth: int = 0


def stats(e: Expr) -> ExprStats:
    depth: dict[int, int] = {}
    counts: Counter = Counter()
    for n in postorder(e):
        counts[n.kind] += 1
        depth[id(n)] = 1 + max((depth[id(c)] for c in n.children), default=0)
    return ExprStats(sum(counts.values()), dict(sorted(counts.items())), depth[id(e)])

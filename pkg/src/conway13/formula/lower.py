"""Rewrite floor/ceiling/modulo/abs into the seven permitted operations.

    x mod y = y / (2*Log(-1)) * Log((-1) ** (2*x/y))
    floor x = x - (x mod 1)
    ceil x  = x + ((-x) mod 1)
    |x|     = root(x ** 2)

``Log(-1) = i*pi`` and ``(-1) ** w = exp(i*pi*w)`` under principal powers,
so the first line is ``y/(2*pi*i) * Log(exp(2*pi*i*x/y))`` written with
rational constants only.  It equals floored modulo when the imaginary part
of Log is taken in ``[0, 2*pi)``.
"""

from __future__ import annotations

from .expr import ABS, CEIL, CONST, FLOOR, INPUT, MOD, Expr, log, node, postorder, root


def lowered_mod(x: Expr, y: Expr) -> Expr:
    return y / (2 * log(-1)) * log((-1) ** (2 * x / y))


def lower(e: Expr) -> Expr:
    """Macro-free equivalent of ``e``; a macro-free input is returned as is."""
    out: dict[int, Expr] = {}
    for n in postorder(e):
        if n.kind in (CONST, INPUT):
            out[id(n)] = n
            continue
        kids = [out[id(c)] for c in n.children]
        if n.kind == MOD:
            out[id(n)] = lowered_mod(*kids)
        elif n.kind == FLOOR:
            out[id(n)] = kids[0] - lowered_mod(kids[0], 1)
        elif n.kind == CEIL:
            out[id(n)] = kids[0] + lowered_mod(-kids[0], 1)
        elif n.kind == ABS:
            out[id(n)] = root(kids[0] ** 2)
        else:
            out[id(n)] = node(n.kind, *kids)
    return out[id(e)]

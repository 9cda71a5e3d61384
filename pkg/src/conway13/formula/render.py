"""ASCII and LaTeX rendering of expression DAGs.

Every composite node is fully parenthesised (or uses a self-delimiting
template) so the text is unambiguous.  Non-trivial nodes used more than once
are emitted once as ``let`` bindings, which keeps the output linear in the
DAG size instead of the tree size.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction

from ..errors import DomainError
from .expr import (
    ABS, ADD, CEIL, CONST, DIV, FLOOR, INPUT, LOG, MOD, MUL, POW, ROOT, SUB,
    Expr, postorder,
)

FORMATS = ("ascii", "latex")

_ASCII = {
    ADD: "({} + {})",
    SUB: "({} - {})",
    MUL: "({} * {})",
    DIV: "({} / {})",
    POW: "({} ^ {})",
    MOD: "({} mod {})",
    ROOT: "sqrt({})",
    LOG: "Log({})",
    FLOOR: "floor({})",
    CEIL: "ceil({})",
    ABS: "|{}|",
}

_LATEX = {
    ADD: r"\left({} + {}\right)",
    SUB: r"\left({} - {}\right)",
    MUL: r"\left({} \cdot {}\right)",
    DIV: r"\frac{{{}}}{{{}}}",
    POW: r"{{{}}}^{{{}}}",
    MOD: r"\left({} \bmod {}\right)",
    ROOT: r"\sqrt{{{}}}",
    LOG: r"\mathrm{{Log}}\left({}\right)",
    FLOOR: r"\lfloor {} \rfloor",
    CEIL: r"\lceil {} \rceil",
    ABS: r"\left|{}\right|",
}


def _constant(q: Fraction, fmt: str) -> str:
    if fmt == "ascii":
        text = str(q)
        return text if q >= 0 and q.denominator == 1 else f"({text})"
    if q.denominator == 1:
        return str(q) if q >= 0 else rf"\left({q}\right)"
    body = rf"\frac{{{abs(q.numerator)}}}{{{q.denominator}}}"
    return body if q > 0 else rf"\left(-{body}\right)"


def _needs_wrap(base: Expr) -> bool:
    # bases whose template does not already close with a delimiter
    return base.kind in (DIV, POW, ROOT, LOG)


def render(e: Expr, format: str = "ascii") -> str:
    if format not in FORMATS:
        raise DomainError(f"unknown render format {format!r}")
    order = postorder(e)
    uses: Counter = Counter()
    for n in order:
        for c in n.children:
            uses[id(c)] += 1
    templates = _ASCII if format == "ascii" else _LATEX
    text: dict[int, str] = {}
    bindings: list[str] = []
    for n in order:
        if n.kind == CONST:
            text[id(n)] = _constant(n.value, format)
            continue
        if n.kind == INPUT:
            text[id(n)] = n.name
            continue
        args = [text[id(c)] for c in n.children]
        if format == "latex" and n.kind == POW and _needs_wrap(n.children[0]):
            args[0] = rf"\left({args[0]}\right)"
        body = templates[n.kind].format(*args)
        if uses[id(n)] > 1 and n is not e:
            name = f"t{len(bindings) + 1}" if format == "ascii" else f"t_{{{len(bindings) + 1}}}"
            bindings.append(
                f"let {name} = {body}" if format == "ascii" else f"{name} := {body}"
            )
            text[id(n)] = name
        else:
            text[id(n)] = body
    root = text[id(e)]
    if not bindings:
        return root
    if format == "ascii":
        return "\n".join(bindings + [f"in {root}"])
    return " \\\\\n".join(bindings + [root])

"""Command-line front end.

Subcommands: ``eval`` and ``oracle`` (value of one literal), ``diff``
(differential sweep), ``render`` (formula text) and ``plot`` (CSV of exact
values over a range of Z[1/13] points).

Exit codes: 0 success, 1 differential mismatch, 2 usage or parse error,
3 internal invariant breach, 4 I/O failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys

from . import conway, oracle, sweep
from .digits import parse_signed_literal, to_natural
from .errors import DomainError, ParseError
from .formula import build_formula, lower, render, stats
from .values import DecimalValue, Z13Point

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_INTERNAL, EXIT_IO = 0, 1, 2, 3, 4

MAX_UNFORCED_DIGITS = 7


class _Usage(Exception):
    pass


def _point(literal: str, base: int, scale: int) -> Z13Point:
    sign, digits = parse_signed_literal(literal, base)
    return Z13Point.make(sign * to_natural(digits), scale)


def _show(v: DecimalValue, fmt: str) -> str:
    if fmt == "rational":
        return str(v.value)
    if fmt == "digits":
        num, den = v.scaled()
        whole, frac = divmod(abs(num), den)
        frac_text = str(frac).rjust(v.places, "0") if v.places else ""
        return f"sign={v.sign} int={whole} frac={frac_text}"
    return str(v)


def cmd_eval(args, out) -> int:
    point = _point(args.literal, args.base, args.scale)
    if args.command == "oracle":
        value = oracle.oracle_f(point.y)
    else:
        value = conway.eval_z13(point)
    print(_show(value, args.format), file=out)
    return EXIT_OK


def cmd_diff(args, out) -> int:
    if args.digits is None and args.samples is None:
        raise _Usage("diff needs --digits N or --samples K")
    report = sweep.DiffReport()
    if args.digits is not None:
        if args.digits > MAX_UNFORCED_DIGITS and not args.force:
            raise _Usage(
                f"--digits {args.digits} exceeds {MAX_UNFORCED_DIGITS}; pass --force to run it"
            )
        report = report.merge(sweep.exhaustive(args.digits, args.jobs))
    if args.samples is not None:
        report = report.merge(
            sweep.sampled(args.samples, args.seed, args.profile, args.jobs)
        )
    print(f"{report.cases} cases, {report.mismatches} mismatches", file=out)
    if not report.ok:
        x = report.first_counterexample
        print(
            f"first counterexample: {x} (base 13: {conway_literal(x)}): "
            f"construction {conway.phase3(x)}, oracle {oracle.oracle_f(x)}",
            file=out,
        )
        return EXIT_MISMATCH
    return EXIT_OK


def conway_literal(x: int) -> str:
    from .digits import format_literal, from_natural

    return format_literal(from_natural(abs(x), 13))


def cmd_render(args, out) -> int:
    params = dict(m_max=args.mmax, base=args.base, n=args.n, p=args.p)
    e = build_formula(args.target, **params)
    if args.mode == "expanded":
        e = lower(e)
    print(render(e, args.format), file=out)
    if args.stats:
        s = stats(e)
        kinds = ", ".join(f"{k}={v}" for k, v in s.by_kind.items())
        print(f"nodes: {s.total}; depth: {s.depth}; {kinds}", file=out)
    return EXIT_OK


def _range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            raise ValueError
        return int(lo), int(hi)
    except ValueError:
        raise _Usage(f"--range must look like a..b, got {text!r}") from None


def plot_rows(scale: int, lo: int, hi: int):
    for num in range(lo, hi + 1):
        f_num, f_den = conway.eval_z13(Z13Point.make(num, scale)).scaled()
        yield num, scale, f_num, f_den


def cmd_plot(args, out) -> int:
    lo, hi = _range(args.range)
    if lo > hi:
        raise _Usage(f"empty range {args.range}")
    if args.scale < 0:
        raise _Usage("--scale must be non-negative")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["x_num", "x_exp", "f_num", "f_den"])
    writer.writerows(plot_rows(args.scale, lo, hi))
    if args.out == "-":
        out.write(buf.getvalue())
        return EXIT_OK
    try:
        with open(args.out, "w", encoding="ascii", newline="") as fh:
            fh.write(buf.getvalue())
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conway13", description="Exact Conway base-13 function by arithmetic."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("eval", "evaluate the closed-form construction"),
        ("oracle", "evaluate by direct digit surgery"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("literal", help="e.g. B17C11, -A3C14 (use -- before a leading '-'), 137_10")
        p.add_argument("--base", type=int, default=13)
        p.add_argument("--format", choices=("rational", "decimal", "digits"), default="decimal")
        p.add_argument("--scale", type=int, default=0, help="divide the literal by 13**scale")
        p.set_defaults(handler=cmd_eval)

    p = sub.add_parser("diff", help="compare construction and oracle")
    p.add_argument("--digits", type=int, help="exhaustive over all inputs of at most N base-13 digits")
    p.add_argument("--samples", type=int, help="number of generated inputs")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--profile", choices=("all",) + oracle.PROFILES, default="all")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--force", action="store_true")
    p.set_defaults(handler=cmd_diff)

    p = sub.add_parser("render", help="print a toolkit function as a formula")
    p.add_argument("target")
    p.add_argument("--mode", choices=("macro", "expanded"), default="macro")
    p.add_argument("--format", choices=("ascii", "latex"), default="ascii")
    p.add_argument("--mmax", type=int, default=4)
    p.add_argument("--base", type=int, default=13)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--p", type=int, default=12)
    p.add_argument("--stats", action="store_true")
    p.set_defaults(handler=cmd_render)

    p = sub.add_parser("plot", help="write x_num,x_exp,f_num,f_den rows as CSV")
    p.add_argument("--scale", type=int, default=0)
    p.add_argument("--range", required=True, help="numerator range a..b (inclusive)")
    p.add_argument("--out", default="-")
    p.set_defaults(handler=cmd_plot)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args, out)
    except (ParseError, _Usage, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())

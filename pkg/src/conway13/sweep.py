"""Differential sweeps: arithmetic construction vs digit-surgery oracle.

Work is split into contiguous chunks; each chunk returns its own counters
and the merge is a plain sum, so results do not depend on scheduling.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import conway, oracle
from .errors import DomainError


@dataclass
class DiffReport:
    cases: int = 0
    mismatches: int = 0
    first_counterexample: int | None = None

    def merge(self, other: DiffReport) -> DiffReport:
        first = self.first_counterexample
        if first is None:
            first = other.first_counterexample
        return DiffReport(
            self.cases + other.cases, self.mismatches + other.mismatches, first
        )

    @property
    def ok(self) -> bool:
        return self.mismatches == 0


def check_values(values, fail_fast: bool = False) -> DiffReport:
    report = DiffReport()
    for x in values:
        report.cases += 1
        if conway.phase3(x) != oracle.oracle_f(x):
            report.mismatches += 1
            if report.first_counterexample is None:
                report.first_counterexample = x
            if fail_fast:
                break
    return report


def _range_chunk(args):
    lo, hi, fail_fast = args
    return check_values(range(lo, hi), fail_fast)


def _sample_chunk(args):
    seed, profile, lo, hi, min_digits, max_digits = args
    return check_values(sample_inputs(seed, profile, lo, hi, min_digits, max_digits))


def sample_inputs(seed, profile, lo, hi, min_digits=7, max_digits=40):
    """Inputs ``lo..hi-1`` of the sample stream for ``(seed, profile)``.

    ``profile="all"`` cycles through every generator profile.
    """
    for i in range(lo, hi):
        p = oracle.PROFILES[i % len(oracle.PROFILES)] if profile == "all" else profile
        yield oracle.gen_structured((seed << 32) + i, p, min_digits, max_digits)


def _split(n: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, n)) if n else 1
    step, extra = divmod(n, parts)
    out, lo = [], 0
    for i in range(parts):
        hi = lo + step + (i < extra)
        out.append((lo, hi))
        lo = hi
    return out


def _run(fn, chunks, jobs):
    if jobs <= 1 or len(chunks) == 1:
        results = map(fn, chunks)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(fn, chunks))
    report = DiffReport()
    for r in results:
        report = report.merge(r)
    return report


def exhaustive(max_digits: int, jobs: int = 1, fail_fast: bool = False) -> DiffReport:
    """Every integer with at most ``max_digits`` base-13 digits (0..13**N - 1).

    With ``fail_fast`` each chunk stops at its first mismatch, so ``cases``
    then undercounts.
    """
    chunks = [(lo, hi, fail_fast) for lo, hi in _split(13**max_digits, jobs)]
    return _run(_range_chunk, chunks, jobs)


def sampled(
    samples: int, seed: int = 0, profile: str = "all", jobs: int = 1,
    min_digits: int = 7, max_digits: int = 40,
) -> DiffReport:
    if profile != "all" and profile not in oracle.PROFILES:
        raise DomainError(f"unknown generator profile {profile!r}")
    chunks = [
        (seed, profile, lo, hi, min_digits, max_digits)
        for lo, hi in _split(samples, jobs)
    ]
    return _run(_sample_chunk, chunks, jobs)

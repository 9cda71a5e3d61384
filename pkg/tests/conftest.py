import pytest

from conway13.digits import format_literal, from_natural, parse_literal, to_natural

_criteria = []


def tri(literal: str) -> int:
    """Value of a base-13 literal."""
    return to_natural(parse_literal(literal, 13))


def digit_text(x: int, b: int) -> str:
    """Expansion of ``x`` in base ``b`` as text (base <= 13)."""
    return format_literal(from_natural(x, b))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        number, title = marker.args
        _criteria.append((number, title, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number, title, outcome in sorted(_criteria):
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  criterion {number}: {title}")

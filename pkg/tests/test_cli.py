import io

import pytest

from conway13 import cli, conway
from conway13.logic import greater_equal


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out)
    return code, out.getvalue()


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["eval", "B17C11"], "-17.11\n"),
        (["eval", "137"], "0\n"),
        (["eval", "A3C14", "--format", "rational"], "157/50\n"),
        (["eval", "B17C11", "--format", "rational"], "-1711/100\n"),
        (["eval", "A3C14", "--format", "digits"], "sign=1 int=3 frac=14\n"),
        (["eval", "--", "-B17C11"], "-17.11\n"),
        (["eval", "B17C110000", "--scale", "4"], "-17.11\n"),
        (["eval", "1711_10"], "0\n"),
        (["oracle", "B17C11"], "-17.11\n"),
        (["oracle", "A0C", "--format", "rational"], "0\n"),
    ],
)
def test_eval(argv, expected):
    assert run(*argv) == (0, expected)


def test_eval_parse_error(capsys):
    code, _ = run("eval", "1Z3")
    assert code == 2
    assert "position 1" in capsys.readouterr().err


def test_eval_and_oracle_agree():
    for lit in ("A3C14", "B0C", "9B1A2C33", "CAC", "A1C1C"):
        assert run("eval", lit) == run("oracle", lit)


def test_diff_exhaustive():
    code, text = run("diff", "--digits", "4")
    assert code == 0
    assert text.startswith("28561 cases, 0 mismatches")


def test_diff_samples():
    code, text = run("diff", "--samples", "1000", "--seed", "7", "--profile", "case1-shaped")
    assert code == 0 and "0 mismatches" in text


def test_diff_parallel_matches_serial():
    assert run("diff", "--digits", "3", "--jobs", "2") == run("diff", "--digits", "3")


def test_diff_guard():
    assert run("diff", "--digits", "8")[0] == 2
    assert run("diff")[0] == 2


def test_diff_detects_mutation(monkeypatch):
    monkeypatch.setattr(conway, "_radix_shift", lambda k, index: greater_equal(index, k))
    code, text = run("diff", "--digits", "4")
    assert code == 1
    assert "first counterexample" in text


def test_render():
    code, text = run("render", "E", "--mode", "macro", "--format", "latex")
    assert code == 0 and r"\lfloor" in text
    code, text = run("render", "E", "--mode", "expanded", "--format", "latex")
    assert code == 0 and r"\mathrm{Log}" in text
    code, text = run("render", "f3", "--mmax", "2", "--stats")
    assert code == 0 and "nodes: " in text
    assert run("render", "nope")[0] == 2


def test_plot_single_row():
    assert run("plot", "--scale", "0", "--range", "0..0") == (0, "x_num,x_exp,f_num,f_den\n0,0,0,1\n")


def test_plot_example_row():
    x = int("B17C11", 13)
    code, text = run("plot", "--scale", "2", "--range", f"{x}..{x}")
    assert code == 0
    assert text.splitlines()[1] == f"{x},2,-1711,100"


def test_plot_errors(tmp_path):
    assert run("plot", "--range", "5..1")[0] == 2
    assert run("plot", "--range", "five")[0] == 2
    assert run("plot", "--range", "0..3", "--out", str(tmp_path / "no" / "such" / "f.csv"))[0] == 4


def test_plot_file(tmp_path):
    path = tmp_path / "rows.csv"
    assert run("plot", "--range=-3..3", "--out", str(path))[0] == 0
    data = path.read_bytes()
    assert data.startswith(b"x_num,x_exp,f_num,f_den\n-3,0,0,1\n")
    assert data.count(b"\n") == 8 and b" " not in data


def test_internal_error_exit_code(monkeypatch):
    def broken(_):
        raise RuntimeError("invariant breach")

    monkeypatch.setattr(conway, "phase3", broken)
    assert run("eval", "A1C")[0] == 3


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "conway13", "eval", "B17C11"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout == "-17.11\n"

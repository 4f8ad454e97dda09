"""Command-line interface: problem-file parsing, output formats, grids,
exit codes, and byte-identical bench output."""

import csv
import io
import json

import pytest

from resum import cli
from resum.benchmarks import get_problem


def _problem_text(pid="anomalous-dimension", extra=""):
    p = get_problem(pid)
    lines = ["coefficient = %s" % c for c in p.coefficients]
    lines.append("beta = %r" % p.target.beta)
    return "\n".join(lines) + ("\n" + extra if extra else "") + "\n"


@pytest.fixture
def problem_file(tmp_path):
    path = tmp_path / "problem.txt"
    path.write_text(_problem_text(
        extra="kind = frac-integral\ngrid = -3:0:301"))
    return str(path)


# ------------------------------------------------------------ parsing

def test_parse_full_file():
    pf = cli.ProblemFile.parse(
        "# a comment\n"
        "coefficient = 1\n"
        "coefficient = -0.5  # inline comment\n"
        "coefficient = 0.25\n"
        "coefficient = -0.125\n"
        "beta = 0.5\n"
        "k = 2\n"
        "scale = 2.0\n"
        "kind = borel-leroy\n"
        "criterion = lasso1\n"
        "grid = -2:2:51\n")
    assert pf.coefficients == ["1", "-0.5", "0.25"]  # trimmed by k
    assert pf.beta == 0.5 and pf.scale == 2.0
    assert pf.kind == "borel-leroy" and pf.criterion == "lasso1"
    assert (pf.grid.lo, pf.grid.hi, pf.grid.points) == (-2.0, 2.0, 51)
    assert pf.series.coeffs == (1.0, -0.5, 0.25)


@pytest.mark.parametrize("text,fragment", [
    ("coefficient = 1\ncoefficient = 2\n", "beta"),
    ("beta = 0.5\n", "no coefficient"),
    ("coefficient = 1\nbogus = 3\nbeta = 1\n", "line 2"),
    ("coefficient = x\nbeta = 1\n", "line 1"),
    ("coefficient = 1\ncoefficient = 2\nbeta = 1\nk = 5\n", "k override"),
    ("coefficient = 1\nbeta = 1\ngrid = 1:2\n", "lo:hi:points"),
    ("coefficient = 1\nbeta = 1\nkind = bogus\n", "unknown kind"),
    ("just some text\n", "key = value"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(cli.ProblemFileError) as err:
        cli.ProblemFile.parse(text)
    assert fragment in str(err.value)


# ------------------------------------------------------------ sum

def test_sum_formats_agree(problem_file, capsys):
    rc = cli.main(["sum", problem_file, "--format", "json"])
    assert rc == cli.EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert len(doc) == 1 and doc[0]["kind"] == "frac-integral"
    sols = doc[0]["solutions"]
    assert sols, "expected solutions on the narrowed grid"
    for rec in sols + doc[0]["selections"]:
        # six-significant-digit strings next to the full-precision raw
        if rec["amplitude"]:
            assert rec["amplitude"] == "%.6g" % rec["raw"]["amplitude"]
            assert rec["u"] == "%.6g" % rec["raw"]["u"]

    rc = cli.main(["sum", problem_file, "--format", "csv"])
    assert rc == cli.EXIT_OK
    rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))
    assert rows[0] == ["kind", "record", "name", "u", "amplitude", "status"]
    csv_sol = [r for r in rows[1:] if r[1] == "solution"]
    assert [(r[3], r[4]) for r in csv_sol] == [
        (s["u"], s["amplitude"]) for s in sols]

    rc = cli.main(["sum", problem_file])
    assert rc == cli.EXIT_OK
    text = capsys.readouterr().out
    assert "kind: frac-integral" in text
    for s in sols:
        assert "u=%s" % s["u"] in text


def test_sum_criterion_flag_overrides_file(problem_file, capsys):
    rc = cli.main(["sum", problem_file, "--criterion", "lasso1",
                   "--format", "json"])
    assert rc == cli.EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert [r["criterion"] for r in doc[0]["selections"]] == ["lasso1"]


def test_sum_order_too_low(tmp_path, capsys):
    path = tmp_path / "p.txt"
    path.write_text("coefficient = 1\ncoefficient = 2\nbeta = 0.5\n")
    assert cli.main(["sum", str(path)]) == cli.EXIT_UNDEFINED
    assert "order too low" in capsys.readouterr().err


def test_sum_input_errors(tmp_path, capsys):
    path = tmp_path / "p.txt"
    path.write_text(_problem_text(extra="mystery = 1"))
    assert cli.main(["sum", str(path)]) == cli.EXIT_INPUT
    assert "unknown key" in capsys.readouterr().err
    assert cli.main(["sum", str(tmp_path / "missing.txt")]) == cli.EXIT_INPUT
    capsys.readouterr()
    path.write_text(_problem_text())
    assert cli.main(["sum", str(path), "--grid", "5:1:10"]) == cli.EXIT_INPUT
    assert "lo < hi" in capsys.readouterr().err


# ------------------------------------------------------------ scan

def test_scan_grid_flag(problem_file, capsys):
    rc = cli.main(["scan", problem_file, "--kind", "frac-integral",
                   "--grid=-1:0:3"])
    assert rc == cli.EXIT_OK
    rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))
    assert rows[0] == ["kind", "u", "B_k", "B_k1", "F"]
    assert len(rows) == 4
    assert [r[1] for r in rows[1:]] == ["-1", "-0.5", "0"]


def test_scan_env_grid(tmp_path, capsys, monkeypatch):
    path = tmp_path / "p.txt"
    path.write_text(_problem_text(extra="kind = frac-integral"))
    monkeypatch.setenv("RESUM_GRID", "-1:0:2")
    rc = cli.main(["scan", str(path)])
    assert rc == cli.EXIT_OK
    rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))
    assert len(rows) == 3  # header + two env-grid points
    # an explicit flag wins over the environment
    rc = cli.main(["scan", str(path), "--grid=-1:0:5"])
    assert rc == cli.EXIT_OK
    assert len(list(csv.reader(io.StringIO(capsys.readouterr().out)))) == 6


# ------------------------------------------------------------ bench

def test_bench_table_idempotent(tmp_path, capsys):
    out1 = tmp_path / "a"
    out2 = tmp_path / "b"
    for out in (out1, out2):
        rc = cli.main(["bench", "--table", "3", "--out", str(out)])
        assert rc == cli.EXIT_OK
        assert "failures: 0" in capsys.readouterr().out
    for name in ("table_03.csv", "summary.csv"):
        b1 = (out1 / name).read_bytes()
        assert b1 == (out2 / name).read_bytes()
        assert b1  # non-empty
    rows = list(csv.reader(io.StringIO(
        (out1 / "summary.csv").read_text())))
    verdicts = {r[3]: r[8] for r in rows[1:]}
    assert verdicts["genlass1"] == "ok"
    assert verdicts["lasso2"] == "known deviation"


def test_bench_unknown_table(capsys):
    assert cli.main(["bench", "--table", "99"]) == cli.EXIT_INPUT
    assert "no benchmark table" in capsys.readouterr().err


def test_bench_unreproducible_table(tmp_path, capsys):
    rc = cli.main(["bench", "--table", "1", "--out", str(tmp_path)])
    assert rc == cli.EXIT_OK  # informational, never gated
    capsys.readouterr()
    rows = list(csv.reader(io.StringIO(
        (tmp_path / "summary.csv").read_text())))
    assert rows[1:]
    for r in rows[1:]:
        assert r[8] == "not reproducible: coefficients unavailable"


def test_entry_point_installed():
    import shutil
    exe = shutil.which("resum")
    assert exe, "console script should be installed"

"""Batch command-line front end.

Subcommands:
  sum   -- sum a user-supplied truncated series from a problem file
  bench -- reproduce the stored benchmark tables and compare cells
  scan  -- export amplitude-vs-u curves for plotting

Exit codes: 0 ok, 1 tolerance failure, 2 input error, 3 no defined result.
"""

import argparse
import csv
import io
import json
import math
import os
import sys

from .errors import ResumError, UndefinedError
from .numerics import ScanGrid, derivative
from .optimizer import (
    AmplitudeCurve,
    ridge_minimize,
    solution_pool,
    window_grid,
)
from .selector import Criterion, select_solution
from .series import TruncatedSeries
from .transforms import TransformKind, borel_point
from . import benchmarks

EXIT_OK = 0
EXIT_TOLERANCE = 1
EXIT_INPUT = 2
EXIT_UNDEFINED = 3

_KINDS = {k.value: k for k in TransformKind}
_CRITERIA = ("lasso1", "lasso2", "genlass1", "genlass2", "ridge")


def fmt6(x):
    """Fixed 6-significant-digit rendering; empty for undefined."""
    if x is None:
        return ""
    return "%.6g" % float(x)


class ProblemFileError(ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line = line


class ProblemFile:
    """Flat key/value problem description.

    One `key = value` pair per line; '#' starts a comment.  Keys:
    coefficient (repeated, one decimal string each), beta (required),
    k (optional order override), scale (optional overall factor),
    kind, criterion, grid (optional run defaults).
    """

    def __init__(self, coefficients, beta, k=None, scale=1.0, kind=None,
                 criterion=None, grid=None):
        self.coefficients = list(coefficients)
        self.beta = beta
        self.k = k
        self.scale = scale
        self.kind = kind
        self.criterion = criterion
        self.grid = grid

    @classmethod
    def parse(cls, text):
        coeffs = []
        fields = {}
        for ln, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ProblemFileError("expected 'key = value'", ln)
            key, _, value = line.partition("=")
            key = key.strip().lower()
            value = value.strip()
            if not value:
                raise ProblemFileError("empty value for %r" % key, ln)
            if key == "coefficient":
                try:
                    float(value)
                except ValueError:
                    raise ProblemFileError(
                        "coefficient is not a decimal: %r" % value, ln)
                coeffs.append(value)
            elif key in ("beta", "scale"):
                try:
                    fields[key] = float(value)
                except ValueError:
                    raise ProblemFileError(
                        "%s is not a decimal: %r" % (key, value), ln)
            elif key == "k":
                try:
                    fields[key] = int(value)
                except ValueError:
                    raise ProblemFileError("k is not an integer: %r" % value,
                                           ln)
            elif key == "kind":
                if value not in _KINDS and value != "all":
                    raise ProblemFileError("unknown kind %r" % value, ln)
                fields[key] = value
            elif key == "criterion":
                if value not in _CRITERIA and value != "all":
                    raise ProblemFileError("unknown criterion %r" % value, ln)
                fields[key] = value
            elif key == "grid":
                fields[key] = _parse_grid(value, ln)
            else:
                raise ProblemFileError("unknown key %r" % key, ln)
        if "beta" not in fields:
            raise ProblemFileError("missing required key 'beta'")
        if not coeffs:
            raise ProblemFileError("no coefficient lines")
        k = fields.get("k")
        if k is not None:
            if k < 1 or k > len(coeffs) - 1:
                raise ProblemFileError(
                    "k override must be in 1..%d" % (len(coeffs) - 1))
            coeffs = coeffs[: k + 1]
        return cls(coeffs, fields["beta"], k=k,
                   scale=fields.get("scale", 1.0), kind=fields.get("kind"),
                   criterion=fields.get("criterion"),
                   grid=fields.get("grid"))

    @property
    def series(self):
        return TruncatedSeries([float(c) for c in self.coefficients])


def _parse_grid(text, line=None):
    parts = text.split(":")
    if len(parts) != 3:
        raise ProblemFileError("grid must be lo:hi:points", line)
    try:
        lo, hi, points = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise ProblemFileError("grid must be lo:hi:points", line)
    if not (lo < hi and points >= 2):
        raise ProblemFileError("grid needs lo < hi and points >= 2", line)
    return ScanGrid(lo, hi, points)


def _resolve_kinds(flag, file_default=None):
    name = flag or file_default or "all"
    if name == "all":
        return list(benchmarks.KIND_ROWS)
    return [_KINDS[name]]


def _resolve_criteria(flag, file_default=None):
    name = flag or file_default or "all"
    if name == "all":
        return list(benchmarks.CRITERION_COLUMNS)
    return [name]


def _resolve_grid(flag, file_default=None):
    """--grid flag, then problem-file grid, then RESUM_GRID, then None
    (per-kind default windows)."""
    if flag:
        return _parse_grid(flag)
    if file_default is not None:
        return file_default
    env = os.environ.get("RESUM_GRID")
    if env:
        return _parse_grid(env)
    return None


def _kind_grid(grid, kind):
    return grid if grid is not None else window_grid(kind)


# ---------------------------------------------------------------- sum

def _sum_report(problem, kinds, criteria, grid):
    """Per-kind solutions, criterion selections, and ridge result."""
    s = problem.series
    beta = problem.beta
    k = s.order
    scale = problem.scale
    report = []
    for kind in kinds:
        gk = _kind_grid(grid, kind)
        try:
            pool = solution_pool(s, kind, beta, k, grid=gk, scale=scale)
        except ResumError:
            pool = []
        selections = []
        for crit in criteria:
            if crit == "ridge":
                try:
                    sol = ridge_minimize(s, kind, beta, k - 1, grid=gk,
                                         scale=scale)
                    selections.append((crit, sol.u, sol.amplitude,
                                       "exact-root"))
                except ResumError:
                    selections.append((crit, None, None, "undefined"))
                continue
            if not pool:
                selections.append((crit, None, None, "undefined"))
                continue
            try:
                res = select_solution(s, kind, beta, k, pool,
                                      Criterion(crit), scale=scale)
                sol = res.solution
                selections.append((crit, sol.u, sol.amplitude, sol.status))
            except ResumError:
                selections.append((crit, None, None, "undefined"))
        report.append((kind, pool, selections))
    return report


def _render_sum_text(report, out):
    for kind, pool, selections in report:
        out.write("kind: %s\n" % kind.value)
        if pool:
            out.write("  solutions:\n")
            for sol in pool:
                out.write("    u=%s  B=%s  %s  %s\n"
                          % (fmt6(sol.u), fmt6(sol.amplitude),
                             sol.condition.value, sol.status))
        else:
            out.write("  solutions: none\n")
        out.write("  selections:\n")
        for crit, u, amp, status in selections:
            if amp is None:
                out.write("    %s: undefined\n" % crit)
            else:
                out.write("    %s: B=%s (u=%s)\n" % (crit, fmt6(amp), fmt6(u)))


def _render_sum_json(report, out):
    doc = []
    for kind, pool, selections in report:
        doc.append({
            "kind": kind.value,
            "solutions": [
                {
                    "u": fmt6(sol.u),
                    "amplitude": fmt6(sol.amplitude),
                    "condition": sol.condition.value,
                    "status": sol.status,
                    "raw": {"u": sol.u, "amplitude": sol.amplitude},
                }
                for sol in pool
            ],
            "selections": [
                {
                    "criterion": crit,
                    "u": fmt6(u),
                    "amplitude": fmt6(amp),
                    "status": status,
                    "raw": {"u": u, "amplitude": amp},
                }
                for crit, u, amp, status in selections
            ],
        })
    json.dump(doc, out, indent=2, sort_keys=True)
    out.write("\n")


def _render_sum_csv(report, out):
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["kind", "record", "name", "u", "amplitude", "status"])
    for kind, pool, selections in report:
        for sol in pool:
            w.writerow([kind.value, "solution", sol.condition.value,
                        fmt6(sol.u), fmt6(sol.amplitude), sol.status])
        for crit, u, amp, status in selections:
            w.writerow([kind.value, "selection", crit, fmt6(u), fmt6(amp),
                        status])


def cmd_sum(args, out=None):
    out = out or sys.stdout
    try:
        with open(args.path, "r", encoding="utf-8") as fh:
            problem = ProblemFile.parse(fh.read())
    except OSError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_INPUT
    except ProblemFileError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_INPUT
    if problem.series.order < 2:
        sys.stderr.write("error: order too low (need at least 3 "
                         "coefficients)\n")
        return EXIT_UNDEFINED
    try:
        grid = _resolve_grid(args.grid, problem.grid)
    except ProblemFileError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_INPUT
    kinds = _resolve_kinds(args.kind, problem.kind)
    criteria = _resolve_criteria(args.criterion, problem.criterion)
    report = _sum_report(problem, kinds, criteria, grid)
    if args.format == "json":
        _render_sum_json(report, out)
    elif args.format == "csv":
        _render_sum_csv(report, out)
    else:
        _render_sum_text(report, out)
    defined = any(
        pool or any(amp is not None for _, _, amp, _ in sels)
        for _, pool, sels in report
    )
    return EXIT_OK if defined else EXIT_UNDEFINED


# ---------------------------------------------------------------- bench

def _bench_table_rows(table, kinds, criteria, grid):
    problem = benchmarks.problem_for_table(table)
    ref_kinds = [k for k in kinds if k in benchmarks.REFERENCE_CELLS[table]]
    return problem, benchmarks.run_table(problem, kinds=ref_kinds,
                                         criteria=criteria, grid=grid)


def _write_exact(path, content):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(content)


def cmd_bench(args, out=None):
    out = out or sys.stdout
    try:
        grid = _resolve_grid(args.grid)
    except ProblemFileError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_INPUT
    kinds = _resolve_kinds(args.kind)
    criteria = _resolve_criteria(args.criterion)
    if args.table is not None:
        if args.table not in benchmarks.TABLES:
            sys.stderr.write("error: no benchmark table %d\n" % args.table)
            return EXIT_INPUT
        tables = [args.table]
    else:
        tables = sorted(benchmarks.TABLES)
    outdir = args.out or "."
    os.makedirs(outdir, exist_ok=True)

    failures = []
    summary_rows = []
    for table in tables:
        problem, rows = _bench_table_rows(table, kinds, criteria, grid)
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["kind", "criterion", "amplitude", "u", "status",
                    "reference"])
        unrep = benchmarks.UNREPRODUCIBLE_TABLES.get(table)
        for r in rows:
            ref = benchmarks.REFERENCE_CELLS[table][r.kind].get(r.criterion)
            w.writerow([r.kind.value, r.criterion, fmt6(r.amplitude),
                        fmt6(r.u), r.status, fmt6(ref)])
            abs_dev = rel_dev = None
            if ref is not None and r.amplitude is not None:
                abs_dev = abs(r.amplitude - ref)
                rel_dev = abs_dev / abs(ref)
            key = (table, r.kind, r.criterion)
            gate = benchmarks.GATED_CELLS.get(key)
            if unrep is not None:
                verdict = "not reproducible: coefficients unavailable"
            elif key in benchmarks.KNOWN_DEVIATIONS:
                verdict = "known deviation"
            elif gate is None:
                verdict = "ungated"
            else:
                tol, mode = gate
                dev = abs_dev if mode == "abs" else rel_dev
                if r.amplitude is None or dev is None or dev > tol:
                    verdict = "FAIL"
                    failures.append((table, r.kind.value, r.criterion))
                else:
                    verdict = "ok"
            summary_rows.append([
                str(table), problem.id, r.kind.value, r.criterion,
                fmt6(r.amplitude), fmt6(ref), fmt6(abs_dev), fmt6(rel_dev),
                verdict,
            ])
        _write_exact(os.path.join(outdir, "table_%02d.csv" % table),
                     buf.getvalue())

    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["table", "problem", "kind", "criterion", "amplitude",
                "reference", "abs_dev", "rel_dev", "verdict"])
    for row in summary_rows:
        w.writerow(row)
    _write_exact(os.path.join(outdir, "summary.csv"), buf.getvalue())

    gated = sum(1 for row in summary_rows if row[-1] in ("ok", "FAIL"))
    out.write("tables: %d  cells: %d  gated: %d  failures: %d\n"
              % (len(tables), len(summary_rows), gated, len(failures)))
    for table, kind, crit in failures:
        out.write("  FAIL table %d %s %s\n" % (table, kind, crit))
    return EXIT_TOLERANCE if failures else EXIT_OK


# ---------------------------------------------------------------- scan

def cmd_scan(args, out=None):
    out = out or sys.stdout
    try:
        with open(args.path, "r", encoding="utf-8") as fh:
            problem = ProblemFile.parse(fh.read())
    except OSError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_INPUT
    except ProblemFileError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_INPUT
    if problem.series.order < 2:
        sys.stderr.write("error: order too low (need at least 3 "
                         "coefficients)\n")
        return EXIT_UNDEFINED
    try:
        grid = _resolve_grid(args.grid, problem.grid)
    except ProblemFileError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_INPUT
    kinds = _resolve_kinds(args.kind, problem.kind)
    s = problem.series
    beta = problem.beta
    k = s.order
    lam = 0.5
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["kind", "u", "B_k", "B_k1", "F"])
    any_defined = False
    for kind in kinds:
        gk = _kind_grid(grid, kind)
        hi = AmplitudeCurve(s, kind, beta, order=k, scale=problem.scale)
        lo = AmplitudeCurve(s, kind, beta, order=k - 1, scale=problem.scale)
        u0 = borel_point(kind)
        h = 1e-5 * gk.width

        def cost(u):
            wl = lo.working_amplitude(u)
            wh = hi.working_amplitude(u)
            if not (wl > 0.0 and wh > 0.0):
                raise UndefinedError("non-positive working amplitude")
            d = derivative(lo.working_amplitude, u, h)
            val = (lam * (wh - wl) ** 2 + (1.0 - lam) * d * d
                   + 0.5 * (u - u0) ** 2)
            if not math.isfinite(val):
                raise UndefinedError("non-finite cost")
            return val

        for u in gk.values():
            cells = [kind.value, fmt6(u)]
            for f in (lo, hi, cost):
                try:
                    val = f(u)
                    if not math.isfinite(val):
                        raise UndefinedError("non-finite value")
                    cells.append(fmt6(val))
                    any_defined = True
                except (ResumError, ArithmeticError):
                    cells.append("")
            w.writerow(cells)
    return EXIT_OK if any_defined else EXIT_UNDEFINED


# ---------------------------------------------------------------- main

def _build_parser():
    parser = argparse.ArgumentParser(
        prog="resum",
        description="Optimized Borel-type summation of divergent truncated "
        "series.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    kind_choices = sorted(_KINDS) + ["all"]
    crit_choices = list(_CRITERIA) + ["all"]

    p_sum = sub.add_parser("sum", help="sum a series from a problem file")
    p_sum.add_argument("path")
    p_sum.add_argument("--kind", choices=kind_choices, default=None)
    p_sum.add_argument("--criterion", choices=crit_choices, default=None)
    p_sum.add_argument("--grid", default=None, metavar="LO:HI:POINTS")
    p_sum.add_argument("--format", choices=("text", "json", "csv"),
                       default="text")
    p_sum.set_defaults(func=cmd_sum)

    p_bench = sub.add_parser("bench", help="reproduce benchmark tables")
    p_bench.add_argument("--table", type=int, default=None, metavar="N")
    p_bench.add_argument("--kind", choices=kind_choices, default=None)
    p_bench.add_argument("--criterion", choices=crit_choices, default=None)
    p_bench.add_argument("--grid", default=None, metavar="LO:HI:POINTS")
    p_bench.add_argument("--out", default=None, metavar="DIR")
    p_bench.set_defaults(func=cmd_bench)

    p_scan = sub.add_parser("scan", help="export amplitude-vs-u curves")
    p_scan.add_argument("path")
    p_scan.add_argument("--kind", choices=kind_choices, default=None)
    p_scan.add_argument("--grid", default=None, metavar="LO:HI:POINTS")
    p_scan.set_defaults(func=cmd_scan)

    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

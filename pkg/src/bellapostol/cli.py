"""Command-line front end: ``table``, ``eval``, ``verify`` and ``reduce``.

Exit codes: 0 ok, 1 internal error, 2 invalid parameters (including poles),
3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import List, Optional, Sequence

from .backend import format_rational, parse_rational
from .errors import ParameterError
from .families import FamilyKind, FamilySpec, build_table
from .identities import (
    DEFAULT_GRID, DEFAULT_NMAX, REDUCTION_CHECKS, THEOREM_IDS, Grid, Status, VerifyReport,
    expand_theorems, reduction_points, run_suite, summarize, verify_reduction,
)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_PARAMS = 2
EXIT_FAILED = 3

FORMATS = ("json", "csv", "latex", "text")

# flags whose value may start with "-" (negative rationals)
_VALUE_FLAGS = ("--alpha", "--lambda", "--eta", "--delta", "--x1", "--x2", "--n")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _join_negative_values(argv: Sequence[str]) -> List[str]:
    """``--lambda -1/2`` -> ``--lambda=-1/2`` so argparse does not read an option."""
    out: List[str] = []
    i = 0
    while i < len(argv):
        a = argv[i]
        if a in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-") \
                and not argv[i + 1].startswith("--"):
            out.append(f"{a}={argv[i + 1]}")
            i += 2
            continue
        out.append(a)
        i += 1
    return out


def _rational(text: str):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _integer(text: str) -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def _list_of(conv):
    def parse(text: str) -> tuple:
        items = [t for t in text.split(",") if t.strip()]
        if not items:
            raise argparse.ArgumentTypeError("empty list")
        return tuple(conv(t) for t in items)
    return parse


def _n_range(text: str) -> tuple:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a..b or n, got {text!r}") from None
    if a < 0 or b < a:
        raise argparse.ArgumentTypeError(f"empty or negative range {text!r}")
    return a, b


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="bellapostol", description="Exact Bell-based Apostol-type polynomials.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    families = [k.value for k in FamilyKind]

    def family_params(sp):
        sp.add_argument("--family", required=True, choices=families)
        sp.add_argument("--alpha", type=_integer)
        sp.add_argument("--lambda", dest="lam", type=_rational)
        sp.add_argument("--eta", type=_integer)
        sp.add_argument("--delta", type=_integer)

    def grid_params(sp):
        sp.add_argument("--alpha", type=_list_of(_integer), help="comma list")
        sp.add_argument("--lambda", dest="lam", type=_list_of(_rational), help="comma list")
        sp.add_argument("--eta", type=_list_of(_integer), help="comma list")
        sp.add_argument("--delta", type=_list_of(_integer), help="comma list")
        sp.add_argument("--nmax", type=_integer, default=DEFAULT_NMAX)

    t = sub.add_parser("table", help="rows n = a..b of a family")
    family_params(t)
    t.add_argument("--n", type=_n_range, default=(0, DEFAULT_NMAX), help="a..b, inclusive")
    t.add_argument("--format", choices=FORMATS, default="text")

    e = sub.add_parser("eval", help="exact value of one polynomial at (x1, x2)")
    family_params(e)
    e.add_argument("--n", type=_integer, required=True)
    e.add_argument("--x1", type=_rational, default=parse_rational("0"))
    e.add_argument("--x2", type=_rational, default=parse_rational("0"))
    e.add_argument("--format", choices=FORMATS, default="text")

    v = sub.add_parser("verify", help="check identities over a parameter grid")
    v.add_argument("--theorem", default="all", choices=list(THEOREM_IDS) + ["all"])
    grid_params(v)
    v.add_argument("--format", choices=FORMATS, default="text")

    r = sub.add_parser("reduce", help="cross-check a classical reduction")
    r.add_argument("--check", required=True, choices=REDUCTION_CHECKS)
    grid_params(r)
    r.add_argument("--format", choices=FORMATS, default="text")
    return p


# -- helpers -------------------------------------------------------------------------------


def _spec_from(args) -> FamilySpec:
    params = {}
    for name in ("alpha", "lam", "eta", "delta"):
        val = getattr(args, name)
        if val is not None:
            params[name] = val
    return FamilySpec(FamilyKind(args.family), **params)


def _grid_from(args) -> Grid:
    g = DEFAULT_GRID
    return Grid(
        alphas=args.alpha or g.alphas,
        lambdas=args.lam or g.lambdas,
        etas=args.eta or g.etas,
        deltas=args.delta or g.deltas,
    )


def _grid_json(grid: Grid) -> dict:
    return {"alpha": list(grid.alphas), "lambda": [format_rational(x) for x in grid.lambdas],
            "eta": list(grid.etas), "delta": list(grid.deltas)}


def _dump(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _csv(rows: List[list]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _latex_rational(q) -> str:
    num, den = int(q.numerator), int(q.denominator)
    if den == 1:
        return str(num)
    sign = "-" if num < 0 else ""
    return rf"{sign}\frac{{{abs(num)}}}{{{den}}}"


# -- commands -------------------------------------------------------------------------------


def cmd_table(args) -> tuple:
    spec = _spec_from(args)
    lo, hi = args.n
    rows = [(n, p) for n, p in build_table(spec, hi).rows if n >= lo]
    fmt = args.format
    if fmt == "json":
        doc = {"spec": dict(spec.to_json(), n_range=[lo, hi]),
               "rows": [{"n": n, "poly": p.to_json()} for n, p in rows]}
        return EXIT_OK, _dump(doc)
    if fmt == "csv":
        return EXIT_OK, _csv([["n", "value"]] + [[n, p.render()] for n, p in rows])
    if fmt == "latex":
        body = "".join(f"{n} & ${p.render_latex()}$ \\\\\n" for n, p in rows)
        return EXIT_OK, "\\begin{tabular}{r|l}\n$n$ & value \\\\\n\\hline\n" + body + "\\end{tabular}\n"
    return EXIT_OK, "".join(f"{n}: {p.render()}\n" for n, p in rows)


def cmd_eval(args) -> tuple:
    spec = _spec_from(args)
    if args.n < 0:
        raise ParameterError("n must be >= 0")
    poly = build_table(spec, args.n).rows[args.n][1]
    value = poly.eval(args.x1, args.x2)
    fmt = args.format
    if fmt == "json":
        doc = {"spec": spec.to_json(), "n": args.n, "x1": format_rational(args.x1),
               "x2": format_rational(args.x2), "value": format_rational(value)}
        return EXIT_OK, _dump(doc)
    if fmt == "csv":
        return EXIT_OK, _csv([["n", "x1", "x2", "value"],
                              [args.n, format_rational(args.x1), format_rational(args.x2),
                               format_rational(value)]])
    if fmt == "latex":
        return EXIT_OK, f"${_latex_rational(value)}$\n"
    return EXIT_OK, format_rational(value) + "\n"


def _emit_reports(reports: Sequence[VerifyReport], head: dict, fmt: str) -> tuple:
    code = EXIT_FAILED if any(r.status is Status.FAIL for r in reports) else EXIT_OK
    if fmt == "json":
        doc = {"spec": head, "reports": [r.to_json() for r in reports], "summary": summarize(reports)}
        return code, _dump(doc)
    if fmt == "csv":
        rows = [["theorem", "params", "status", "first_failure_n"]]
        for r in reports:
            f = r.first_failure
            rows.append([r.theorem_id, r.point.label(), r.status.value, "" if f is None else f.n])
        return code, _csv(rows)
    if fmt == "latex":
        body = "".join(
            f"{r.theorem_id} & {r.point.label()} & {r.status.value} \\\\\n" for r in reports)
        return code, "\\begin{tabular}{l|l|l}\nid & parameters & status \\\\\n\\hline\n" + body + "\\end{tabular}\n"
    counts = summarize(reports)
    tail = f"{counts['pass']} pass, {counts['fail']} fail, {counts['skip']} skip\n"
    return code, "".join(r.to_text() + "\n" for r in reports) + tail


def cmd_verify(args) -> tuple:
    if args.nmax < 0:
        raise ParameterError("--nmax must be >= 0")
    grid = _grid_from(args)
    theorems = expand_theorems(args.theorem)
    reports = run_suite(theorems, grid, args.nmax)
    head = {"theorem": args.theorem, "n_max": args.nmax, "grid": _grid_json(grid)}
    return _emit_reports(reports, head, args.format)


def cmd_reduce(args) -> tuple:
    if args.nmax < 0:
        raise ParameterError("--nmax must be >= 0")
    grid = _grid_from(args)
    reports = [verify_reduction(args.check, p, args.nmax) for p in reduction_points(args.check, grid)]
    head = {"check": args.check, "n_max": args.nmax, "grid": _grid_json(grid)}
    return _emit_reports(reports, head, args.format)


COMMANDS = {"table": cmd_table, "eval": cmd_eval, "verify": cmd_verify, "reduce": cmd_reduce}


def run(argv: Optional[Sequence[str]] = None) -> tuple:
    """Parse and execute; returns ``(exit_code, stdout_text, stderr_text)``."""
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(_join_negative_values(argv))
    except UsageError as exc:
        return EXIT_PARAMS, "", f"{exc}\n"
    except SystemExit as exc:  # --help
        return int(exc.code or 0), "", ""
    try:
        code, out = COMMANDS[args.command](args)
    except ParameterError as exc:  # PoleAtZero included
        return EXIT_PARAMS, "", f"error: {exc}\n"
    except Exception as exc:  # noqa: BLE001 - reported as an internal error
        return EXIT_INTERNAL, "", f"internal error: {type(exc).__name__}: {exc}\n"
    return code, out, ""


def main(argv: Optional[Sequence[str]] = None) -> int:
    code, out, err = run(argv)
    if out:
        sys.stdout.write(out)
    if err:
        sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())

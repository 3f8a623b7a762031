"""Command-line front end.

Exit status: 0 when every check holds, 1 on usage or input errors,
2 when some inequality check is violated.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

import numpy as np

from . import engine, scalar
from .errors import MinkowskiError
from .fuzz import MODES, CampaignSpec, run_campaign
from .matrixfile import load_matrix
from .report import REPORT_FIELDS, SLACK_RTOL, records_to_csv, records_to_json

EXIT_OK, EXIT_INPUT, EXIT_VIOLATION = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _emit(records, fmt, single=False, fieldnames=None):
    if fmt == "csv":
        sys.stdout.write(records_to_csv(records, fieldnames))
    else:
        sys.stdout.write(records_to_json(records, single=single) + "\n")


def _status(reports) -> int:
    return EXIT_OK if all(r.satisfied for r in reports) else EXIT_VIOLATION


def cmd_verify(args) -> int:
    a = load_matrix(args.input)
    part = (args.n, args.m)
    if args.shift is not None:
        report = engine.verify_hermitian(a, part, args.p, args.shift, tol=args.tolerance)
    else:
        report = engine.verify_density(a, part, args.p, tol=args.tolerance)
    _emit([report.as_record()], args.format, single=True)
    return _status([report])


def p_grid(p_min: float, p_max: float, steps: int, spacing: str = "linear") -> list[float]:
    if not (0 < p_min <= p_max) or steps < 1:
        raise UsageError("need 0 < p-min <= p-max and steps >= 1")
    if p_min == p_max:
        return [float(p_min)]
    if steps == 1:
        raise UsageError("steps must be at least 2 when p-min < p-max")
    if spacing == "log":
        return [float(p) for p in np.geomspace(p_min, p_max, steps)]
    return [float(p) for p in np.linspace(p_min, p_max, steps)]


def cmd_scan_p(args) -> int:
    ps = p_grid(args.p_min, args.p_max, args.steps, args.spacing)
    a = load_matrix(args.input)
    reports = engine.scan_p(a, (args.n, args.m), ps, tol=args.tolerance)
    _emit([r.as_record() for r in reports], args.format)
    return _status(reports)


def cmd_partitions(args) -> int:
    a = load_matrix(args.input)
    pairs = engine.scan_partitions(a, args.p, args.max_padding, tol=args.tolerance)
    if not pairs:
        raise UsageError(f"no partitions with n, m >= 2 fit dimension {a.shape[0]} "
                         f"with padding <= {args.max_padding}")
    reports = [r for _, r in pairs]
    _emit([r.as_record() for r in reports], args.format)
    return _status(reports)


def parse_values(tokens) -> list[float]:
    """Numbers from CLI tokens: a JSON array, or comma/space separated reals."""
    text = " ".join(tokens).strip()
    if text.startswith("["):
        try:
            values = json.loads(text)
        except json.JSONDecodeError as exc:
            raise UsageError(f"bad JSON array: {exc}") from exc
    else:
        values = [t for t in re.split(r"[,\s]+", text) if t]
    try:
        out = [float(v) for v in values]
    except (TypeError, ValueError) as exc:
        raise UsageError(f"values must be numbers: {exc}") from exc
    return out


def cmd_scalar(args) -> int:
    values = parse_values(args.values)
    grid = scalar.ProbabilityGrid.from_flat(values, args.n, args.m)
    if args.x is None:
        report = scalar.verify_vector(grid, args.p, tol=args.tolerance)
    else:
        report = scalar.verify_shifted_scalar(grid, args.x, args.p, tol=args.tolerance)
    rec = report.as_record()
    if grid.normalized:
        rec["mutual_information"] = scalar.mutual_information(grid)
    else:
        rec["mutual_information"] = None
        print("note: grid is not normalized; mutual information omitted", file=sys.stderr)
    _emit([rec], args.format, single=True, fieldnames=[*REPORT_FIELDS, "mutual_information"])
    return _status([report])


def _p_list(text: str) -> list[float]:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise UsageError(f"bad --p-list {text!r}") from exc


def cmd_fuzz(args) -> int:
    try:
        spec = CampaignSpec(
            dim=args.dim, n=args.n, m=args.m, p_list=_p_list(args.p_list),
            trials=args.trials, rank=args.rank, seed=args.seed, mode=args.mode,
            shift_margin=args.shift_margin, tol=args.tolerance,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    summary, per_trial = run_campaign(spec, jobs=args.jobs)
    if args.per_trial:
        rows = [{"trial": t, "seed": s, **r.as_record()} for t, s, reps in per_trial for r in reps]
        _emit(rows, args.format, fieldnames=["trial", "seed", *REPORT_FIELDS])
    summary_rec = summary.as_record()
    stream = sys.stderr if args.per_trial else sys.stdout
    if args.format == "csv":
        summary_rec["violating_seeds"] = " ".join(map(str, summary_rec["violating_seeds"]))
        stream.write(records_to_csv([summary_rec]))
    else:
        stream.write(json.dumps(summary_rec, indent=2) + "\n")
    return EXIT_OK if summary.violations == 0 else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="minkowski-trace",
                     description="Numerical checks of the block Minkowski trace inequality.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--tolerance", type=float, default=SLACK_RTOL,
                       help="relative slack separating violations from round-off (default 1e-9)")
        p.add_argument("--format", choices=("json", "csv"), default="json")

    def blocks(p):
        p.add_argument("--n", type=int, required=True, help="number of block rows")
        p.add_argument("--m", type=int, required=True, help="block edge length")

    p = sub.add_parser("verify", help="check one matrix at one exponent")
    p.add_argument("--input", required=True)
    blocks(p)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--shift", type=float, default=None,
                   help="treat input as Hermitian and check A + shift*I")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan-p", help="check one matrix over a grid of exponents")
    p.add_argument("--input", required=True)
    blocks(p)
    p.add_argument("--p-min", type=float, required=True)
    p.add_argument("--p-max", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--spacing", choices=("linear", "log"), default="linear")
    common(p)
    p.set_defaults(func=cmd_scan_p)

    p = sub.add_parser("fuzz", help="seeded random campaign")
    p.add_argument("--dim", type=int, required=True)
    blocks(p)
    p.add_argument("--p-list", required=True, help="comma separated exponents")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--rank", type=int, default=None, help="state rank (default: dim)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=MODES, default="density")
    p.add_argument("--shift-margin", type=float, default=0.1)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--per-trial", action="store_true",
                   help="stream every report to stdout; the summary goes to stderr")
    common(p)
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("scalar", help="probability-vector form of the inequality")
    p.add_argument("values", nargs="+", help="n*m values, row by row (or a JSON array)")
    blocks(p)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--x", type=float, default=None, help="shift for the P1/P2 comparison")
    common(p)
    p.set_defaults(func=cmd_scalar)

    p = sub.add_parser("partitions", help="check every factorisation n*m of the dimension")
    p.add_argument("--input", required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--max-padding", type=int, default=0)
    common(p)
    p.set_defaults(func=cmd_partitions)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # --help, or a usage error from _Parser
        return exc.code
    if args.tolerance < 0:
        print("error: --tolerance must be nonnegative", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except (MinkowskiError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

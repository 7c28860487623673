"""Command-line interface.

Subcommands:

* ``frenet``    -- frame/curvature series of a curve as CSV.
* ``involute``  -- involute of a unit-speed curve as CSV (adds c, lambda and
  distance columns; the cusp band around s = c is excluded and reported).
* ``verify``    -- run the self-verification suites; human-readable text on
  stdout, JSON report via --out; exit 0 iff every gated check passes.
* ``associate`` -- integrate the associated spatial (R^3) curve as CSV.

Curves are given to --curve as a built-in name (paper_example), a path to a
JSON spec file, or an inline JSON object.  Output paths are written
atomically (temp file + rename); identical inputs produce byte-identical
output.  The QUATCURVE_TOL environment variable overrides the default
tolerance of the generic frame checks in ``verify``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

import numpy as np

from .curves import build_curve
from .errors import QuatCurveError
from .frenet import sample_apparatus
from .involute import InvoluteParams, involute_curve
from .spatial import associated_spatial_curve, spatial_frame
from .verify import SUITE_ORDER, run_suites
from . import frenet as _frenet

BUILTIN_NAMES = ("paper_example",)


def _parse_curve_spec(value: str) -> dict:
    text = value.strip()
    if text.startswith("{"):
        spec = json.loads(text)
    elif os.path.exists(text):
        with open(text, "r", encoding="utf-8") as fh:
            spec = json.load(fh)
    elif text in BUILTIN_NAMES:
        spec = {"type": text}
    else:
        raise QuatCurveError(
            f"--curve {value!r}: not a built-in name, existing file, or inline JSON")
    return spec


def _write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        _write_atomic(out_path, text)
    else:
        sys.stdout.write(text)


def _add_grid_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--from", dest="start", type=float, default=None,
                        help="grid start (default: curve domain start)")
    parser.add_argument("--to", dest="stop", type=float, default=None,
                        help="grid end (default: curve domain end)")
    parser.add_argument("--n", type=int, default=512,
                        help="number of grid points (default 512)")


def _warn_skipped(series) -> None:
    for s, reason in series.skipped:
        print(f"warning: frame skipped at s={s:.6g}: {reason}", file=sys.stderr)


def cmd_frenet(args: argparse.Namespace) -> int:
    curve = build_curve(_parse_curve_spec(args.curve))
    grid = curve.grid(args.start, args.stop, args.n)
    series = sample_apparatus(curve, grid)
    _warn_skipped(series)
    _emit(series.to_csv_text(), args.out)
    return 0


def cmd_involute(args: argparse.Namespace) -> int:
    evolute = build_curve(_parse_curve_spec(args.curve))
    params = InvoluteParams(c=args.c, exclusion_tol=args.exclusion_tol)
    inv = involute_curve(evolute, params)
    for lo, hi in inv.exclusions:
        print(f"note: excluded singular band ({lo:.6g}, {hi:.6g}) around s=c",
              file=sys.stderr)
    grid = inv.grid(args.start, args.stop, args.n)
    series = sample_apparatus(inv, grid, curve_id="involute")
    _warn_skipped(series)
    evolute_pos = np.array([evolute.eval(s) for s in grid])
    series.extras["c"] = np.full(len(grid), args.c)
    series.extras["lambda"] = args.c - grid
    series.extras["distance"] = np.linalg.norm(series.positions - evolute_pos,
                                               axis=1)
    _emit(series.to_csv_text(), args.out)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    overrides = {}
    for item in args.tol or []:
        if "=" not in item:
            raise QuatCurveError(f"--tol expects CHECK_ID=VALUE, got {item!r}")
        key, _, val = item.partition("=")
        overrides[key.strip()] = float(val)
    base_tol = None
    env_tol = os.environ.get("QUATCURVE_TOL")
    if env_tol:
        base_tol = float(env_tol)
    suites = None if args.suite in (None, "all") else [args.suite]
    report = run_suites(suites, tol_overrides=overrides, base_tol=base_tol)
    sys.stdout.write(report.to_text())
    if args.out:
        _write_atomic(args.out, json.dumps(report.to_dict(), indent=2) + "\n")
    return 0 if report.overall_pass else 1


def cmd_associate(args: argparse.Namespace) -> int:
    curve = build_curve(_parse_curve_spec(args.curve))
    anchor = tuple(float(x) for x in args.anchor.split(","))
    if len(anchor) != 3:
        raise QuatCurveError("--anchor expects three comma-separated numbers")
    if args.n < 1:
        grid = np.empty(0)
        positions = np.empty((0, 3))
    else:
        grid = curve.grid(args.start, args.stop, args.n)
        positions = associated_spatial_curve(curve, grid, anchor)
    columns = ["s", "ax", "ay", "az"]
    include_frames = bool(args.frames) and len(grid) > 0
    rows = []
    for i, s in enumerate(grid):
        row = [s, *positions[i]]
        if include_frames:
            sp = spatial_frame(_frenet.frenet_apparatus(curve, s))
            row += [*sp.t.vector, *sp.n.vector, *sp.b.vector]
        rows.append(row)
    if include_frames:
        columns += ["tx", "ty", "tz", "nx", "ny", "nz", "bx", "by", "bz"]
    lines = [",".join(columns)]
    lines += [",".join(repr(float(v)) for v in row) for row in rows]
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quatcurve",
        description="Quaternion-valued frames and involute/evolute pairs in 4-space")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("frenet", help="frame/curvature series as CSV")
    p.add_argument("--curve", required=True,
                   help="built-in name, JSON spec path, or inline JSON")
    _add_grid_flags(p)
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.set_defaults(func=cmd_frenet)

    p = sub.add_parser("involute", help="involute series as CSV")
    p.add_argument("--curve", required=True)
    p.add_argument("--c", type=float, required=True,
                   help="involute integration constant (cusp location)")
    p.add_argument("--exclusion-tol", type=float, default=None,
                   help="radius of the excluded band around s=c "
                        "(default 1e-3 of the domain length)")
    _add_grid_flags(p)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_involute)

    p = sub.add_parser("verify", help="run the self-verification suites")
    p.add_argument("--suite", default="all",
                   choices=("all",) + tuple(SUITE_ORDER))
    p.add_argument("--tol", action="append", metavar="CHECK_ID=VALUE",
                   help="override the tolerance of a single check (repeatable)")
    p.add_argument("--out", default=None, help="write the JSON report here")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("associate", help="associated spatial curve as CSV")
    p.add_argument("--curve", required=True)
    p.add_argument("--anchor", default="0,0,0", help="start point x,y,z")
    p.add_argument("--frames", action="store_true",
                   help="include t, n, b columns")
    _add_grid_flags(p)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_associate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (QuatCurveError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

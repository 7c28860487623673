"""Script entry point: render quatcurve CSVs to PNG.

Usage:
    quatcurve-plots projection XI.csv [MORE.csv ...] --drop-axis 4 --out fig.png
    quatcurve-plots spatial ALPHA.csv [MORE.csv ...] --out fig.png
    quatcurve-plots to-samples INVOLUTE.csv --out spec.json
"""

from __future__ import annotations

import argparse
import sys

from .plotting import (CsvFormatError, involute_csv_to_samples_spec,
                       plot_projection, plot_spatial)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quatcurve-plots",
                                     description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("projection",
                       help="3D projection of 4-space curve CSVs")
    p.add_argument("csv", nargs="+", help="frame/involute CSV paths")
    p.add_argument("--drop-axis", type=int, default=4, choices=(1, 2, 3, 4),
                   help="which of x1..x4 to drop (default 4)")
    p.add_argument("--out", required=True, help="output PNG path")

    p = sub.add_parser("spatial", help="3D plot of spatial-curve CSVs")
    p.add_argument("csv", nargs="+", help="spatial CSV paths")
    p.add_argument("--out", required=True)

    p = sub.add_parser("to-samples",
                       help="convert an involute CSV to a samples curve spec")
    p.add_argument("csv", help="involute CSV path")
    p.add_argument("--out", required=True, help="output JSON spec path")

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "projection":
            plot_projection(args.csv, args.drop_axis, args.out)
        elif args.command == "spatial":
            plot_spatial(args.csv, args.out)
        else:
            involute_csv_to_samples_spec(args.csv, args.out)
        return 0
    except (CsvFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

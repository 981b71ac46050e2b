"""``plots`` command-line entry point.

Usage: ``plots render --figure ten --in runs/a --out figs/ten.png``.
Exit codes: 0 success, 1 runtime failure (bad input data), 2 usage error.
"""

from __future__ import annotations

import argparse
import sys

from .figures import FigureSpec, render
from .io import SchemaError, read_sweep_dir


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plots", description="Render figures from sweep output CSVs."
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)
    p = sub.add_parser("render", help="render one figure")
    p.add_argument(
        "--figure", required=True,
        choices=["ten", "negativity", "purity", "stability"],
    )
    p.add_argument("--in", dest="input_dir", required=True,
                   help="sweep output directory (aggregates.csv etc.)")
    p.add_argument("--out", dest="output_path", required=True,
                   help="output image path")
    p.add_argument("--nats", action="store_true",
                   help="display in nats instead of log-2 units")
    p.add_argument("--title", help="override the figure title")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    spec = FigureSpec(
        figure=args.figure,
        input_dir=args.input_dir,
        output_path=args.output_path,
        nats=args.nats,
        title=args.title,
    )
    try:
        sweep = read_sweep_dir(spec.input_dir)
        out = render(spec, sweep)
    except SchemaError as e:
        sys.stderr.write(f"schema error: {e}\n")
        return 1
    except OSError as e:
        sys.stderr.write(f"error: {e}\n")
        return 1
    sys.stdout.write(f"wrote {out}\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Command line entry point: render a figure from a spec file or flags.

Usage:
    traceplot <spec-file>
    traceplot --trace TRACE [--trace-b TRACE] --kind KIND --out OUT [--format FMT]

Exit codes: 0 on success, 1 on configuration or input errors.
"""

from __future__ import annotations

import argparse
import sys

from .figures import FORMATS, KINDS, FigureSpec, load_spec, render
from .reader import MissingColumnError


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="traceplot", description="render figures from simulation trace CSVs"
    )
    parser.add_argument("spec", nargs="?", help="figure spec file (key = value lines)")
    parser.add_argument("--trace", help="input trace CSV")
    parser.add_argument("--trace-b", help="second trace CSV (comparison kind)")
    parser.add_argument("--kind", choices=KINDS, help="figure kind")
    parser.add_argument("--out", help="output figure path")
    parser.add_argument("--format", choices=FORMATS, default="png", help="output format")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.spec is not None:
            if args.trace or args.kind or args.out:
                raise ValueError("give either a spec file or --trace/--kind/--out, not both")
            spec = load_spec(args.spec)
        else:
            if not (args.trace and args.kind and args.out):
                raise ValueError("--trace, --kind and --out are all required without a spec file")
            spec = FigureSpec(
                trace=args.trace,
                kind=args.kind,
                out=args.out,
                trace_b=args.trace_b,
                format=args.format,
            )
        path = render(spec)
    except (MissingColumnError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(path)
    return 0


def entry() -> None:
    raise SystemExit(main())

"""Command-line entry point: plot_page_curve."""
from __future__ import annotations

import argparse
import sys

from .render import FigureSpec, render_page_curve
from .schema import SchemaError


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="plot_page_curve",
        description="Render a Page-curve figure from entropy-curve CSV files.",
    )
    p.add_argument("--mc", required=True, help="Monte Carlo curve CSV")
    p.add_argument("--analytic", required=True, help="analytic prediction CSV (same schema)")
    p.add_argument("--state", default=None, help="optional Haar-state curve CSV for the inset")
    p.add_argument("--out", required=True, help="output figure path")
    p.add_argument("--format", default=None, choices=("svg", "png"),
                   help="figure format (default: from --out extension, else svg)")
    p.add_argument("--k", default=None,
                   help="Renyi order to plot ('vn' or an integer; default vn if present)")
    p.add_argument("--bits", action="store_true", help="display entropies in bits")
    p.add_argument("--local-dim", type=int, default=2, help="local dimension q for the envelope")
    p.add_argument("--title", default=None)
    return p


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    fmt = args.format
    if fmt is None:
        fmt = "png" if args.out.lower().endswith(".png") else "svg"
    try:
        spec = FigureSpec(
            mc_path=args.mc,
            analytic_path=args.analytic,
            out_path=args.out,
            state_path=args.state,
            fmt=fmt,
            order=args.k,
            bits=args.bits,
            local_dim=args.local_dim,
            title=args.title,
        )
        render_page_curve(spec)
    except SchemaError as exc:
        print(f"schema-error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"io-error: {exc}", file=sys.stderr)
        return 1
    return 0


def main():
    raise SystemExit(run())

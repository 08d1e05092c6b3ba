"""Strict parsing of the entropy-curve CSV contract.

The header below is the external interface published by the producing
library's `mc`, `state-mc`, and `page-curve` subcommands.  It is restated
here verbatim rather than imported: the plotting frontend depends on the
file format, not on the library.
"""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass

CSV_HEADER = "nA,k,mean_entropy,std_error,annealed_entropy,mean_purity,purity_variance,samples"

_FIELDS = CSV_HEADER.split(",")


class SchemaError(Exception):
    """Input file does not satisfy the CSV contract."""


@dataclass(frozen=True)
class CurvePoint:
    nA: int
    k: str  # "vn", "inf", or the decimal Renyi index
    mean_entropy: float
    std_error: float
    annealed_entropy: float
    mean_purity: float
    purity_variance: float
    samples: int


@dataclass(frozen=True)
class Curve:
    path: str
    points: tuple[CurvePoint, ...]

    @property
    def orders(self) -> tuple[str, ...]:
        seen: dict[str, None] = {}
        for p in self.points:
            seen.setdefault(p.k, None)
        return tuple(seen)

    def select(self, order: str) -> list[CurvePoint]:
        return sorted((p for p in self.points if p.k == order), key=lambda p: p.nA)

    def grid(self, order: str) -> tuple[int, ...]:
        return tuple(p.nA for p in self.select(order))


def _parse_float(row_no: int, name: str, raw: str, path: str) -> float:
    try:
        value = float(raw)
    except ValueError:
        raise SchemaError(f"{path}:{row_no}: field {name!r} is not a number: {raw!r}")
    if math.isinf(value) or math.isnan(value):
        raise SchemaError(f"{path}:{row_no}: field {name!r} is not finite: {raw!r}")
    return value


def load_curve(path: str) -> Curve:
    """Read and validate one CSV file; raise SchemaError on any violation."""
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows:
        raise SchemaError(f"{path}: empty file")
    if ",".join(rows[0]) != CSV_HEADER:
        raise SchemaError(
            f"{path}: header mismatch: expected {CSV_HEADER!r}, got {','.join(rows[0])!r}"
        )
    if len(rows) < 3:
        raise SchemaError(f"{path}: need at least two data rows, got {len(rows) - 1}")
    points = []
    for row_no, row in enumerate(rows[1:], start=2):
        if len(row) != len(_FIELDS):
            raise SchemaError(f"{path}:{row_no}: expected {len(_FIELDS)} fields, got {len(row)}")
        rec = dict(zip(_FIELDS, row))
        try:
            nA = int(rec["nA"])
            samples = int(rec["samples"])
        except ValueError:
            raise SchemaError(f"{path}:{row_no}: nA and samples must be integers")
        if nA < 0 or samples < 0:
            raise SchemaError(f"{path}:{row_no}: nA and samples must be non-negative")
        k = rec["k"]
        if k not in ("vn", "inf"):
            try:
                order = float(k)
            except ValueError:
                raise SchemaError(f"{path}:{row_no}: bad Renyi order {k!r}")
            if order < 1:
                raise SchemaError(f"{path}:{row_no}: Renyi order must be >= 1, got {k!r}")
        points.append(
            CurvePoint(
                nA=nA,
                k=k,
                mean_entropy=_parse_float(row_no, "mean_entropy", rec["mean_entropy"], path),
                std_error=_parse_float(row_no, "std_error", rec["std_error"], path),
                annealed_entropy=_parse_float(
                    row_no, "annealed_entropy", rec["annealed_entropy"], path
                ),
                mean_purity=float(rec["mean_purity"]) if rec["mean_purity"] != "nan" else math.nan,
                purity_variance=float(rec["purity_variance"])
                if rec["purity_variance"] != "nan"
                else math.nan,
                samples=samples,
            )
        )
    curve = Curve(path=path, points=tuple(points))
    for order in curve.orders:
        grid = curve.grid(order)
        if len(set(grid)) != len(grid):
            raise SchemaError(f"{path}: duplicate cut nA within order {order!r}")
        if len(grid) < 2:
            raise SchemaError(f"{path}: order {order!r} has a single row; need a full scan")
        if grid != tuple(range(grid[0], grid[-1] + 1)):
            raise SchemaError(f"{path}: order {order!r} cuts are not contiguous: {grid}")
    return curve


def require_matching_grids(a: Curve, b: Curve, order: str) -> tuple[int, ...]:
    """The overlay contract: both files must cover the identical nA grid."""
    if order not in a.orders:
        raise SchemaError(f"{a.path}: no rows for order {order!r}")
    if order not in b.orders:
        raise SchemaError(f"{b.path}: no rows for order {order!r}")
    ga, gb = a.grid(order), b.grid(order)
    if ga != gb:
        raise SchemaError(
            f"cut grids differ for order {order!r}: {a.path} has {ga}, {b.path} has {gb}"
        )
    return ga

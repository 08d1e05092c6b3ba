"""Deterministic Page-curve figure rendering.

The figure is the standard presentation: Monte Carlo means as points with
error bars, the analytic prediction as a line, and the maximal-entropy
envelope 2 min(nA, N - nA) ln q as a dotted guide.  An optional inset
shows the annealed state-minus-operator 2-Renyi difference across the
scan.  Output bytes are reproducible for fixed inputs: fixed figure
geometry, fixed SVG hash salt, no embedded timestamps.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams["svg.hashsalt"] = "loeplots"

import matplotlib.pyplot as plt

from .schema import Curve, SchemaError, load_curve, require_matching_grids

LN2 = math.log(2)


@dataclass(frozen=True)
class FigureSpec:
    mc_path: str
    analytic_path: str
    out_path: str
    state_path: str | None = None
    fmt: str = "svg"
    order: str | None = None  # None: "vn" if present, else first MC order
    bits: bool = False
    local_dim: int = 2
    title: str | None = None

    def __post_init__(self):
        if self.fmt not in ("svg", "png"):
            raise SchemaError(f"unsupported format {self.fmt!r}")
        if self.local_dim < 2:
            raise SchemaError("local dimension must be >= 2")


def _pick_order(spec: FigureSpec, mc: Curve) -> str:
    if spec.order is not None:
        return spec.order
    return "vn" if "vn" in mc.orders else mc.orders[0]


def _order_label(order: str, bits: bool) -> str:
    unit = "bits" if bits else "nats"
    name = "von Neumann" if order == "vn" else f"Renyi-{order}"
    return f"{name} entropy [{unit}]"


def render_page_curve(spec: FigureSpec) -> None:
    """Validate the inputs and write the figure; raises SchemaError."""
    mc = load_curve(spec.mc_path)
    analytic = load_curve(spec.analytic_path)
    order = _pick_order(spec, mc)
    grid = require_matching_grids(mc, analytic, order)
    scale = 1 / LN2 if spec.bits else 1.0

    mc_pts = mc.select(order)
    an_pts = analytic.select(order)
    qubits = grid[-1]
    envelope = [2 * min(nA, qubits - nA) * math.log(spec.local_dim) * scale for nA in grid]

    fig, ax = plt.subplots(figsize=(5.4, 3.6), dpi=100)
    ax.plot(
        grid,
        envelope,
        linestyle=":",
        color="0.4",
        linewidth=1.2,
        label="maximal entropy",
    )
    ax.plot(
        grid,
        [p.mean_entropy * scale for p in an_pts],
        color="tab:orange",
        linewidth=1.4,
        label="free-probability prediction",
    )
    ax.errorbar(
        grid,
        [p.mean_entropy * scale for p in mc_pts],
        yerr=[3 * p.std_error * scale for p in mc_pts],
        fmt="o",
        markersize=4,
        color="tab:blue",
        capsize=2,
        linewidth=1,
        label="Haar Monte Carlo",
    )
    ax.set_xlabel("cut position $n_A$")
    ax.set_ylabel(_order_label(order, spec.bits))
    ax.set_xticks(list(grid))
    ax.legend(loc="lower center", fontsize=8, frameon=False)
    if spec.title:
        ax.set_title(spec.title)

    if spec.state_path is not None:
        _add_inset(fig, spec, mc)

    fig.tight_layout()
    fig.savefig(spec.out_path, format=spec.fmt, metadata=_metadata(spec.fmt))
    plt.close(fig)


def _add_inset(fig, spec: FigureSpec, mc: Curve) -> None:
    """Inset: annealed state-minus-operator 2-Renyi difference across cuts."""
    state = load_curve(spec.state_path)
    order = "2" if "2" in mc.orders else "2.0"
    if order not in mc.orders or order not in state.orders:
        raise SchemaError("inset needs 2-Renyi rows in both the state and operator files")
    grid = require_matching_grids(mc, state, order)
    scale = 1 / LN2 if spec.bits else 1.0
    diffs = [
        (s.annealed_entropy - o.annealed_entropy) * scale
        for s, o in zip(state.select(order), mc.select(order))
    ]
    axins = fig.axes[0].inset_axes([0.07, 0.62, 0.3, 0.3])
    axins.plot(grid, diffs, marker=".", markersize=3, linewidth=0.9, color="tab:green")
    axins.axhline(0.0, color="0.6", linewidth=0.6)
    axins.set_title("state $-$ operator ($k=2$)", fontsize=7)
    axins.tick_params(labelsize=6)


def _metadata(fmt: str) -> dict | None:
    # strip the creation timestamp so identical inputs give identical bytes
    if fmt == "svg":
        return {"Date": None}
    return None

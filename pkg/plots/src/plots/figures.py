"""The four figure layouts rendered from a sweep directory.

All values in the CSVs are in log-base-2 units; the nats toggle rescales
at render time only.  Styles are fixed and no timestamps are embedded, so
re-rendering from the same inputs is byte-stable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .io import SchemaError, SweepDir  # noqa: E402

_LN2 = math.log(2.0)

_STYLE = {
    "figure.dpi": 120,
    "savefig.dpi": 120,
    "font.size": 9,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "lines.markersize": 4,
}

_MARKERS = ["o", "s", "^", "d", "v", "p"]


@dataclass
class FigureSpec:
    """What to render: one of the four figure ids plus I/O paths."""

    figure: str  # "ten" | "negativity" | "purity" | "stability"
    input_dir: str
    output_path: str
    nats: bool = False
    title: str | None = None
    extra_inputs: list[str] = field(default_factory=list)

    def __post_init__(self):
        if self.figure not in _RENDERERS:
            raise ValueError(
                f"figure must be one of {sorted(_RENDERERS)}, got {self.figure!r}"
            )


def _unit(spec: FigureSpec) -> tuple[float, str]:
    return (_LN2, "nats") if spec.nats else (1.0, "log2")


def _plot_curves(ax, sweep: SweepDir, observable: str, regions, scale, ylabel):
    for i, region in enumerate(regions):
        rows = sweep.curve(observable, region)
        ps = [a.p for a in rows]
        means = [a.mean * scale for a in rows]
        errs = [a.stderr * scale for a in rows]
        ax.errorbar(
            ps, means, yerr=errs, marker=_MARKERS[i % len(_MARKERS)],
            capsize=2, label=region or observable,
        )
    ax.set_xlabel("p")
    ax.set_ylabel(ylabel)
    ax.legend(fontsize=7)


def render_ten(spec: FigureSpec, sweep: SweepDir) -> plt.Figure:
    """TEN mean per complex and its variance vs p, two panels."""
    scale, unit = _unit(spec)
    regions = sweep.regions("ten")
    if not regions:
        raise SchemaError(f"{spec.input_dir}: no 'ten' observable in aggregates")
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(7.2, 3.0), constrained_layout=True)
    _plot_curves(ax1, sweep, "ten", regions, scale, f"TEN [{unit}]")
    for i, region in enumerate(regions):
        rows = sweep.curve("ten", region)
        ax2.plot(
            [a.p for a in rows], [a.variance * scale * scale for a in rows],
            marker=_MARKERS[i % len(_MARKERS)], label=region,
        )
    ax2.set_xlabel("p")
    ax2.set_ylabel(f"var(TEN) [{unit}^2]")
    ax2.legend(fontsize=7)
    fig.suptitle(spec.title or "Topological entanglement negativity vs p")
    return fig


def render_negativity(spec: FigureSpec, sweep: SweepDir) -> plt.Figure:
    """Negativity per region and its boundary-normalized collapse."""
    scale, unit = _unit(spec)
    regions = sweep.regions("negativity")
    if not regions:
        raise SchemaError(
            f"{spec.input_dir}: no 'negativity' observable in aggregates"
        )
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(7.2, 3.0), constrained_layout=True)
    _plot_curves(ax1, sweep, "negativity", regions, scale, f"negativity [{unit}]")
    # normalized panel: divide by the p = 0 value (= |boundary| - 2), so the
    # area-law family collapses onto a single curve starting at 1
    for i, region in enumerate(regions):
        rows = sweep.curve("negativity", region)
        base = rows[0].mean
        if base == 0:
            continue
        ax2.plot(
            [a.p for a in rows], [a.mean / base for a in rows],
            marker=_MARKERS[i % len(_MARKERS)], label=region,
        )
    ax2.set_xlabel("p")
    ax2.set_ylabel("negativity / negativity(p=0)")
    ax2.legend(fontsize=7)
    fig.suptitle(spec.title or "Subsystem negativity vs p")
    return fig


def render_purity(spec: FigureSpec, sweep: SweepDir) -> plt.Figure:
    """Mean logarithmic purity and its volume-rescaled variance vs p."""
    scale, unit = _unit(spec)
    rows = sweep.curve("S_e", "")
    if not rows:
        raise SchemaError(f"{spec.input_dir}: no 'S_e' observable in aggregates")
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(7.2, 3.0), constrained_layout=True)
    ax1.errorbar(
        [a.p for a in rows], [a.mean * scale for a in rows],
        yerr=[a.stderr * scale for a in rows], marker="o", capsize=2,
    )
    ax1.set_xlabel("p")
    ax1.set_ylabel(f"S_e [{unit}]")
    n_v = sweep.n_vertices or 1
    ax2.plot(
        [a.p for a in rows],
        [a.variance * scale * scale / n_v for a in rows],
        marker="s",
    )
    ax2.set_xlabel("p")
    ax2.set_ylabel(f"var(S_e) / N_v [{unit}^2]" if sweep.n_vertices else "var(S_e)")
    fig.suptitle(spec.title or "Logarithmic purity vs p")
    return fig


def render_stability(spec: FigureSpec, sweep: SweepDir) -> plt.Figure:
    """Shape-stability panels: one TEN curve panel per complex."""
    scale, unit = _unit(spec)
    regions = sweep.regions("ten")
    if not regions:
        raise SchemaError(f"{spec.input_dir}: no 'ten' observable in aggregates")
    n = len(regions)
    fig, axes = plt.subplots(
        1, n, figsize=(3.2 * n, 3.0), constrained_layout=True, squeeze=False
    )
    for ax, region in zip(axes[0], regions):
        rows = sweep.curve("ten", region)
        ax.errorbar(
            [a.p for a in rows], [a.mean * scale for a in rows],
            yerr=[a.stderr * scale for a in rows], marker="o", capsize=2,
        )
        ax.set_title(region, fontsize=8)
        ax.set_xlabel("p")
        ax.set_ylabel(f"TEN [{unit}]")
    fig.suptitle(spec.title or "TEN across complex shapes")
    return fig


_RENDERERS = {
    "ten": render_ten,
    "negativity": render_negativity,
    "purity": render_purity,
    "stability": render_stability,
}


def render(spec: FigureSpec, sweep: SweepDir) -> Path:
    """Render the figure to ``spec.output_path`` and return that path."""
    out = Path(spec.output_path)
    out.parent.mkdir(parents=True, exist_ok=True)
    with plt.rc_context(_STYLE):
        fig = _RENDERERS[spec.figure](spec, sweep)
        try:
            # drop the embedded Software tag so re-renders are byte-stable
            # across matplotlib patch versions too
            fig.savefig(out, metadata={"Software": None} if out.suffix == ".png" else None)
        finally:
            plt.close(fig)
    return out

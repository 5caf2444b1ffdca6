"""Figure rendering for the report paths.

Every figure is rendered to file next to its CSV with fixed style, dpi and
metadata so reruns produce identical images.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from . import __version__

_SOFTWARE = {"Software": f"sccg-toolkit {__version__}"}

_MARKERS = ("o", "s", "^", "d", "v", "*")

# axis scaling per comparison metric
_SCALES = {
    "density": ("log", "log"),
    "triangles": ("log", "log"),
    "diameter": ("log", "linear"),
    "clustering": ("log", "linear"),
    "assortativity": ("log", "linear"),
}

_YLABELS = {
    "density": "density",
    "triangles": "triangle count",
    "diameter": "diameter",
    "clustering": "average clustering",
    "assortativity": "assortativity r",
}


def _style(ax, xscale: str, yscale: str) -> None:
    ax.set_xscale(xscale)
    ax.set_yscale(yscale)
    ax.grid(True, which="both", alpha=0.3, linewidth=0.5)


def render_series_figure(
    metric: str,
    rows: Sequence[tuple[str, int, float]],
    path: str | Path,
) -> None:
    """Plot (model, node_count, value) rows as one line per model."""
    fig, ax = plt.subplots(figsize=(5.0, 3.6))
    models: dict[str, tuple[list[int], list[float]]] = {}
    for model, n, value in rows:
        xs, ys = models.setdefault(model, ([], []))
        xs.append(n)
        ys.append(value)
    for k, (model, (xs, ys)) in enumerate(sorted(models.items())):
        ax.plot(xs, ys, marker=_MARKERS[k % len(_MARKERS)], markersize=4, label=model)
    xscale, yscale = _SCALES.get(metric, ("log", "linear"))
    _style(ax, xscale, yscale)
    ax.set_xlabel("nodes")
    ax.set_ylabel(_YLABELS.get(metric, metric))
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150, metadata=_SOFTWARE)
    plt.close(fig)


def render_knn_figure(
    rows: Sequence[tuple[str, int, int, float]], path: str | Path
) -> None:
    """Plot (model, node_count, degree, mean neighbor degree) curves."""
    fig, ax = plt.subplots(figsize=(5.0, 3.6))
    models: dict[str, tuple[list[int], list[float]]] = {}
    for model, _n, degree, value in rows:
        xs, ys = models.setdefault(model, ([], []))
        xs.append(degree)
        ys.append(value)
    for k, (model, (xs, ys)) in enumerate(sorted(models.items())):
        ax.plot(xs, ys, marker=_MARKERS[k % len(_MARKERS)], markersize=3,
                linewidth=0.8, label=model)
    _style(ax, "log", "log")
    ax.set_xlabel("degree")
    ax.set_ylabel("mean neighbor degree")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150, metadata=_SOFTWARE)
    plt.close(fig)


def render_degree_figure(
    ccdf: Sequence[tuple[int, int]], path: str | Path, title: str = ""
) -> None:
    """Plot a complementary cumulative degree distribution."""
    fig, ax = plt.subplots(figsize=(5.0, 3.6))
    xs = [d for d, _ in ccdf if d > 0]
    ys = [c for d, c in ccdf if d > 0]
    if xs:
        ax.plot(xs, ys, marker="o", markersize=3, linewidth=0.8)
    _style(ax, "log", "log")
    ax.set_xlabel("degree")
    ax.set_ylabel("nodes with degree ≥ k")
    if title:
        ax.set_title(title, fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=150, metadata=_SOFTWARE)
    plt.close(fig)

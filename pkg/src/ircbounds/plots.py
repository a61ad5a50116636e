"""Figure rendering for sweep and region outputs.

Figures are rendered headlessly to files; nothing here opens a window.
"""
from __future__ import annotations

from typing import Mapping, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be pinned first)

from .regions import Polygon2D  # noqa: E402

_SERIES = (
    ("sum_rate_proposed", "proposed", "tab:blue", "-"),
    ("sum_rate_ian", "treat interference as noise", "tab:orange", "--"),
    ("sum_rate_snd", "simultaneous decoding", "tab:green", ":"),
)


def plot_sweep(
    xs: Sequence[float],
    series: Mapping[str, Sequence[float]],
    path: str,
    x_label: str = "swept parameter",
) -> None:
    """Render the three sum-rate curves of a sweep to ``path``."""
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    for key, label, color, style in _SERIES:
        ax.plot(xs, series[key], style, color=color, label=label, linewidth=1.8)
    if min(xs) > 0 and max(xs) / min(xs) >= 50:
        ax.set_xscale("log")
    ax.set_xlabel(x_label)
    ax.set_ylabel("sum rate (bits/use)")
    ax.grid(True, alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_region(polygons: Mapping[str, Polygon2D], path: str) -> None:
    """Render one or more achievable-rate frontiers to ``path``."""
    fig, ax = plt.subplots(figsize=(5.5, 5.0))
    for label, polygon in polygons.items():
        if polygon.is_empty:
            continue
        xs = [v[0] for v in polygon.vertices] + [polygon.vertices[0][0]]
        ys = [v[1] for v in polygon.vertices] + [polygon.vertices[0][1]]
        ax.plot(xs, ys, linewidth=1.8, label=label)
        ax.fill(xs, ys, alpha=0.12)
    ax.set_xlabel("rate of pair 1 (bits/use)")
    ax.set_ylabel("rate of pair 2 (bits/use)")
    ax.grid(True, alpha=0.3)
    if polygons:
        ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)

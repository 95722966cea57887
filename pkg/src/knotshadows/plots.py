"""Figure rendering for reports.

When a command writes a delimited report to a file, these helpers render
companion PNG figures next to it.  The Agg backend keeps everything
headless; figures are a visual aid and carry no data the report lacks.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg", force=False)

import matplotlib.pyplot as plt  # noqa: E402

from .fertility import BoundsReport, MinimalDiagram, SupportCensus  # noqa: E402


def _finish(fig, path: Path) -> Path:
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def census_figure(census: SupportCensus, path: Path) -> Path:
    """Bar chart of assignments per identified knot for one shadow."""
    names = list(census.names)
    values = [census.counts[n] for n in names]
    if census.unidentified:
        names.append("(unidentified)")
        values.append(len(census.unidentified))
    fig, ax = plt.subplots(figsize=(max(4.0, 0.9 * len(names) + 2), 3.2))
    ax.bar(range(len(names)), values, color="#4878b0")
    ax.set_xticks(range(len(names)))
    ax.set_xticklabels(names, rotation=45, ha="right")
    ax.set_ylabel("assignments")
    ax.set_title(f"support census of {census.shadow.canonical_key or 'the circle'}"
                 f" (c={census.shadow.crossings})")
    return _finish(fig, path)


def bounds_figure(reports: Sequence[BoundsReport], path: Path) -> Path:
    """Horizontal bars of the slack (right minus left) per inequality."""
    labels = []
    slacks = []
    colors = []
    for rep in reports:
        for e in rep.entries:
            labels.append(f"{rep.knot}:{e.key}")
            slacks.append(float(e.right) - float(e.left))
            colors.append("#2e7d32" if e.holds else "#c62828")
    fig, ax = plt.subplots(figsize=(7, max(2.5, 0.28 * len(labels) + 1)))
    ax.barh(range(len(labels)), slacks, color=colors)
    ax.set_yticks(range(len(labels)))
    ax.set_yticklabels(labels, fontsize=7)
    ax.invert_yaxis()
    ax.axvline(0.0, color="black", linewidth=0.8)
    ax.set_xlabel("slack (right side minus left side)")
    ax.set_title("inequality margins")
    return _finish(fig, path)


def variation_figure(name: str, diagrams: Sequence[MinimalDiagram], path: Path) -> Path:
    """Scatter of (writhe, Seifert circles) over minimum-crossing diagrams."""
    pts: dict[tuple[int, int], int] = {}
    for md in diagrams:
        pts[(md.w, md.s)] = pts.get((md.w, md.s), 0) + 1
    fig, ax = plt.subplots(figsize=(4.5, 3.5))
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    sizes = [40 + 30 * pts[p] for p in pts]
    ax.scatter(xs, ys, s=sizes, color="#4878b0", alpha=0.85)
    for (x, y), k in sorted(pts.items()):
        ax.annotate(str(k), (x, y), textcoords="offset points", xytext=(5, 4),
                    fontsize=8)
    ax.set_xlabel("writhe")
    ax.set_ylabel("Seifert circles")
    ax.set_title(f"minimum-crossing diagrams of {name}")
    ax.grid(True, linewidth=0.3, alpha=0.5)
    return _finish(fig, path)

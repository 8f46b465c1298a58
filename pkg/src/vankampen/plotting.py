"""Figures for decision reports.

For d <= 2 the generic map is drawn with its r-fold points marked by sign;
otherwise the cocycle values on critical orbit representatives are shown
as a bar chart.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .complex import SimplicialComplex  # noqa: E402
from .delprod import format_cell, orbit_rep  # noqa: E402
from .genmaps import IntersectionCocycle, PLMap  # noqa: E402

SIGN_COLORS = {1: "tab:red", -1: "tab:blue"}


def _draw_map_2d(ax, K: SimplicialComplex, f: PLMap) -> None:
    for s in K.simplices_of_dim(2):
        xs = [float(f(v)[0]) for v in s]
        ys = [float(f(v)[1]) for v in s]
        ax.fill(xs, ys, color="0.85", alpha=0.25, lw=0)
    for a, b in K.simplices_of_dim(1):
        ax.plot([float(f(a)[0]), float(f(b)[0])], [float(f(a)[1]), float(f(b)[1])], color="0.4", lw=0.8)
    for v in K.vertices:
        x, y = (float(t) for t in f(v))
        ax.plot(x, y, "o", color="k", ms=3)
        ax.annotate(str(v), (x, y), textcoords="offset points", xytext=(3, 3), fontsize=7)


def _draw_map_1d(ax, K: SimplicialComplex, f: PLMap) -> None:
    # each simplex gets its own row so overlapping intervals stay visible
    for row, s in enumerate(K.sorted_simplices()):
        xs = [float(f(v)[0]) for v in s]
        lo, hi = min(xs), max(xs)
        if lo == hi:
            ax.plot(lo, row, "o", color="k", ms=2)
        else:
            ax.plot([lo, hi], [row, row], color="0.4", lw=1)
    ax.set_yticks([])


def render_map(K: SimplicialComplex, f: PLMap, cocycle: IntersectionCocycle, path: str | Path,
               title: str | None = None) -> Path:
    path = Path(path)
    fig, ax = plt.subplots(figsize=(6, 6 if f.d == 2 else 3))
    if f.d == 2:
        _draw_map_2d(ax, K, f)
        for cell, p in cocycle.points.items():
            if orbit_rep(cell)[0] == cell:
                ax.plot(float(p.location[0]), float(p.location[1]), "x", color=SIGN_COLORS[p.sign], ms=6)
        ax.set_aspect("equal")
    else:
        _draw_map_1d(ax, K, f)
        for cell, p in cocycle.points.items():
            if orbit_rep(cell)[0] == cell:
                ax.axvline(float(p.location[0]), color=SIGN_COLORS[p.sign], lw=0.6, alpha=0.6)
    ax.set_title(title or f"generic map, r={cocycle.r}, d={f.d}", fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def render_cocycle(cocycle: IntersectionCocycle, path: str | Path, title: str | None = None) -> Path:
    path = Path(path)
    reps = sorted(c for c in cocycle.values if orbit_rep(c)[0] == c)
    vals = [cocycle.values[c] for c in reps]
    fig, ax = plt.subplots(figsize=(max(4, 0.12 * len(reps)), 3))
    ax.bar(range(len(reps)), vals, color=["tab:red" if v > 0 else "tab:blue" for v in vals])
    if len(reps) <= 40:
        ax.set_xticks(range(len(reps)))
        ax.set_xticklabels([format_cell(c) for c in reps], rotation=90, fontsize=6)
    ax.axhline(0, color="k", lw=0.5)
    ax.set_ylabel("cocycle value")
    ax.set_title(title or f"intersection cocycle on orbit representatives, r={cocycle.r}, d={cocycle.d}",
                 fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def render(K: SimplicialComplex, f: PLMap, cocycle: IntersectionCocycle, path: str | Path) -> Path:
    if f.d <= 2:
        return render_map(K, f, cocycle, path)
    return render_cocycle(cocycle, path)

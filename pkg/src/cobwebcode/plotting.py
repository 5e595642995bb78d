"""Matplotlib figures for tilings and cobweb Hasse digraphs.

Everything goes through :class:`matplotlib.figure.Figure` directly, so no
pyplot state is touched and rendering works headless. SVG output is made
reproducible by fixing the hash salt and dropping the date stamp.
"""

from __future__ import annotations

import io
from pathlib import Path

import matplotlib
from matplotlib.figure import Figure
from matplotlib.patches import Rectangle

from .cobweb import HasseDigraph
from .errors import UnsupportedDimension
from .tiling import Tiling, tile_labels

__all__ = ["tile_color", "tiling_figure", "tilings_figure", "hasse_figure", "figure_to_svg", "save_figure"]

_PALETTE = matplotlib.colormaps["tab20"]
CELL = 0.5  # inches per grid cell


def tile_color(index: int):
    # dark shades first, then the light ones, so neighbouring indices contrast
    i = index % 20
    return _PALETTE(2 * i % 20 + i // 10)


def _panels(t: Tiling):
    ext = t.box.extents
    if len(ext) > 3:
        raise UnsupportedDimension(f"figures support at most 3 dimensions, box has {len(ext)}")
    padded = tuple(ext) + (1,) * (3 - len(ext))
    return padded, len(ext)


def _draw_grid(ax, labels, rows, cols, fixed, dims, title=None):
    for r in range(rows):
        for c in range(cols):
            p = (r, c, fixed)[:dims]
            idx = labels.get(p)
            face = tile_color(idx) if idx is not None else "white"
            # row 0 at the top, like the text grid
            ax.add_patch(Rectangle((c, rows - 1 - r), 1, 1, facecolor=face, edgecolor="black", linewidth=0.8))
            if idx is not None:
                ax.text(c + 0.5, rows - 0.5 - r, str(idx), ha="center", va="center", fontsize=9)
    ax.set_xlim(0, cols)
    ax.set_ylim(0, rows)
    ax.set_aspect("equal")
    ax.set_xticks([c + 0.5 for c in range(cols)], [str(c) for c in range(cols)])
    ax.set_yticks([rows - 0.5 - r for r in range(rows)], [str(r) for r in range(rows)])
    ax.tick_params(length=0, labelsize=7)
    if title:
        ax.set_title(title, fontsize=8)


def tiling_figure(t: Tiling) -> Figure:
    """One panel per coordinate of the third dimension (a single panel below 3 dimensions)."""
    (rows, cols, depth), dims = _panels(t)
    labels = tile_labels(t)
    fig = Figure(figsize=(max(1.5, CELL * cols) * depth + 0.4 * depth, max(1.2, CELL * rows) + 0.6))
    axes = fig.subplots(1, depth, squeeze=False)[0]
    for z, ax in enumerate(axes):
        _draw_grid(ax, labels, rows, cols, z, dims, title=f"c2 = {z}" if dims == 3 else None)
    b = t.box
    fig.suptitle(f"V[{b.origin},{b.end}] {b.sequence.spec}: {len(t.tiles)} tiles", fontsize=9)
    return fig


def tilings_figure(tilings, ncols: int = 4) -> Figure:
    """Small multiples of several tilings of the same box of at most 2 dimensions."""
    tilings = list(tilings)
    if not tilings:
        raise ValueError("no tilings to draw")
    (rows, cols, _), dims = _panels(tilings[0])
    if dims > 2:
        raise UnsupportedDimension("small multiples need at most 2 dimensions; draw 3-d tilings one at a time")
    ncols = min(ncols, len(tilings))
    nrows = -(-len(tilings) // ncols)
    fig = Figure(figsize=(ncols * max(1.5, CELL * cols + 0.4), nrows * max(1.3, CELL * rows + 0.5)))
    axes = fig.subplots(nrows, ncols, squeeze=False)
    for i, ax in enumerate(axes.flat):
        if i < len(tilings):
            _draw_grid(ax, tile_labels(tilings[i]), rows, cols, 0, dims, title=f"#{i}")
        else:
            ax.set_axis_off()
    return fig


def hasse_figure(g: HasseDigraph) -> Figure:
    """Levels drawn bottom to top, each centred, with every inter-level arc."""
    widths = g.widths
    span = max(widths) if widths else 1
    fig = Figure(figsize=(max(2.0, 0.6 * span + 1), max(2.0, 0.8 * len(widths) + 0.5)))
    ax = fig.subplots()
    pos = {}
    for y, level in enumerate(g.levels):
        offset = (span - len(level)) / 2
        for i, v in enumerate(level):
            pos[v] = (offset + i, y)
    for u, v in g.arcs():
        (x0, y0), (x1, y1) = pos[u], pos[v]
        ax.plot([x0, x1], [y0, y1], color="0.55", linewidth=0.6, zorder=1)
    if pos:
        xs, ys = zip(*pos.values())
        ax.scatter(xs, ys, s=60, color="tab:blue", zorder=2)
    for v, (x, y) in pos.items():
        ax.annotate(v.label, (x, y), textcoords="offset points", xytext=(0, 6), ha="center", fontsize=6)
    ax.set_yticks(range(len(widths)), [str(lv[0].level) if lv else "" for lv in g.levels])
    ax.set_xticks([])
    ax.set_ylabel("level")
    ax.set_xlim(-0.7, span - 0.3)
    ax.set_ylim(-0.5, len(widths) - 0.3)
    for side in ("top", "right", "bottom"):
        ax.spines[side].set_visible(False)
    return fig


def figure_to_svg(fig: Figure) -> str:
    buf = io.StringIO()
    with matplotlib.rc_context({"svg.hashsalt": "cobwebcode", "svg.fonttype": "none"}):
        fig.savefig(buf, format="svg", metadata={"Date": None}, bbox_inches="tight")
    return buf.getvalue()


def save_figure(fig: Figure, path) -> Path:
    """Write the figure; the format follows the file suffix (svg, png, pdf)."""
    path = Path(path)
    if path.suffix.lower() == ".svg":
        path.write_text(figure_to_svg(fig), encoding="utf-8")
    else:
        fig.savefig(path, bbox_inches="tight", dpi=150)
    return path


def tiling_svg(t: Tiling) -> str:
    return figure_to_svg(tiling_figure(t))

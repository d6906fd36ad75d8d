"""Figure rendering for billiard tables and their unfolded stars."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Polygon as MplPolygon  # noqa: E402

from .billiards import Cylinder, RationalPolygon


def _apex_index(poly: RationalPolygon, n: int) -> int:
    """Vertex where the star unfolding is rotated: last angle equal to pi/n."""
    target = Fraction(1, n)
    idx = [k for k, a in enumerate(poly.angles) if a == target]
    return idx[-1] if idx else 0


def _transformed(verts: Sequence[tuple[float, float]], apex: tuple[float, float],
                 rot: float, reflect_dir: Optional[float]) -> list[tuple[float, float]]:
    out = []
    ax, ay = apex
    for x, y in verts:
        dx, dy = x - ax, y - ay
        if reflect_dir is not None:
            c, s = math.cos(2 * reflect_dir), math.sin(2 * reflect_dir)
            dx, dy = c * dx + s * dy, s * dx - c * dy
        c, s = math.cos(rot), math.sin(rot)
        out.append((ax + c * dx - s * dy, ay + s * dx + c * dy))
    return out


def render_table(poly: RationalPolygon, path: str, n: Optional[int] = None,
                 star: bool = False,
                 cylinders: Optional[Sequence[Cylinder]] = None) -> None:
    """Write an SVG (or other matplotlib-supported format) of the table.

    With star=True and n given, the 2n dihedral copies of the table around
    its pi/n vertex are drawn, colored alternately; cylinder moduli, when
    supplied, are annotated in the title (all classes share one modulus).
    """
    fig, ax = plt.subplots(figsize=(6, 6))
    if star and n:
        k = _apex_index(poly, n)
        apex = poly.vertices[k]
        # Reflection axis along the edge entering the apex vertex.
        px, py = poly.vertices[k - 1]
        axis = math.atan2(apex[1] - py, apex[0] - px)
        for j in range(n):
            rot = 2 * math.pi * j / n
            for refl, color in ((None, "#7fb2d6"), (axis, "#d6a97f")):
                ax.add_patch(MplPolygon(
                    _transformed(poly.vertices, apex, rot, refl),
                    closed=True, facecolor=color, edgecolor="black",
                    linewidth=0.5, alpha=0.85))
    else:
        ax.add_patch(MplPolygon(list(poly.vertices), closed=True,
                                facecolor="#7fb2d6", edgecolor="black"))
        if poly.edge_labels:
            v = poly.vertices
            for j, lab in enumerate(poly.edge_labels):
                x0, y0 = v[j]
                x1, y1 = v[(j + 1) % len(v)]
                ax.annotate(lab, ((x0 + x1) / 2, (y0 + y1) / 2), fontsize=9)
    title = "billiard table"
    if cylinders:
        title += f"; cylinder modulus {cylinders[0].modulus:.12g}"
    ax.set_title(title, fontsize=10)
    ax.set_aspect("equal")
    ax.autoscale_view()
    ax.relim()
    ax.autoscale()
    ax.axis("off")
    fig.savefig(path, metadata={"Date": None} if path.endswith(".svg") else None)
    plt.close(fig)

"""Axonometric 4D -> 2D projection, wireframe assembly and drawing output.

The projection is the constant 4x2 matrix whose rows are the plane images of
the four axis unit vectors; applied on the right to a coordinate row vector.
Each row has unit length, so every axis-parallel unit segment (all tesseract
edges) keeps its length in the plane.  Output formats: SVG and CSV emitters,
plus a matplotlib PNG renderer for figure files.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .build import Polytope
from .golden import Vec4

_S = math.sqrt(2.0) / 2.0
_DEFAULT_ROWS = ((-_S, -_S), (1.0, 0.0), (0.0, 1.0), (_S, -_S))


@dataclass(frozen=True)
class ProjectionMatrix:
    """4x2 matrix applied as (x1, x2, x3, x4) @ rows -> (y1, y2)."""
    rows: tuple[tuple[float, float], ...] = _DEFAULT_ROWS


AXONOMETRIC = ProjectionMatrix()


@dataclass(frozen=True)
class Point2:
    y1: float
    y2: float


@dataclass(frozen=True)
class Wireframe:
    points: tuple[Point2, ...]
    segments: tuple[tuple[int, int], ...]


def project(point: Vec4 | Sequence[float],
            matrix: ProjectionMatrix = AXONOMETRIC) -> Point2:
    """Project one 4D point to the plane."""
    x = point.to_floats() if isinstance(point, Vec4) else tuple(point)
    y1 = sum(x[i] * matrix.rows[i][0] for i in range(4))
    y2 = sum(x[i] * matrix.rows[i][1] for i in range(4))
    return Point2(y1, y2)


def project_polytope(polytope: Polytope, edges,
                     matrix: ProjectionMatrix = AXONOMETRIC) -> Wireframe:
    """One projected point per vertex (in index order), one segment per edge."""
    points = tuple(project(v, matrix) for v in polytope.vertices)
    return Wireframe(points=points, segments=tuple(edges))


def _fit(points: Sequence[Point2], width: float, height: float,
         margin_fraction: float = 0.05):
    """Map data coordinates to screen with 5% margin and the y-axis flipped."""
    if points:
        xs = [p.y1 for p in points]
        ys = [p.y2 for p in points]
        lo_x, hi_x, lo_y, hi_y = min(xs), max(xs), min(ys), max(ys)
    else:
        lo_x, hi_x, lo_y, hi_y = 0.0, 1.0, 0.0, 1.0
    span_x = hi_x - lo_x or 1.0
    span_y = hi_y - lo_y or 1.0
    scale = min(width * (1 - 2 * margin_fraction) / span_x,
                height * (1 - 2 * margin_fraction) / span_y)
    off_x = (width - scale * span_x) / 2.0
    off_y = (height - scale * span_y) / 2.0

    def to_screen(p: Point2) -> tuple[float, float]:
        return (off_x + (p.y1 - lo_x) * scale,
                height - off_y - (p.y2 - lo_y) * scale)

    return to_screen


def emit_svg(w: Wireframe, width: int = 800, height: int = 800,
             stroke: str = "black", stroke_width: float = 1.0,
             labels: bool = False, vertex_radius: float = 0.0) -> str:
    """SVG 1.1 document: one line element per segment, optional vertex marks."""
    to_screen = _fit(w.points, width, height)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        '<g>',
    ]
    for i, j in w.segments:
        x1, y1 = to_screen(w.points[i])
        x2, y2 = to_screen(w.points[j])
        parts.append(f'<line x1="{x1:.3f}" y1="{y1:.3f}" x2="{x2:.3f}" '
                     f'y2="{y2:.3f}" stroke="{stroke}" '
                     f'stroke-width="{stroke_width}"/>')
    if vertex_radius > 0 or labels:
        for k, p in enumerate(w.points):
            x, y = to_screen(p)
            if vertex_radius > 0:
                parts.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" '
                             f'r="{vertex_radius}" fill="{stroke}"/>')
            if labels:
                parts.append(f'<text x="{x:.3f}" y="{y:.3f}" '
                             f'font-size="10">{k + 1}</text>')
    parts.append('</g>')
    parts.append('</svg>')
    return "\n".join(parts)


def emit_csv(w: Wireframe) -> str:
    """CSV ``index,y1,y2`` with 10-decimal fixed point, 1-based indices."""
    lines = ["index,y1,y2"]
    for k, p in enumerate(w.points):
        lines.append(f"{k + 1},{p.y1:.10f},{p.y2:.10f}")
    return "\n".join(lines) + "\n"


def render_png(w: Wireframe, path: str, width: int = 800, height: int = 800,
               stroke: str = "black", stroke_width: float = 1.0,
               labels: bool = False, dpi: int = 100) -> None:
    """Render the wireframe to a PNG file with matplotlib (Agg backend)."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    from matplotlib.collections import LineCollection

    fig, ax = plt.subplots(figsize=(width / dpi, height / dpi), dpi=dpi)
    segments = [((w.points[i].y1, w.points[i].y2),
                 (w.points[j].y1, w.points[j].y2)) for i, j in w.segments]
    ax.add_collection(LineCollection(segments, colors=stroke,
                                     linewidths=stroke_width))
    if labels:
        for k, p in enumerate(w.points):
            ax.annotate(str(k + 1), (p.y1, p.y2), fontsize=6)
    ax.set_aspect("equal")
    ax.autoscale()
    ax.margins(0.05)
    ax.set_axis_off()
    fig.savefig(path, bbox_inches="tight")
    plt.close(fig)

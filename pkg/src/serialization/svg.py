"""
SVG drawings of 3-variable Gröbner fans.

The fan is intersected with the plane a+b+c = 1 and drawn in an equilateral
chart: the a-vertex on the right, b on the left, c on top. The chart window
is the triangle where every barycentric coordinate is at least −extent;
with the default extent 0 it is the standard simplex itself. The positive
orthant is shaded gray on top.
"""

import math
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from ..algebra.monomials import dot
from ..config import get_config
from ..fan.facets import cone_of
from ..fan.summary import FanSummary
from ..utils.logger import get_logger

logger = get_logger(__name__)

Point = Tuple[Fraction, Fraction, Fraction]

PALETTE = (
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
    "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f",
)

_A = (math.sqrt(3) / 2, 0.5)
_B = (-math.sqrt(3) / 2, 0.5)
_C = (0.0, -1.0)


def clip_halfplane(polygon: List[Point], w: Sequence[int]) -> List[Point]:
    """Sutherland–Hodgman clip of a convex polygon to ⟨w,p⟩ ≥ 0, exactly."""
    out: List[Point] = []
    for i, p in enumerate(polygon):
        q = polygon[(i + 1) % len(polygon)]
        dp, dq = dot(w, p), dot(w, q)
        if dp >= 0:
            out.append(p)
        if (dp > 0 and dq < 0) or (dp < 0 and dq > 0):
            t = dp / (dp - dq)
            out.append(tuple(a + t * (b - a) for a, b in zip(p, q)))
    deduped: List[Point] = []
    for p in out:
        if not deduped or deduped[-1] != p:
            deduped.append(p)
    if len(deduped) > 1 and deduped[0] == deduped[-1]:
        deduped.pop()
    return deduped


def window(extent: Fraction) -> List[Point]:
    e = Fraction(extent)
    return [(1 + 2 * e, -e, -e), (-e, 1 + 2 * e, -e), (-e, -e, 1 + 2 * e)]


def _project(p: Point) -> Tuple[float, float]:
    a, b, c = (float(x) for x in p)
    return (a * _A[0] + b * _B[0] + c * _C[0], a * _A[1] + b * _B[1] + c * _C[1])


class _Canvas:
    def __init__(self, size: int, extent: Fraction, margin: int = 20):
        corners = [_project(p) for p in window(extent)]
        xs = [x for x, _ in corners]
        ys = [y for _, y in corners]
        self.scale = (size - 2 * margin) / max(max(xs) - min(xs), max(ys) - min(ys))
        self.dx = size / 2 - self.scale * (max(xs) + min(xs)) / 2
        self.dy = size / 2 - self.scale * (max(ys) + min(ys)) / 2

    def xy(self, p: Point) -> Tuple[str, str]:
        x, y = _project(p)
        return f"{self.dx + self.scale * x:.2f}", f"{self.dy + self.scale * y:.2f}"

    def points(self, polygon: Sequence[Point]) -> str:
        return " ".join(",".join(self.xy(p)) for p in polygon)


def render_slice_svg(
    summary: FanSummary,
    variables: Optional[Sequence[str]] = None,
    canvas_size: Optional[int] = None,
    extent: Optional[Fraction] = None,
) -> str:
    """
    Draw the fan of a 3-variable ideal.

    Maximal cones become filled polygons, the walls between them (the
    2-dimensional cones) line segments.

    Args:
        summary: Fan with every maximal cone listed
        variables: Labels of the three chart vertices
        canvas_size: Width and height in pixels (config render.canvas_size)
        extent: How far the chart window reaches outside the simplex (config render.extent, 0 by default)

    Returns:
        SVG 1.1 document

    Raises:
        ValueError: If the ring does not have exactly 3 variables or only
            orbit representatives are listed
    """
    if summary.n != 3:
        raise ValueError(f"slice rendering needs exactly 3 variables, the ring has {summary.n}")
    if summary.orbit_sizes is not None and summary.cone_count != len(summary.maximal_cones):
        raise ValueError("slice rendering needs every maximal cone, not orbit representatives")

    config = get_config()
    size = canvas_size or config.get("render.canvas_size", 600)
    extent = Fraction(extent if extent is not None else config.get("render.extent", 0))
    names = list(variables or ("x1", "x2", "x3"))
    canvas = _Canvas(size, extent)

    regions: List[str] = []
    walls: Dict[Tuple[Point, Point], None] = {}
    for index, G in enumerate(summary.maximal_cones):
        C = cone_of(G)
        polygon = window(extent)
        for a in C.inequalities:
            polygon = clip_halfplane(polygon, a)
            if len(polygon) < 3:
                break
        if len(polygon) < 3:
            continue
        color = PALETTE[index % len(PALETTE)]
        regions.append(
            f'<polygon class="region" points="{canvas.points(polygon)}" fill="{color}" stroke="none"/>'
        )
        for a in C.inequalities:
            on_wall = [p for p in polygon if dot(a, p) == 0]
            if len(on_wall) == 2:
                walls.setdefault(tuple(sorted(on_wall)), None)

    lines = []
    for p, q in walls:
        (x1, y1), (x2, y2) = canvas.xy(p), canvas.xy(q)
        lines.append(f'<line class="wall" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#000000" stroke-width="1"/>')

    simplex = [(Fraction(1), Fraction(0), Fraction(0)), (Fraction(0), Fraction(1), Fraction(0)), (Fraction(0), Fraction(0), Fraction(1))]
    labels = []
    for p, name, anchor in zip(simplex, names, ("start", "end", "middle")):
        x, y = canvas.xy(p)
        labels.append(f'<text x="{x}" y="{y}" text-anchor="{anchor}" font-size="12">{name}</text>')

    logger.info(f"Rendered {len(regions)} regions and {len(walls)} walls")
    return "\n".join([
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f"<title>Groebner fan slice a+b+c=1 ({len(regions)} cones)</title>",
        f'<polygon class="window" points="{canvas.points(window(extent))}" fill="#ffffff" stroke="#000000" stroke-width="1"/>',
        '<g id="regions">', *regions, "</g>",
        '<g id="walls">', *lines, "</g>",
        f'<polygon id="positive-orthant" points="{canvas.points(simplex)}" fill="#808080" fill-opacity="0.35" stroke="#404040" stroke-width="1"/>',
        '<g id="labels">', *labels, "</g>",
        "</svg>",
        "",
    ])

"""Deterministic SVG rendering of an instance, colored by nesting depth."""

from __future__ import annotations

from typing import Optional, Sequence

from .forest import NestingForest
from .geometry import Polygon
from .sweep import nesting_forest

_PALETTE = (
    "#4e79a7",
    "#f28e2b",
    "#59a356",
    "#e15759",
    "#76b7b2",
    "#edc948",
    "#b07aa1",
    "#9c755f",
)


def render_svg(
    polygons: Sequence[Polygon], forest: Optional[NestingForest] = None
) -> str:
    """SVG with one filled path per polygon, deeper polygons painted later.

    The y-axis is flipped so that larger y is up, matching the geometric
    convention rather than the SVG one.
    """
    if forest is None:
        forest = nesting_forest(polygons)
    depths = forest.depths()
    min_x = min(float(p.x_min) for p in polygons)
    max_x = max(float(p.x_max) for p in polygons)
    min_y = min(float(v.y) for p in polygons for v in p.vertices)
    max_y = max(float(v.y) for p in polygons for v in p.vertices)
    width = max(max_x - min_x, 1.0)
    height = max(max_y - min_y, 1.0)
    pad = 0.03 * max(width, height)

    def tx(x: float) -> float:
        return x - min_x + pad

    def ty(y: float) -> float:
        return max_y - y + pad

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="0 0 {width + 2 * pad:g} {height + 2 * pad:g}">',
    ]
    order = sorted(polygons, key=lambda p: (depths[p.id], p.id))
    stroke_w = max(width, height) / 400
    for p in order:
        d = depths[p.id]
        pts = " ".join(
            f"{tx(float(v.x)):g},{ty(float(v.y)):g}" for v in p.vertices
        )
        fill = _PALETTE[d % len(_PALETTE)]
        lines.append(
            f'<polygon points="{pts}" fill="{fill}" fill-opacity="0.85" '
            f'stroke="#222222" stroke-width="{stroke_w:g}"/>'
        )
    font = max(width, height) / 40
    for p in order:
        cx = sum(float(v.x) for v in p.vertices) / len(p.vertices)
        cy = sum(float(v.y) for v in p.vertices) / len(p.vertices)
        lines.append(
            f'<text x="{tx(cx):g}" y="{ty(cy):g}" font-size="{font:g}" '
            f'text-anchor="middle" fill="#111111">'
            f"{p.id}({depths[p.id]})</text>"
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"

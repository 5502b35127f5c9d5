"""SVG pictures of regions, tilings and boundary heights.

Coordinates are written as decimals for display; the exact rational value
of every vertex and tile is kept in a comment or ``data-`` attribute.
"""
from __future__ import annotations

from dataclasses import dataclass
from .rational import Rat
from typing import List, Optional
from xml.sax.saxutils import escape

from .geometry import RectilinearPolygon
from .groupword import fmt_rat
from .heights import BoundaryHeights
from .tiler import Tiling, _inward


@dataclass(frozen=True)
class RenderSpec:
    scale: float = 120.0  # pixels per unit
    show_heights: bool = False
    show_grid: bool = False
    label_tiles: bool = False
    margin: float = 24.0

    def __post_init__(self):
        if self.scale <= 0:
            raise ValueError("scale must be positive")


def _num(v: float) -> str:
    return f"{v:.4f}".rstrip("0").rstrip(".")


def render_svg(
    region: RectilinearPolygon,
    tiling: Optional[Tiling] = None,
    heights: Optional[BoundaryHeights] = None,
    spec: RenderSpec = RenderSpec(),
) -> str:
    x0, y0, x1, y1 = region.bbox
    s, m = spec.scale, spec.margin
    width = float(x1 - x0) * s + 2 * m
    height = float(y1 - y0) * s + 2 * m

    def px(x: Rat) -> str:
        return _num(float(x - x0) * s + m)

    def py(y: Rat) -> str:
        # SVG y grows downwards
        return _num(float(y1 - y) * s + m)

    out: List[str] = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_num(width)}" height="{_num(height)}" viewBox="0 0 {_num(width)} {_num(height)}">',
        "<!-- region vertices: "
        + " ".join(f"({fmt_rat(x)},{fmt_rat(y)})" for x, y in region.vertices)
        + " -->",
    ]
    if spec.show_grid:
        out.append('<g class="grid" stroke="#ddd" stroke-width="0.5">')
        for gx in range(int(x0), int(x1) + 1):
            out.append(f'<line x1="{px(gx)}" y1="{py(y0)}" x2="{px(gx)}" y2="{py(y1)}"/>')
        for gy in range(int(y0), int(y1) + 1):
            out.append(f'<line x1="{px(x0)}" y1="{py(gy)}" x2="{px(x1)}" y2="{py(gy)}"/>')
        out.append("</g>")
    if tiling is not None:
        out.append('<g class="tiles" fill="#f4e6c8" stroke="#555" stroke-width="1">')
        for i, r in enumerate(tiling.tiles):
            exact = escape(str(r), {'"': "&quot;"})
            out.append(
                f'<rect x="{px(r.x0)}" y="{py(r.y1)}" width="{_num(float(r.width) * s)}" '
                f'height="{_num(float(r.height) * s)}" data-tile="{i}" data-exact="{exact}"/>'
            )
        out.append("</g>")
        if spec.label_tiles:
            out.append('<g class="tile-labels" font-size="10" text-anchor="middle">')
            for i, r in enumerate(tiling.tiles):
                out.append(f'<text x="{px((r.x0 + r.x1) / 2)}" y="{py((r.y0 + r.y1) / 2)}">{i}</text>')
            out.append("</g>")
    points = " ".join(f"{px(x)},{py(y)}" for x, y in region.vertices)
    out.append(f'<polygon class="region" points="{points}" fill="none" stroke="#000" stroke-width="2"/>')
    if spec.show_heights and heights is not None:
        out.append('<g class="heights" font-size="11" fill="#a00" text-anchor="middle">')
        for e, prof in zip(region.edges, heights.profiles):
            mx, my = e.point_at(e.length / 2)
            # nudge the label outward, against the inward normal
            nx, ny = _inward(e)
            lx = float(mx - x0) * s + m - 12 * nx
            ly = float(y1 - my) * s + m + 12 * ny + 4
            out.append(
                f'<text x="{_num(lx)}" y="{_num(ly)}" data-edge="{e.index}">{prof.generic_height}</text>'
            )
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"

"""Exact rectilinear polygons, rectangles and boundary words."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from .rational import Rat
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import (
    IrrationalCoordinate,
    NotRectilinear,
    NotSimple,
    RectNotBoundaryAttached,
    RectNotInside,
    ZeroLengthEdge,
)
from .groupword import H, V, GroupWord, as_rat, fmt_rat, identity, reduce

Point = Tuple[Rat, Rat]
_RAT = type(Rat(0))


@dataclass(frozen=True)
class Edge:
    index: int
    start: Point
    end: Point
    axis: str
    signed_length: Rat

    @property
    def length(self) -> Rat:
        return abs(self.signed_length)

    def point_at(self, offset: Rat) -> Point:
        sgn = 1 if self.signed_length > 0 else -1
        if self.axis == H:
            return (self.start[0] + sgn * offset, self.start[1])
        return (self.start[0], self.start[1] + sgn * offset)

    def offset_of(self, p: Point) -> Optional[Rat]:
        """Offset of ``p`` along the closed edge, or None if ``p`` is off it."""
        if self.axis == H:
            if p[1] != self.start[1]:
                return None
            lo, hi = sorted((self.start[0], self.end[0]))
            if not lo <= p[0] <= hi:
                return None
            return abs(p[0] - self.start[0])
        if p[0] != self.start[0]:
            return None
        lo, hi = sorted((self.start[1], self.end[1]))
        if not lo <= p[1] <= hi:
            return None
        return abs(p[1] - self.start[1])


@dataclass(frozen=True, order=True)
class Rect:
    x0: Rat
    y0: Rat
    x1: Rat
    y1: Rat

    def __post_init__(self):
        for name in ("x0", "y0", "x1", "y1"):
            v = getattr(self, name)
            if type(v) is not _RAT:
                object.__setattr__(self, name, as_rat(v))
        if not (self.x0 < self.x1 and self.y0 < self.y1):
            raise ValueError(f"degenerate rectangle {self}")

    @property
    def width(self) -> Rat:
        return self.x1 - self.x0

    @property
    def height(self) -> Rat:
        return self.y1 - self.y0

    @property
    def area(self) -> Rat:
        return self.width * self.height

    def corners(self) -> List[Point]:
        return [(self.x0, self.y0), (self.x1, self.y0), (self.x1, self.y1), (self.x0, self.y1)]

    def boundary_path(self) -> list:
        """Raw ccw letters from the lower-left corner."""
        return [(H, self.width), (V, self.height), (H, -self.width), (V, -self.height)]

    def contains_point(self, p: Point) -> bool:
        return self.x0 <= p[0] <= self.x1 and self.y0 <= p[1] <= self.y1

    def on_boundary(self, p: Point) -> bool:
        return self.contains_point(p) and (
            p[0] in (self.x0, self.x1) or p[1] in (self.y0, self.y1)
        )

    def interiors_overlap(self, other: "Rect") -> bool:
        return (
            self.x0 < other.x1 and other.x0 < self.x1 and self.y0 < other.y1 and other.y0 < self.y1
        )

    def as_list(self) -> List[str]:
        return [fmt_rat(v) for v in (self.x0, self.y0, self.x1, self.y1)]

    def __str__(self) -> str:
        return "[" + ", ".join(self.as_list()) + "]"


def _signed_area2(pts: Sequence[Point]) -> Rat:
    s = Rat(0)
    n = len(pts)
    for i in range(n):
        x0, y0 = pts[i]
        x1, y1 = pts[(i + 1) % n]
        s += x0 * y1 - x1 * y0
    return s


def _is_corner(prev: Point, cur: Point, nxt: Point) -> bool:
    return not (prev[0] == cur[0] == nxt[0] or prev[1] == cur[1] == nxt[1])


@dataclass(frozen=True)
class RectilinearPolygon:
    """Simple rectilinear polygon, ccw, with ``vertices[0]`` as basepoint.

    Construct through :func:`validate`; the constructor trusts its input.
    """

    vertices: Tuple[Point, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    @cached_property
    def edges(self) -> Tuple[Edge, ...]:
        out = []
        n = len(self.vertices)
        for i in range(n):
            a, b = self.vertices[i], self.vertices[(i + 1) % n]
            if a[1] == b[1]:
                out.append(Edge(i, a, b, H, b[0] - a[0]))
            else:
                out.append(Edge(i, a, b, V, b[1] - a[1]))
        return tuple(out)

    @cached_property
    def area(self) -> Rat:
        return _signed_area2(self.vertices) / 2

    @property
    def basepoint(self) -> Point:
        return self.vertices[0]

    @cached_property
    def bbox(self) -> Tuple[Rat, Rat, Rat, Rat]:
        xs = [p[0] for p in self.vertices]
        ys = [p[1] for p in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)

    def contains_strict(self, p: Point) -> bool:
        """Point strictly inside (ray cast; caller avoids boundary points)."""
        x, y = p
        inside = False
        for e in self.edges:
            if e.axis != V:
                continue
            lo, hi = sorted((e.start[1], e.end[1]))
            if e.start[0] > x and lo <= y < hi:
                inside = not inside
        return inside

    def on_boundary(self, p: Point) -> bool:
        return any(e.offset_of(p) is not None for e in self.edges)

    def locate(self, p: Point) -> Optional[Tuple[int, Rat]]:
        """(edge index, offset) of a boundary point; vertices map to offset 0."""
        for e in self.edges:
            off = e.offset_of(p)
            if off is not None and off != e.length:
                return e.index, off
        return None

    def translated(self, dx, dy) -> "RectilinearPolygon":
        return RectilinearPolygon(tuple((x + dx, y + dy) for x, y in self.vertices))

    def rebased(self, index: int) -> "RectilinearPolygon":
        n = len(self.vertices)
        return RectilinearPolygon(tuple(self.vertices[(index + i) % n] for i in range(n)))

    def key(self) -> Tuple:
        return tuple(self.vertices)

    def __str__(self) -> str:
        return " ".join(f"({fmt_rat(x)},{fmt_rat(y)})" for x, y in self.vertices)


def _coerce_point(p) -> Point:
    try:
        return (as_rat(p[0]), as_rat(p[1]))
    except (TypeError, ValueError) as exc:
        raise IrrationalCoordinate(str(exc)) from exc


def _segments_touch(a: Edge, b: Edge) -> bool:
    ax0, ax1 = sorted((a.start[0], a.end[0]))
    ay0, ay1 = sorted((a.start[1], a.end[1]))
    bx0, bx1 = sorted((b.start[0], b.end[0]))
    by0, by1 = sorted((b.start[1], b.end[1]))
    return ax0 <= bx1 and bx0 <= ax1 and ay0 <= by1 and by0 <= ay1


def check_simple(poly: RectilinearPolygon) -> None:
    edges = poly.edges
    n = len(edges)
    for i in range(n):
        for j in range(i + 1, n):
            adjacent = j == i + 1 or (i == 0 and j == n - 1)
            if adjacent:
                # perpendicular neighbours meet only at the shared vertex
                continue
            if _segments_touch(edges[i], edges[j]):
                raise NotSimple(f"edges {i} and {j} intersect")


def validate(points: Iterable, translate: bool = True) -> RectilinearPolygon:
    """Normalize a vertex loop into a valid ccw polygon.

    Collinear vertices are merged, orientation is made ccw and, with
    ``translate``, the basepoint is moved to the origin.  The basepoint is
    the first input vertex, or the next corner after it if it is collinear.
    """
    pts = [_coerce_point(p) for p in points]
    if len(pts) >= 2 and pts[0] == pts[-1]:
        pts.pop()
    if len(pts) < 4:
        raise NotRectilinear("need at least 4 vertices")
    n = len(pts)
    for i in range(n):
        a, b = pts[i], pts[(i + 1) % n]
        if a == b:
            raise ZeroLengthEdge(f"repeated vertex {a}")
        if a[0] != b[0] and a[1] != b[1]:
            raise NotRectilinear(f"edge {a} -> {b} is not axis-parallel")
    # merge collinear runs, keeping order from the basepoint
    start = 0
    while not _is_corner(pts[start - 1], pts[start], pts[(start + 1) % n]):
        start += 1
        if start == n:
            raise NotRectilinear("degenerate polygon")
    pts = pts[start:] + pts[:start]
    corners = [pts[0]]
    for i in range(1, n):
        if _is_corner(pts[i - 1], pts[i], pts[(i + 1) % n]):
            corners.append(pts[i])
    # a collinear fold-back (spike) shows up as repeated x or y with reversal
    m = len(corners)
    for i in range(m):
        a, b, c = corners[i - 1], corners[i], corners[(i + 1) % m]
        if (a[0] == b[0]) == (b[0] == c[0]):
            raise NotSimple("boundary folds back on itself")
    if m < 4 or m % 2:
        raise NotRectilinear("edges must alternate horizontal/vertical")
    area2 = _signed_area2(corners)
    if area2 == 0:
        raise NotSimple("zero area")
    if area2 < 0:
        corners = [corners[0]] + corners[:0:-1]
    poly = RectilinearPolygon(tuple(corners))
    check_simple(poly)
    if translate:
        bx, by = poly.basepoint
        poly = poly.translated(-bx, -by)
    return poly


def boundary_word(p: RectilinearPolygon, modulus=Rat(1)) -> GroupWord:
    return reduce(((e.axis, e.signed_length) for e in p.edges), modulus=modulus)


def prefix_words(p: RectilinearPolygon, start: Optional[GroupWord] = None) -> List[GroupWord]:
    """Reduced word of the ccw path from the basepoint to each vertex."""
    w = start if start is not None else identity()
    out = [w]
    for e in p.edges[:-1]:
        w = w.append(e.axis, e.signed_length)
        out.append(w)
    return out


def prefix_word_at(p: RectilinearPolygon, edge_index: int, offset) -> GroupWord:
    e = p.edges[edge_index]
    sgn = 1 if e.signed_length > 0 else -1
    return prefix_words(p)[edge_index].append(e.axis, sgn * as_rat(offset))


def cw_prefix_words(p: RectilinearPolygon) -> List[GroupWord]:
    """Reduced word of the clockwise path from the basepoint to each vertex."""
    n = len(p.vertices)
    out = [identity()] * n
    w = identity()
    for i in range(n - 1, 0, -1):
        e = p.edges[i]
        w = w.append(e.axis, -e.signed_length)
        out[i] = w
    return out


def paths_equal_in_G(a, b) -> bool:
    return reduce(a) == reduce(b)


def polygon_from_path(raw, origin: Point = (Rat(0), Rat(0))) -> RectilinearPolygon:
    """Polygon traced by a closed letter path starting at ``origin``."""
    x, y = origin
    pts = [(x, y)]
    for axis, t in raw:
        t = as_rat(t)
        if axis == H:
            x += t
        else:
            y += t
        pts.append((x, y))
    if pts[-1] != pts[0]:
        raise NotRectilinear("path is not closed")
    return validate(pts[:-1], translate=False)


def grid_unit(p: RectilinearPolygon) -> int:
    L = 2
    for x, y in p.vertices:
        L = math.lcm(L, x.denominator, y.denominator)
    return L


def rect_polygon(r: Rect) -> RectilinearPolygon:
    return RectilinearPolygon(tuple(r.corners()))


# ---------------------------------------------------------------------------
# cell decomposition on the compressed coordinate grid


class CellGrid:
    """Cells of the grid spanned by the distinct coordinates of some polygons."""

    def __init__(self, xs: Iterable[Rat], ys: Iterable[Rat]):
        self.xs = sorted(set(xs))
        self.ys = sorted(set(ys))

    def cell_rect(self, i: int, j: int) -> Rect:
        return Rect(self.xs[i], self.ys[j], self.xs[i + 1], self.ys[j + 1])

    def centre(self, i: int, j: int) -> Point:
        return ((self.xs[i] + self.xs[i + 1]) / 2, (self.ys[j] + self.ys[j + 1]) / 2)

    def cells_inside(self, poly: RectilinearPolygon) -> set:
        out = set()
        vert = [e for e in poly.edges if e.axis == V]
        for j in range(len(self.ys) - 1):
            cy = (self.ys[j] + self.ys[j + 1]) / 2
            crossings = sorted(
                e.start[0] for e in vert if min(e.start[1], e.end[1]) < cy < max(e.start[1], e.end[1])
            )
            for a, b in zip(crossings[::2], crossings[1::2]):
                for i in range(len(self.xs) - 1):
                    if a <= self.xs[i] and self.xs[i + 1] <= b:
                        out.add((i, j))
        return out

    def cells_of_rect(self, r: Rect) -> set:
        return {
            (i, j)
            for i in range(len(self.xs) - 1)
            for j in range(len(self.ys) - 1)
            if r.x0 <= self.xs[i] and self.xs[i + 1] <= r.x1 and r.y0 <= self.ys[j] and self.ys[j + 1] <= r.y1
        }

    def components(self, cells: set) -> List[set]:
        seen = set()
        out = []
        for c in sorted(cells, key=lambda c: (c[1], c[0])):
            if c in seen:
                continue
            comp = {c}
            stack = [c]
            seen.add(c)
            while stack:
                i, j = stack.pop()
                for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                    if nb in cells and nb not in seen:
                        seen.add(nb)
                        comp.add(nb)
                        stack.append(nb)
            out.append(comp)
        return out

    def trace(self, cells: set) -> RectilinearPolygon:
        """Boundary of an edge-connected, hole-free cell set.

        The basepoint is the lowest, then leftmost, vertex.
        """
        xs, ys = self.xs, self.ys
        succ: Dict[Tuple[int, int], Tuple[int, int]] = {}
        for i, j in cells:
            # directed ccw unit edges on the index lattice, kept if not shared
            if (i, j - 1) not in cells:
                _add_edge(succ, (i, j), (i + 1, j))
            if (i + 1, j) not in cells:
                _add_edge(succ, (i + 1, j), (i + 1, j + 1))
            if (i, j + 1) not in cells:
                _add_edge(succ, (i + 1, j + 1), (i, j + 1))
            if (i - 1, j) not in cells:
                _add_edge(succ, (i, j + 1), (i, j))
        start = min(succ, key=lambda p: (p[1], p[0]))
        loop = [start]
        cur = succ[start]
        while cur != start:
            loop.append(cur)
            cur = succ[cur]
            if len(loop) > len(succ):
                raise NotSimple("boundary does not close")
        if len(loop) != len(succ):
            raise NotSimple("cell set has a hole")
        pts = [(xs[i], ys[j]) for i, j in loop]
        m = len(pts)
        corners = [p for k, p in enumerate(pts) if _is_corner(pts[k - 1], p, pts[(k + 1) % m])]
        poly = RectilinearPolygon(tuple(corners))
        base = min(range(len(corners)), key=lambda k: (corners[k][1], corners[k][0]))
        return poly.rebased(base)


def _add_edge(succ, a, b):
    if a in succ:
        raise NotSimple(f"boundary touches itself at a point")
    succ[a] = b


def side_on_boundary(p: RectilinearPolygon, a: Point, b: Point) -> bool:
    """Whether the closed segment a-b is covered by boundary edges of p."""
    if a[1] == b[1]:
        lo, hi = sorted((a[0], b[0]))
        spans = [
            sorted((e.start[0], e.end[0])) for e in p.edges if e.axis == H and e.start[1] == a[1]
        ]
    else:
        lo, hi = sorted((a[1], b[1]))
        spans = [
            sorted((e.start[1], e.end[1])) for e in p.edges if e.axis == V and e.start[0] == a[0]
        ]
    cur = lo
    for s0, s1 in sorted(spans):
        if s0 <= cur < s1:
            cur = s1
    return cur >= hi


def subtract_rect(p: RectilinearPolygon, r: Rect) -> List[RectilinearPolygon]:
    """Connected pieces of ``p`` minus a boundary-attached rectangle.

    Pieces meeting only at a point come back separately.  Each piece is
    based at its lowest-then-leftmost vertex.
    """
    grid = CellGrid(
        [v[0] for v in p.vertices] + [r.x0, r.x1], [v[1] for v in p.vertices] + [r.y0, r.y1]
    )
    inside = grid.cells_inside(p)
    rc = grid.cells_of_rect(r)
    if not rc <= inside:
        raise RectNotInside(f"{r} is not inside the polygon")
    c = r.corners()
    if not any(side_on_boundary(p, c[k], c[(k + 1) % 4]) for k in range(4)):
        raise RectNotBoundaryAttached(f"{r} has no side on the boundary")
    rest = inside - rc
    return [grid.trace(comp) for comp in grid.components(rest)]


def cells_to_polygons(grid: CellGrid, cells: set) -> List[RectilinearPolygon]:
    return [grid.trace(comp) for comp in grid.components(cells)]


# ---------------------------------------------------------------------------
# text format


def parse_polygon_text(text: str) -> List[Point]:
    pts = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise IrrationalCoordinate(f"line {lineno}: expected 'x y', got {line!r}")
        pts.append(_coerce_point(parts))
    return pts


def read_polygon(path, translate: bool = True) -> RectilinearPolygon:
    with open(path) as fh:
        return validate(parse_polygon_text(fh.read()), translate=translate)


def format_polygon(p: RectilinearPolygon) -> str:
    return "".join(f"{fmt_rat(x)} {fmt_rat(y)}\n" for x, y in p.vertices)

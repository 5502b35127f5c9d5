"""Tileability test and tiling construction by boundary-attached rectangles.

Each step picks the lowest-index boundary edge of maximal height, places a
rectangle on it reaching inward, and recurses on what is left.  Pieces
inherit the words (hence heights) of the original region.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from .rational import Rat
from typing import List, Optional, Sequence, Tuple

from .errors import (
    ContactNotInteger,
    InternalInvariant,
    NonIntegerEdge,
    UnsupportedLattice,
)
from .geometry import (
    CellGrid,
    Edge,
    Point,
    Rect,
    RectilinearPolygon,
    boundary_word,
    grid_unit,
    prefix_words,
    subtract_rect,
)
from .groupword import H, V, GroupWord, as_rat, identity, reduce
from .heights import BoundaryHeights, HeightConfig, boundary_heights, edge_profile, point_word_on_rect

log = logging.getLogger(__name__)

NULL_BOUNDARY = "null-boundary fails"
HEIGHT_MISMATCH = "height mismatch on cut"
MAX_EDGE_NOT_INTEGER = "max edge not integer"

FAST = "fast"
CANONICAL = "canonical"


@dataclass(frozen=True)
class Tiling:
    region: RectilinearPolygon
    tiles: Tuple[Rect, ...]
    lattice_scale: Rat = Rat(1)
    mode: str = FAST
    beta: Rat = Rat(1, 2)
    k: Optional[int] = None

    def key(self) -> Tuple[Rect, ...]:
        return tuple(sorted(self.tiles))

    def same_tiles(self, other: "Tiling") -> bool:
        return self.key() == other.key()

    def with_tiles(self, tiles: Sequence[Rect]) -> "Tiling":
        return Tiling(self.region, tuple(tiles), self.lattice_scale, self.mode, self.beta, self.k)


@dataclass(frozen=True)
class PlacementStep:
    component: RectilinearPolygon
    words: Tuple[GroupWord, ...]
    edge_index: int
    edge_length: Rat
    r: Rat
    case: int
    rect: Rect
    max_height: int
    min_height: int

    @property
    def contact(self) -> Rat:
        s = self.component.edges[self.edge_index]
        return contact_length(self.component, s, self.r)


@dataclass
class TileOutcome:
    tiled: bool
    tiling: Optional[Tiling] = None
    reason: Optional[str] = None
    detail: str = ""
    steps: List[PlacementStep] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.tiled


class _Untileable(Exception):
    def __init__(self, reason: str, detail: str = ""):
        super().__init__(detail)
        self.reason = reason
        self.detail = detail


# ---------------------------------------------------------------------------
# small helpers


def _is_int(q: Rat) -> bool:
    return q.denominator == 1


def scale_polygon(p: RectilinearPolygon, sx, sy) -> RectilinearPolygon:
    sx, sy = as_rat(sx), as_rat(sy)
    if sx <= 0 or sy <= 0:
        raise ValueError("scale factors must be positive")
    return RectilinearPolygon(tuple((x * sx, y * sy) for x, y in p.vertices))


def scale_rect(r: Rect, sx, sy) -> Rect:
    return Rect(r.x0 * sx, r.y0 * sy, r.x1 * sx, r.y1 * sy)


def _direction(e: Edge) -> Tuple[int, int]:
    sgn = 1 if e.signed_length > 0 else -1
    return (sgn, 0) if e.axis == H else (0, sgn)


def _inward(e: Edge) -> Tuple[int, int]:
    dx, dy = _direction(e)
    return (-dy, dx)  # interior is on the left of a ccw edge


def _dot(p: Point, a: Point, d: Tuple[int, int]) -> Rat:
    return (p[0] - a[0]) * d[0] + (p[1] - a[1]) * d[1]


def obstruction_distance(p: RectilinearPolygon, s: Edge) -> Rat:
    """First distance at which the sweep of ``s`` inward meets the boundary
    at an interior point of the swept segment."""
    d, n = _direction(s), _inward(s)
    a = s.start
    best = None
    for e in p.edges:
        if e.index == s.index:
            continue
        w0, w1 = sorted((_dot(e.start, a, d), _dot(e.end, a, d)))
        u0, u1 = sorted((_dot(e.start, a, n), _dot(e.end, a, n)))
        if e.axis == s.axis:
            if u0 > 0 and w0 < s.length and w1 > 0:
                cand = u0
            else:
                continue
        else:
            if 0 < w0 < s.length and u1 > 0:
                cand = u0 if u0 > 0 else None
                if cand is None:
                    raise InternalInvariant(f"edge {e.index} crosses edge {s.index}")
            else:
                continue
        if best is None or cand < best:
            best = cand
    if best is None:
        raise InternalInvariant(f"no obstruction opposite edge {s.index}")
    return best


def contact_length(p: RectilinearPolygon, s: Edge, r: Rat) -> Rat:
    d, n = _direction(s), _inward(s)
    a = s.start
    total = Rat(0)
    for e in p.edges:
        if e.axis != s.axis or _dot(e.start, a, n) != r:
            continue
        w0, w1 = sorted((_dot(e.start, a, d), _dot(e.end, a, d)))
        total += max(Rat(0), min(w1, s.length) - max(w0, Rat(0)))
    return total


def _strip_rect(s: Edge, r: Rat) -> Rect:
    n = _inward(s)
    a, b = s.start, s.end
    pts = [a, b, (b[0] + r * n[0], b[1] + r * n[1]), (a[0] + r * n[0], a[1] + r * n[1])]
    xs = [q[0] for q in pts]
    ys = [q[1] for q in pts]
    return Rect(min(xs), min(ys), max(xs), max(ys))


def _word_at_offset(words, p: RectilinearPolygon, edge: Edge, offset: Rat) -> GroupWord:
    sgn = 1 if edge.signed_length > 0 else -1
    return words[edge.index].append(edge.axis, sgn * offset)


def rect_corner_word(comp: RectilinearPolygon, words, s: Edge, rect: Rect) -> GroupWord:
    """Word at the lower-left corner of a rectangle resting on edge ``s``."""
    g_start = words[s.index]
    back = point_word_on_rect(identity(), rect, s.start)
    return g_start * back.inverse()


def inherit_words(
    child: RectilinearPolygon,
    parent: RectilinearPolygon,
    parent_words: Sequence[GroupWord],
    rect: Rect,
    rect_ll: GroupWord,
) -> Tuple[GroupWord, ...]:
    """Words at the child's vertices, checked wherever parent boundary and
    the new rectangle meet."""
    out = []
    for v in child.vertices:
        cands = set()
        for e in parent.edges:
            off = e.offset_of(v)
            if off is not None:
                cands.add(_word_at_offset(parent_words, parent, e, off))
        if rect.on_boundary(v):
            cands.add(point_word_on_rect(rect_ll, rect, v))
        if len(cands) != 1:
            if not cands:
                raise InternalInvariant(f"child vertex {v} on neither parent nor rectangle")
            raise _Untileable(HEIGHT_MISMATCH, f"words disagree at {v}")
        out.append(cands.pop())
    for e in child.edges:
        j = (e.index + 1) % len(child.vertices)
        if out[e.index].append(e.axis, e.signed_length) != out[j]:
            raise _Untileable(HEIGHT_MISMATCH, f"words disagree along edge ending at {e.end}")
    return tuple(out)


# ---------------------------------------------------------------------------
# trivial tiling


def trivial_tile(p: RectilinearPolygon) -> List[Rect]:
    """Height-1 horizontal slabs of a polygon whose edges all have integer length."""
    for e in p.edges:
        if not _is_int(e.length):
            raise NonIntegerEdge(f"edge {e.index} has length {e.length}")
    x_lo, y_lo, x_hi, y_hi = p.bbox
    vert = [e for e in p.edges if e.axis == V]
    tiles = []
    y = y_lo
    while y < y_hi:
        cy = y + Rat(1, 2)
        xs = sorted(
            e.start[0] for e in vert if min(e.start[1], e.end[1]) < cy < max(e.start[1], e.end[1])
        )
        for a, b in zip(xs[::2], xs[1::2]):
            tiles.append(Rect(a, y, b, y + 1))
        y += 1
    return tiles


# ---------------------------------------------------------------------------
# the placement rule


def place_max_edge_rect(
    comp: RectilinearPolygon,
    words: Sequence[GroupWord],
    cfg: HeightConfig,
    unit: Rat,
    bh: Optional[BoundaryHeights] = None,
) -> PlacementStep:
    """Rectangle on the first maximal-height edge, width ``min(r1, r2)``.

    ``r2`` is the obstruction distance; ``r1`` is the smallest multiple of
    ``unit`` at which the far side lies entirely below the maximum.
    """
    if bh is None:
        bh = boundary_heights(comp, cfg, words)
    M = bh.max_height
    candidates = [i for i in bh.argmax if _is_int(comp.edges[i].length)]
    if not candidates:
        raise _Untileable(MAX_EDGE_NOT_INTEGER, f"no integer-length edge reaches height {M}")
    s = comp.edges[candidates[0]]
    r2 = obstruction_distance(comp, s)
    n = _inward(s)
    perp = V if s.axis == H else H
    sign_perp = n[0] + n[1]  # exactly one component is nonzero
    g = words[s.index]
    r1 = None
    j = 1
    limit = min(Rat(1), r2)
    while j * unit <= limit:
        r = j * unit
        prof = edge_profile(g.append(perp, sign_perp * r), s.axis, s.signed_length, cfg)
        if max(prof.generic_height, prof.start_height, prof.end_height) < M:
            r1 = r
            break
        j += 1
    if r1 is not None and r1 <= r2:
        r, case = r1, 1
    else:
        r, case = r2, 2
    return PlacementStep(
        component=comp,
        words=tuple(words),
        edge_index=s.index,
        edge_length=s.length,
        r=r,
        case=case,
        rect=_strip_rect(s, r),
        max_height=M,
        min_height=bh.min_height,
    )


def _all_integer(p: RectilinearPolygon) -> bool:
    return all(_is_int(e.length) for e in p.edges)


def run_placements(
    region: RectilinearPolygon,
    mode: str = FAST,
    cfg: HeightConfig = HeightConfig(),
    max_steps: int = 100_000,
    strict_contact: bool = False,
) -> Tuple[List[Rect], List[PlacementStep]]:
    """Run the placement loop on an (already rescaled) region.

    Raises ``_Untileable`` when the region cannot be tiled.
    """
    if not boundary_word(region).is_identity:
        raise _Untileable(NULL_BOUNDARY, f"boundary word {boundary_word(region)}")
    unit = Rat(1, 2 * grid_unit(region))
    tiles: List[Rect] = []
    steps: List[PlacementStep] = []
    stack = [(region, tuple(prefix_words(region)))]
    while stack:
        comp, words = stack.pop()
        if mode == FAST and _all_integer(comp):
            tiles.extend(trivial_tile(comp))
            continue
        step = place_max_edge_rect(comp, words, cfg, unit)
        steps.append(step)
        tiles.append(step.rect)
        if len(steps) > max_steps:
            raise InternalInvariant("placement loop did not terminate")
        children = subtract_rect(comp, step.rect)
        if not children:
            continue
        ll = rect_corner_word(comp, words, comp.edges[step.edge_index], step.rect)
        inherited = [(c, inherit_words(c, comp, words, step.rect, ll)) for c in children]
        if step.case == 2 and strict_contact:
            c = step.contact
            if c <= 0 or not _is_int(c):
                raise ContactNotInteger(f"contact length {c} opposite edge {step.edge_index}")
        # pop order: lowest-leftmost piece first
        for item in sorted(inherited, key=lambda cw: (cw[0].basepoint[1], cw[0].basepoint[0]), reverse=True):
            stack.append(item)
    return tiles, steps


def tile(
    p: RectilinearPolygon,
    mode: str = FAST,
    cfg: HeightConfig = HeightConfig(),
    scale=1,
) -> TileOutcome:
    """Decide tileability by rectangles with a side in ``scale * Z``."""
    if mode not in (FAST, CANONICAL):
        raise ValueError(f"unknown mode {mode!r}")
    try:
        s = as_rat(scale)
    except (TypeError, ValueError) as exc:
        raise UnsupportedLattice(f"lattice scale must be an exact rational: {exc}") from exc
    if s <= 0:
        raise UnsupportedLattice("lattice scale must be positive")
    work = scale_polygon(p, 1 / s, 1 / s) if s != 1 else p
    try:
        tiles, steps = run_placements(work, mode, cfg)
    except _Untileable as u:
        log.debug("untileable: %s (%s)", u.reason, u.detail)
        return TileOutcome(False, reason=u.reason, detail=u.detail)
    if s != 1:
        tiles = [scale_rect(r, s, s) for r in tiles]
    tiling = Tiling(p, tuple(tiles), s, mode, cfg.beta, cfg.k)
    return TileOutcome(True, tiling=tiling, steps=steps)


def canonical_steps(p: RectilinearPolygon, cfg: HeightConfig = HeightConfig()) -> List[PlacementStep]:
    """Placement trace of the canonical run (raises ``_Untileable``)."""
    return run_placements(p, CANONICAL, cfg)[1]


# ---------------------------------------------------------------------------
# verification


@dataclass
class Verification:
    ok: bool
    diagnostics: List[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def verify_tiling(t: Tiling) -> Verification:
    """Exact partition check plus the lattice-side condition for every tile."""
    v = _verify_cached(t)
    return Verification(v.ok, list(v.diagnostics))


@lru_cache(maxsize=4096)
def _verify_cached(t: Tiling) -> Verification:
    diags: List[str] = []
    s = t.lattice_scale
    tiles = list(t.tiles)
    for i, r in enumerate(tiles):
        if not (_is_int(r.width / s) or _is_int(r.height / s)):
            diags.append(f"SideDiagnostic: tile {i} {r} has no side in {s}Z")
        elif not reduce(scale_rect(r, 1 / s, 1 / s).boundary_path()).is_identity:
            diags.append(f"WordDiagnostic: tile {i} boundary word is not trivial")
    order = sorted(range(len(tiles)), key=lambda i: tiles[i].x0)
    for a_pos, i in enumerate(order):
        ri = tiles[i]
        for j in order[a_pos + 1:]:
            rj = tiles[j]
            if rj.x0 >= ri.x1:
                break
            if ri.interiors_overlap(rj):
                diags.append(f"OverlapDiagnostic: tiles {i} and {j} overlap")
    grid = CellGrid(
        [v[0] for v in t.region.vertices] + [c for r in tiles for c in (r.x0, r.x1)],
        [v[1] for v in t.region.vertices] + [c for r in tiles for c in (r.y0, r.y1)],
    )
    inside = grid.cells_inside(t.region)
    for i, r in enumerate(tiles):
        if not grid.cells_of_rect(r) <= inside:
            diags.append(f"OutsideDiagnostic: tile {i} {r} leaves the region")
    total = sum((r.area for r in tiles), Rat(0))
    if total != t.region.area:
        diags.append(f"AreaDiagnostic: tiles cover {total}, region has {t.region.area}")
    return Verification(not diags, diags)


# ---------------------------------------------------------------------------
# bars


def tile_bars(p: RectilinearPolygon, n: int, m: int, cfg: HeightConfig = HeightConfig()) -> TileOutcome:
    """Tile an integer polyomino by horizontal ``n x 1`` and vertical ``1 x m`` bars."""
    if n < 1 or m < 1:
        raise ValueError("bar lengths must be positive")
    for x, y in p.vertices:
        if not (_is_int(x) and _is_int(y)):
            raise NonIntegerEdge("bar tiling needs integer coordinates")
    work = scale_polygon(p, Rat(1, n), Rat(1, m))
    try:
        tiles, steps = run_placements(work, FAST, cfg)
    except _Untileable as u:
        return TileOutcome(False, reason=u.reason, detail=u.detail)
    bars: List[Rect] = []
    for r in tiles:
        big = scale_rect(r, n, m)
        bars.extend(_split_into_bars(big, n, m))
    return TileOutcome(True, tiling=Tiling(p, tuple(bars), Rat(1)), steps=steps)


def _split_into_bars(r: Rect, n: int, m: int) -> List[Rect]:
    if not all(_is_int(c) for c in (r.x0, r.y0, r.x1, r.y1)):
        raise InternalInvariant(f"tile {r} is off the integer lattice")
    out = []
    if _is_int(r.width / n):
        for y in range(int(r.y0), int(r.y1)):
            for x in range(int(r.x0), int(r.x1), n):
                out.append(Rect(x, y, x + n, y + 1))
    elif _is_int(r.height / m):
        for x in range(int(r.x0), int(r.x1)):
            for y in range(int(r.y0), int(r.y1), m):
                out.append(Rect(x, y, x + 1, y + m))
    else:
        raise InternalInvariant(f"tile {r} has neither a side in {n}Z nor in {m}Z")
    return out

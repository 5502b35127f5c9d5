"""Split/merge moves between tilings and reduction to the canonical tiling.

A split replaces tile ``i`` by its lower (or left) piece and appends the
other piece at the end of the tile list.  A merge puts the union at the
smaller index and deletes the larger one.  A split is legal when both
pieces keep a side in the lattice; a merge needs a full common edge.
"""
from __future__ import annotations

import math

import hashlib
from dataclasses import dataclass, field
from .rational import Rat
from typing import List, Optional, Sequence, Tuple, Union

from .errors import DifferentRegions, IllegalMove, NoInteriorMax, NormalizationFailed
from .geometry import Rect, RectilinearPolygon, boundary_word
from .groupword import H, V, GroupWord, as_rat, fmt_rat, identity, reduce
from .heights import HeightConfig, boundary_heights, edge_profile, point_word_on_rect, tile_words
from .tiler import (
    CANONICAL,
    PlacementStep,
    Tiling,
    _Untileable,
    _direction,
    _inward,
    canonical_steps,
    scale_polygon,
    scale_rect,
    verify_tiling,
)


@dataclass(frozen=True)
class Split:
    tile: int
    axis: str  # direction of the new edge
    offset: Rat  # from the tile's bottom (H cut) or left side (V cut)

    def to_json(self) -> dict:
        return {"op": "split", "tile": self.tile, "axis": self.axis, "offset": fmt_rat(self.offset)}


@dataclass(frozen=True)
class Merge:
    a: int
    b: int

    def to_json(self) -> dict:
        return {"op": "merge", "a": self.a, "b": self.b}


Move = Union[Split, Merge]


def move_from_json(d: dict) -> Move:
    if d["op"] == "split":
        return Split(int(d["tile"]), d["axis"], as_rat(d["offset"]))
    if d["op"] == "merge":
        return Merge(int(d["a"]), int(d["b"]))
    raise ValueError(f"unknown move {d!r}")


def tiling_hash(t: Tiling) -> str:
    text = ";".join(str(r) for r in t.key())
    return hashlib.sha256(text.encode()).hexdigest()[:16]


@dataclass
class MoveTrace:
    start_hash: str
    moves: List[Move] = field(default_factory=list)
    end_hash: str = ""

    def __len__(self) -> int:
        return len(self.moves)

    def states(self, start: Tiling) -> List[Tiling]:
        """Every tiling along the trace, ``start`` included."""
        out = [start]
        for mv in self.moves:
            out.append(apply_move(out[-1], mv))
        return out

    def to_json(self) -> dict:
        return {
            "start": self.start_hash,
            "end": self.end_hash,
            "moves": [m.to_json() for m in self.moves],
        }


def _legal(r: Rect, s: Rat) -> bool:
    return (r.width / s).denominator == 1 or (r.height / s).denominator == 1


def split_rect(r: Rect, axis: str, offset: Rat) -> Tuple[Rect, Rect]:
    if axis == H:
        if not 0 < offset < r.height:
            raise IllegalMove(f"cut offset {offset} outside tile {r}")
        y = r.y0 + offset
        return Rect(r.x0, r.y0, r.x1, y), Rect(r.x0, y, r.x1, r.y1)
    if axis == V:
        if not 0 < offset < r.width:
            raise IllegalMove(f"cut offset {offset} outside tile {r}")
        x = r.x0 + offset
        return Rect(r.x0, r.y0, x, r.y1), Rect(x, r.y0, r.x1, r.y1)
    raise IllegalMove(f"bad axis {axis!r}")


def merged_rect(a: Rect, b: Rect) -> Optional[Rect]:
    if a.y0 == b.y0 and a.y1 == b.y1 and (a.x1 == b.x0 or b.x1 == a.x0):
        return Rect(min(a.x0, b.x0), a.y0, max(a.x1, b.x1), a.y1)
    if a.x0 == b.x0 and a.x1 == b.x1 and (a.y1 == b.y0 or b.y1 == a.y0):
        return Rect(a.x0, min(a.y0, b.y0), a.x1, max(a.y1, b.y1))
    return None


def apply_move(t: Tiling, mv: Move) -> Tiling:
    tiles = list(t.tiles)
    s = t.lattice_scale
    if isinstance(mv, Split):
        if not 0 <= mv.tile < len(tiles):
            raise IllegalMove(f"no tile {mv.tile}")
        lo, hi = split_rect(tiles[mv.tile], mv.axis, as_rat(mv.offset))
        if not (_legal(lo, s) and _legal(hi, s)):
            raise IllegalMove(f"edge not integer: pieces of tile {mv.tile} lose their lattice side")
        tiles[mv.tile] = lo
        tiles.append(hi)
    elif isinstance(mv, Merge):
        a, b = sorted((mv.a, mv.b))
        if a == b or not (0 <= a and b < len(tiles)):
            raise IllegalMove(f"bad tile pair {mv.a}, {mv.b}")
        u = merged_rect(tiles[a], tiles[b])
        if u is None:
            if not _adjacent(tiles[a], tiles[b]):
                raise IllegalMove(f"tiles not adjacent: {tiles[a]} and {tiles[b]}")
            raise IllegalMove(f"union not a rectangle: {tiles[a]} and {tiles[b]}")
        if not _legal(u, s):
            raise IllegalMove(f"edge not integer: union of tiles {a} and {b} has no lattice side")
        tiles[a] = u
        del tiles[b]
    else:
        raise TypeError(f"not a move: {mv!r}")
    return t.with_tiles(tiles)


def _adjacent(a: Rect, b: Rect) -> bool:
    if a.x1 == b.x0 or b.x1 == a.x0:
        return min(a.y1, b.y1) > max(a.y0, b.y0)
    if a.y1 == b.y0 or b.y1 == a.y0:
        return min(a.x1, b.x1) > max(a.x0, b.x0)
    return False


def replay(t: Tiling, moves: Sequence[Move], verify: str = "local") -> Tiling:
    """Apply moves in order and check every intermediate tiling.

    ``"local"`` checks each move on its own: a split of a tile into two
    pieces that both keep a lattice side, or a merge of two tiles sharing a
    full edge, turns a valid tiling into a valid tiling, so a verified start
    plus legal moves verifies every state.  ``"full"`` re-runs the complete
    partition check on every state; ``"none"`` skips checks on the start.
    """
    if verify not in ("local", "full", "none"):
        raise ValueError(f"unknown verify mode {verify!r}")
    if verify != "none":
        v = verify_tiling(t)
        if not v:
            raise IllegalMove(f"start tiling does not verify: {v.diagnostics}")
    for mv in moves:
        t = apply_move(t, mv)
        if verify == "full":
            v = verify_tiling(t)
            if not v:
                raise IllegalMove(f"{mv} produced an invalid tiling: {v.diagnostics}")
    return t


# ---------------------------------------------------------------------------
# a mutable working copy addressed by geometry


class _Work:
    """Working copy that records moves and keeps the group word at the
    lower-left corner of every tile, updated move by move."""

    def __init__(self, t: Tiling):
        self.t = t
        self.tiles: List[Rect] = list(t.tiles)
        self.moves: List[Move] = []
        self._words: Optional[dict] = None

    def words(self) -> dict:
        if self._words is None:
            origin = self.t.region.vertices[0]
            ws = tile_words(self.tiles, origin, identity(), check=False)
            self._words = dict(zip(self.tiles, ws))
        return self._words

    def index(self, r: Rect) -> int:
        try:
            return self.tiles.index(r)
        except ValueError:
            raise NormalizationFailed(f"tile {r} not present") from None

    def apply(self, mv: Move) -> None:
        tiles = self.tiles
        if isinstance(mv, Split):
            r = tiles[mv.tile]
            lo, hi = split_rect(r, mv.axis, as_rat(mv.offset))
            if not (_legal(lo, self.t.lattice_scale) and _legal(hi, self.t.lattice_scale)):
                raise IllegalMove(f"edge not integer: pieces of tile {mv.tile} lose their lattice side")
            tiles[mv.tile] = lo
            tiles.append(hi)
            if self._words is not None:
                w = self._words.pop(r)
                self._words[lo] = w
                self._words[hi] = point_word_on_rect(w, r, (hi.x0, hi.y0))
        else:
            a, b = sorted((mv.a, mv.b))
            ra, rb = tiles[a], tiles[b]
            u = merged_rect(ra, rb)
            if u is None or not _legal(u, self.t.lattice_scale):
                raise IllegalMove(f"cannot merge {ra} and {rb}")
            tiles[a] = u
            del tiles[b]
            if self._words is not None:
                wa, wb = self._words.pop(ra), self._words.pop(rb)
                self._words[u] = wa if (ra.x0, ra.y0) == (u.x0, u.y0) else wb
        self.moves.append(mv)

    def split(self, r: Rect, axis: str, coord: Rat) -> Tuple[Rect, Rect]:
        """Cut ``r`` along the line ``y = coord`` (axis H) or ``x = coord``."""
        offset = coord - (r.y0 if axis == H else r.x0)
        self.apply(Split(self.index(r), axis, offset))
        return split_rect(r, axis, offset)

    def merge(self, a: Rect, b: Rect) -> Rect:
        u = merged_rect(a, b)
        if u is None:
            raise NormalizationFailed(f"cannot merge {a} and {b}")
        self.apply(Merge(self.index(a), self.index(b)))
        return u

    def tiling(self) -> Tiling:
        return self.t.with_tiles(self.tiles)

    def trace(self, start: Tiling) -> MoveTrace:
        return MoveTrace(tiling_hash(start), list(self.moves), tiling_hash(self.tiling()))


# ---------------------------------------------------------------------------
# interior segments and the interior-maximum surgery


@dataclass(frozen=True)
class Segment:
    axis: str  # direction of the segment
    fixed: Rat  # x for vertical segments, y for horizontal ones
    lo: Rat
    hi: Rat


def _merge_intervals(iv):
    out = []
    for a, b in sorted(iv):
        if out and a <= out[-1][1]:
            out[-1][1] = max(out[-1][1], b)
        else:
            out.append([a, b])
    return out


def _subtract_intervals(iv, cut):
    out = []
    for a, b in iv:
        pieces = [(a, b)]
        for c0, c1 in cut:
            nxt = []
            for p0, p1 in pieces:
                if c1 <= p0 or c0 >= p1:
                    nxt.append((p0, p1))
                    continue
                if p0 < c0:
                    nxt.append((p0, c0))
                if c1 < p1:
                    nxt.append((c1, p1))
            pieces = nxt
        out.extend(pieces)
    return out


def interior_segments(tiles: Sequence[Rect], region: RectilinearPolygon) -> List[Segment]:
    """Maximal straight runs of tile sides, minus the parts on the region boundary."""
    out = []
    for axis in (V, H):
        lines = {}
        for r in tiles:
            if axis == V:
                for x in (r.x0, r.x1):
                    lines.setdefault(x, []).append((r.y0, r.y1))
            else:
                for y in (r.y0, r.y1):
                    lines.setdefault(y, []).append((r.x0, r.x1))
        for fixed, iv in sorted(lines.items()):
            bnd = []
            for e in region.edges:
                if e.axis != axis:
                    continue
                if axis == V and e.start[0] == fixed:
                    bnd.append(tuple(sorted((e.start[1], e.end[1]))))
                if axis == H and e.start[1] == fixed:
                    bnd.append(tuple(sorted((e.start[0], e.end[0]))))
            for a, b in _subtract_intervals(_merge_intervals(iv), bnd):
                if a < b:
                    out.append(Segment(axis, fixed, a, b))
    return out


def _point_word(tiles, words, p) -> GroupWord:
    for r, w in zip(tiles, words):
        if r.on_boundary(p):
            return point_word_on_rect(w, r, p)
    raise NormalizationFailed(f"{p} is on no tile")


def _segment_profile(seg: Segment, tiles, words, cfg: HeightConfig):
    start = (seg.fixed, seg.lo) if seg.axis == V else (seg.lo, seg.fixed)
    g = _point_word(tiles, words, start)
    return edge_profile(g, seg.axis, seg.hi - seg.lo, cfg)


def _tiles_in(work_tiles: Sequence[Rect], comp: RectilinearPolygon) -> List[Rect]:
    return [
        r for r in work_tiles if comp.contains_strict(((r.x0 + r.x1) / 2, (r.y0 + r.y1) / 2))
    ]


def _beside(seg: Segment, tiles: Sequence[Rect]):
    if seg.axis == V:
        side_a = [r for r in tiles if r.x1 == seg.fixed and r.y0 < seg.hi and r.y1 > seg.lo]
        side_b = [r for r in tiles if r.x0 == seg.fixed and r.y0 < seg.hi and r.y1 > seg.lo]
        return side_a, side_b, (lambda r: r.y0), (lambda r: r.y1), H
    side_a = [r for r in tiles if r.y1 == seg.fixed and r.x0 < seg.hi and r.x1 > seg.lo]
    side_b = [r for r in tiles if r.y0 == seg.fixed and r.x0 < seg.hi and r.x1 > seg.lo]
    return side_a, side_b, (lambda r: r.x0), (lambda r: r.x1), V


def surgery_feasible(seg: Segment, tiles: Sequence[Rect]) -> bool:
    """Whether the tiles beside ``seg``, clipped to it, all start and end at
    one common residue mod 1, so unit slices line up on both sides."""
    side_a, side_b, lo_of, hi_of, _ = _beside(seg, tiles)
    if not side_a or not side_b:
        return False
    ref = seg.lo
    return all(
        (max(lo_of(r), seg.lo) - ref).denominator == 1 and (min(hi_of(r), seg.hi) - ref).denominator == 1
        for r in side_a + side_b
    )


def _surgery(work: _Work, seg: Segment, tiles: Sequence[Rect]) -> None:
    """Cut the tiles beside ``seg`` into unit slices and fuse them across it."""
    side_a, side_b, lo_of, hi_of, cut_axis = _beside(seg, tiles)
    if not surgery_feasible(seg, tiles):
        raise NormalizationFailed(f"tiles beside {seg} do not line up mod 1")
    ref = seg.lo
    slices = {}
    for side, rects in (("a", side_a), ("b", side_b)):
        for r in rects:
            cur = r
            c = ref + math.floor(lo_of(r) - ref) + 1
            while c < hi_of(r):
                low, cur = work.split(cur, cut_axis, c)
                slices[(side, lo_of(low))] = low
                c += 1
            slices[(side, lo_of(cur))] = cur
    for c in range(int(seg.hi - seg.lo)):
        a, b = slices.get(("a", ref + c)), slices.get(("b", ref + c))
        if a is None or b is None:
            raise NormalizationFailed(f"unmatched slice at {ref + c} beside {seg}")
        work.merge(a, b)


def _high_segments(tiles, comp, words, cfg, M):
    """Interior segments at or above ``M``, highest first."""
    words = [words[r] for r in tiles]
    out = []
    for seg in interior_segments(tiles, comp):
        g = _segment_profile(seg, tiles, words, cfg).generic_height
        if g >= M:
            out.append((-g, seg.axis, seg.fixed, seg.lo, seg))
    out.sort(key=lambda q: q[:4])
    return [(-q[0], q[4]) for q in out]


def _scaled(t: Tiling) -> Tiling:
    s = t.lattice_scale
    if s == 1:
        return t
    return Tiling(
        scale_polygon(t.region, 1 / s, 1 / s),
        tuple(scale_rect(r, 1 / s, 1 / s) for r in t.tiles),
        Rat(1),
        t.mode,
        t.beta,
        t.k,
    )


def _unscale_moves(moves: Sequence[Move], s: Rat) -> List[Move]:
    return [Split(m.tile, m.axis, m.offset * s) if isinstance(m, Split) else m for m in moves]


def lower_interior_max(t: Tiling, cfg: HeightConfig = HeightConfig()) -> Tuple[Tiling, MoveTrace]:
    """One round of interior-maximum surgery on the highest interior edge."""
    ts = _scaled(t)
    region = ts.region
    M = boundary_heights(region, cfg).max_height
    tiles = list(ts.tiles)
    work = _Work(ts)
    high = [seg for _, seg in _high_segments(tiles, region, work.words(), cfg, M)]
    if not high:
        raise NoInteriorMax("no interior edge reaches the boundary maximum")
    feasible = [seg for seg in high if surgery_feasible(seg, tiles)]
    if not feasible:
        raise NormalizationFailed("no feasible surgery on the high interior edges")
    _surgery(work, feasible[0], tiles)
    return _finish(t, work)


def _finish(t: Tiling, work: _Work) -> Tuple[Tiling, MoveTrace]:
    s = t.lattice_scale
    moves = _unscale_moves(work.moves, s)
    s_tiles = tuple(scale_rect(r, s, s) for r in work.tiles) if s != 1 else tuple(work.tiles)
    out = t.with_tiles(s_tiles)
    return out, MoveTrace(tiling_hash(t), moves, tiling_hash(out))


def _strip_plan(tiles: Sequence[Rect], step: PlacementStep):
    """Tiles along the step's edge ``s``, if they cut out its strip legally.

    Returns ``(w0, w1, depth, tile)`` per tile in order along ``s``, or None
    when some tile overhangs ``s``, is too shallow, or cannot be cut at the
    strip depth without losing its lattice side.
    """
    s = step.component.edges[step.edge_index]
    d, n = _direction(s), _inward(s)
    a = s.start
    adjacent = []
    for r in tiles:
        us = [(cx - a[0]) * n[0] + (cy - a[1]) * n[1] for cx, cy in (r.corners()[0], r.corners()[2])]
        if min(us) != 0:
            continue
        ws = [(cx - a[0]) * d[0] + (cy - a[1]) * d[1] for cx, cy in (r.corners()[0], r.corners()[2])]
        if min(ws) < s.length and max(ws) > 0:
            adjacent.append((min(ws), max(ws), max(us), r))
    adjacent.sort(key=lambda q: q[0])
    pos = Rat(0)
    for w0, w1, depth, r in adjacent:
        if w0 != pos or depth < step.r:
            return None
        if depth > step.r and (w1 - w0).denominator != 1:
            if step.r.denominator != 1 or (depth - step.r).denominator != 1:
                return None
        pos = w1
    if pos != s.length:
        return None
    return adjacent


def _carve(work: _Work, step: PlacementStep, plan) -> None:
    """Cut every tile along ``s`` at the strip depth and fuse the strips."""
    s = step.component.edges[step.edge_index]
    a, n = s.start, _inward(s)
    strips = []
    for w0, w1, depth, r in plan:
        if depth == step.r:
            strips.append(r)
            continue
        if s.axis == H:
            coord = a[1] + n[1] * step.r
            low, high = work.split(r, H, coord)
            strips.append(low if n[1] > 0 else high)
        else:
            coord = a[0] + n[0] * step.r
            left, right = work.split(r, V, coord)
            strips.append(left if n[0] > 0 else right)
    acc = strips[0]
    for nxt in strips[1:]:
        acc = work.merge(acc, nxt)
    if acc != step.rect:
        raise NormalizationFailed(f"carved {acc}, expected {step.rect}")


def _place_step(work: _Work, step: PlacementStep, cfg: HeightConfig, max_rounds: int = 10_000) -> int:
    """Make the step's rectangle a tile, lowering interior maxima until the
    tiles along its edge can be cut at the strip depth.  Returns the number
    of surgery rounds used."""
    comp, M = step.component, step.max_height
    for rounds in range(max_rounds):
        tiles = _tiles_in(work.tiles, comp)
        plan = _strip_plan(tiles, step)
        if plan is not None:
            _carve(work, step, plan)
            return rounds
        high = _high_segments(tiles, comp, work.words(), cfg, M)
        if not high:
            raise NormalizationFailed(
                f"no interior edge at height {M} yet edge {step.edge_index} is not ready to carve"
            )
        for _, seg in high:
            if surgery_feasible(seg, tiles):
                _surgery(work, seg, tiles)
                break
        else:
            raise NormalizationFailed(f"no feasible surgery among {len(high)} high interior edges")
    raise NormalizationFailed("interior maxima do not go down")


_STEPS_CACHE: dict = {}


def _steps_for(region: RectilinearPolygon, cfg: HeightConfig):
    """Canonical placement steps, remembered per region."""
    key = (region.key(), cfg)
    if key not in _STEPS_CACHE:
        if len(_STEPS_CACHE) > 512:
            _STEPS_CACHE.clear()
        try:
            _STEPS_CACHE[key] = tuple(canonical_steps(region, cfg))
        except _Untileable as u:
            raise NormalizationFailed(f"region reported untileable ({u.reason}) but a tiling exists")
    return _STEPS_CACHE[key]


def normalize(t: Tiling, cfg: HeightConfig = HeightConfig()) -> Tuple[Tiling, MoveTrace]:
    """Move sequence from ``t`` to the canonical tiling of its region."""
    v = verify_tiling(t)
    if not v:
        raise IllegalMove(f"input tiling does not verify: {v.diagnostics}")
    ts = _scaled(t)
    steps = _steps_for(ts.region, cfg)
    work = _Work(ts)
    for step in steps:
        _place_step(work, step, cfg)
    target = sorted(st.rect for st in steps)
    if sorted(work.tiles) != target:
        raise NormalizationFailed("did not reach the canonical tiling")
    return _finish(t, work)


def canonical_tiling(region: RectilinearPolygon, cfg: HeightConfig = HeightConfig(), scale=1) -> Tiling:
    from .tiler import tile

    out = tile(region, CANONICAL, cfg, scale)
    if not out.tiled:
        raise NormalizationFailed(f"region is not tileable: {out.reason}")
    return out.tiling


# ---------------------------------------------------------------------------
# connecting two tilings


def _inverse_ops(t: Tiling, moves: Sequence[Move]):
    """Geometric inverses of a move list, last move first."""
    ops = []
    cur = t
    for mv in moves:
        nxt = apply_move(cur, mv)
        if isinstance(mv, Split):
            lo, hi = split_rect(cur.tiles[mv.tile], mv.axis, as_rat(mv.offset))
            ops.append(("merge", lo, hi))
        else:
            a, b = cur.tiles[mv.a], cur.tiles[mv.b]
            u = merged_rect(a, b)
            if a.y0 == b.y0 and a.y1 == b.y1:
                ops.append(("split", u, V, max(a.x0, b.x0) - u.x0))
            else:
                ops.append(("split", u, H, max(a.y0, b.y0) - u.y0))
        cur = nxt
    return list(reversed(ops))


def connect(t1: Tiling, t2: Tiling, cfg: HeightConfig = HeightConfig()) -> MoveTrace:
    """Moves taking ``t1`` to ``t2`` through the canonical tiling."""
    if t1.region.key() != t2.region.key() or t1.lattice_scale != t2.lattice_scale:
        raise DifferentRegions("tilings are of different regions")
    if t1.same_tiles(t2):
        return MoveTrace(tiling_hash(t1), [], tiling_hash(t2))
    _, tr1 = normalize(t1, cfg)
    _, tr2 = normalize(t2, cfg)
    work = _Work(t1)
    for mv in tr1.moves:
        work.apply(mv)
    for op in _inverse_ops(t2, tr2.moves):
        if op[0] == "merge":
            work.apply(Merge(work.index(op[1]), work.index(op[2])))
        else:
            work.apply(Split(work.index(op[1]), op[2], op[3]))
    if not work.tiling().same_tiles(t2):
        raise NormalizationFailed("connection did not reach the second tiling")
    return work.trace(t1)


# ---------------------------------------------------------------------------
# lasso decomposition


def _skeleton_nodes(tiles: Sequence[Rect], region: RectilinearPolygon):
    nodes = set(region.vertices)
    for r in tiles:
        nodes.update(r.corners())
    return nodes


def _subdivide(p, q, nodes):
    """Directed unit steps from p to q through every node on the segment."""
    if p[1] == q[1]:
        lo, hi = sorted((p[0], q[0]))
        mids = sorted(n[0] for n in nodes if n[1] == p[1] and lo < n[0] < hi)
        xs = [p[0]] + (mids if q[0] > p[0] else mids[::-1]) + [q[0]]
        pts = [(x, p[1]) for x in xs]
    else:
        lo, hi = sorted((p[1], q[1]))
        mids = sorted(n[1] for n in nodes if n[0] == p[0] and lo < n[1] < hi)
        ys = [p[1]] + (mids if q[1] > p[1] else mids[::-1]) + [q[1]]
        pts = [(p[0], y) for y in ys]
    return list(zip(pts, pts[1:]))


def _loop(corners, nodes):
    out = []
    for i in range(len(corners)):
        out.extend(_subdivide(corners[i], corners[(i + 1) % len(corners)], nodes))
    return out


def _letters(path):
    raw = []
    for p, q in path:
        if p[1] == q[1]:
            raw.append((H, q[0] - p[0]))
        else:
            raw.append((V, q[1] - p[1]))
    return raw


def _free_reduce(path):
    out = []
    for e in path:
        if out and out[-1] == (e[1], e[0]):
            out.pop()
        else:
            out.append(e)
    return out


def lasso_decomposition(t: Tiling, modulus=Rat(1)) -> List[GroupWord]:
    """One conjugated tile boundary per tile, peeled off the region boundary.

    The product of the returned words, in order, equals the boundary word
    of the region; with ``modulus=None`` this holds in R * R as well.
    """
    tiles = list(t.tiles)
    nodes = _skeleton_nodes(tiles, t.region)
    walk = _loop(list(t.region.vertices), nodes)
    remaining = {i: _loop(r.corners(), nodes) for i, r in enumerate(tiles)}
    lassos = []
    while remaining:
        picked = None
        for i in sorted(remaining):
            cyc = remaining[i]
            pos_in_cycle = {e: k for k, e in enumerate(cyc)}
            for k, e in enumerate(walk):
                if e in pos_in_cycle:
                    picked = (i, k, pos_in_cycle)
                    break
            if picked:
                break
        if picked is None:
            raise NormalizationFailed("no tile touches the remaining boundary walk")
        i, k, pos_in_cycle = picked
        cyc = remaining.pop(i)
        start = pos_in_cycle[walk[k]]
        j = k
        m = len(cyc)
        while j < len(walk) and j - k < m and walk[j] == cyc[(start + j - k) % m]:
            j += 1
        arc_len = j - k
        rest = [cyc[(start + arc_len + q) % m] for q in range(m - arc_len)]
        prefix = walk[:k]
        around = [cyc[(start + q) % m] for q in range(m)]
        raw = _letters(prefix) + _letters(around) + [(ax, -v) for ax, v in reversed(_letters(prefix))]
        lassos.append(reduce(raw, modulus=modulus))
        back = [(q, p) for p, q in reversed(rest)]
        walk = _free_reduce(prefix + back + walk[j:])
    if walk:
        raise NormalizationFailed("boundary walk did not collapse")
    return lassos


def lasso_product(lassos: Sequence[GroupWord]) -> GroupWord:
    out = identity(lassos[0].modulus if lassos else Rat(1))
    for w in lassos:
        out = out * w
    return out

"""Height function: word distance from a point's prefix word to a far basepoint.

Heights are reported normalized (raw distance minus ``2k``) unless the
config says otherwise.  The height of a point with prefix word ``g`` is the
length of ``x0 * g``: the distance from the reversed walk ``g^-1`` to ``x0``.
Putting ``x0`` on the far side of the origin makes the height a horofunction
on the tree of cosets, so along an edge only the last letter of
``x0 * g * x(t)`` depends on ``t``.  Each edge profile is therefore a generic
value plus drop points exactly one lower and spaced exactly 1 apart; profiles
are computed in that closed form.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from .rational import Rat
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import BoundaryWordNotTrivial, PathInconsistent
from .geometry import Point, Rect, RectilinearPolygon, boundary_word, cw_prefix_words, prefix_words
from .groupword import H, V, GroupWord, as_rat, basepoint, distance, identity, invert, reduce

PAPER_BETA = Rat(1, 2)


@dataclass(frozen=True)
class HeightConfig:
    k: Optional[int] = None  # None: auto, E + 2 for the polygon at hand
    beta: Rat = PAPER_BETA
    normalize: bool = True

    def __post_init__(self):
        object.__setattr__(self, "beta", as_rat(self.beta) % 1)
        if self.beta == 0:
            raise ValueError("beta must be nonzero mod 1")
        if self.k is not None and self.k < 1:
            raise ValueError("k must be positive")

    def k_for(self, n_edges: int) -> int:
        return self.k if self.k is not None else n_edges + 2

    @classmethod
    def generic(cls, L: int, **kw) -> "HeightConfig":
        """Basepoint residue off the refined grid ``(1/(2L))Z``."""
        return cls(beta=Rat(1, 6 * L), **kw)


def _raw(prefix: GroupWord, k: int, beta: Rat) -> int:
    # the walk from the point back to the origin, then on to x0; the edge
    # letter sits at the free end of the product, away from x0
    return distance(invert(prefix), basepoint(k, beta))


def point_height(prefix: GroupWord, cfg: HeightConfig, k: Optional[int] = None) -> int:
    k = k if k is not None else cfg.k_for(len(prefix))
    raw = _raw(prefix, k, cfg.beta)
    return raw - 2 * k if cfg.normalize else raw


@lru_cache(maxsize=200_000)
def _norm_height(g: GroupWord, beta: Rat) -> int:
    # k large enough that the junction cancellation never reaches the far end
    k = len(g) + 2
    return _raw(g, k, beta) - 2 * k


def height(g: GroupWord, beta: Rat = PAPER_BETA) -> int:
    """Normalized height of a prefix word, independent of k once k is large."""
    return _norm_height(g, beta)


@dataclass(frozen=True)
class EdgeProfile:
    edge_index: int
    axis: str
    length: Rat
    start_height: int
    end_height: int
    generic_height: int
    drop_offsets: Tuple[Rat, ...]
    drop_depths: Dict[Rat, int] = field(hash=False, compare=False)
    drop_residue: Rat = Rat(0)
    drop_height: Optional[int] = None

    def height_at(self, offset) -> int:
        offset = as_rat(offset)
        if offset % 1 == self.drop_residue:
            return self.drop_height
        return self.generic_height

    @property
    def max_height(self) -> int:
        return self.generic_height

    @property
    def min_height(self) -> int:
        return min(self.start_height, self.end_height, self.generic_height,
                   *(self.generic_height - d for d in self.drop_depths.values()))


def _free_end(g: GroupWord, axis: str, beta: Rat) -> Rat:
    """Residue of the last letter of ``x0 * g`` if it lies on ``axis``, else 0."""
    k = len(g) + 2
    w = basepoint(k, beta) * g
    last = w.last()
    return last[1] % 1 if last is not None and last[0] == axis else Rat(0)


def edge_profile(
    prefix_at_start: GroupWord,
    axis: str,
    signed_length,
    cfg: HeightConfig = HeightConfig(),
    grid=None,
    edge_index: int = -1,
    k: Optional[int] = None,
) -> EdgeProfile:
    """Height profile of the segment ``prefix * x(t)``, ``0 <= |t| <= |len|``.

    ``grid`` is accepted for interface compatibility; the closed form does
    not need sampling.
    """
    signed_length = as_rat(signed_length)
    if signed_length == 0:
        raise ValueError("zero-length edge")
    return _edge_profile(prefix_at_start, axis, signed_length, cfg, edge_index, k)


@lru_cache(maxsize=200_000)
def _edge_profile(prefix_at_start, axis, signed_length, cfg, edge_index, k) -> EdgeProfile:
    sgn = 1 if signed_length > 0 else -1
    length = abs(signed_length)
    beta = cfg.beta
    g = prefix_at_start

    def h_at(t: Rat) -> int:
        return height(g.append(axis, sgn * t), beta)

    c0 = _free_end(g, axis, beta)
    drop_res = (-sgn * c0) % 1
    # a generic offset: any offset not congruent to the drop residue
    t_gen = length / 2
    for denom in (2, 3, 5, 7):
        t_gen = length / denom
        if t_gen % 1 != drop_res:
            break
    generic = h_at(t_gen)
    # the drop value does not depend on which congruent offset is used
    drop_height = h_at(drop_res if drop_res > 0 else Rat(1))
    drops = []
    t = drop_res if drop_res > 0 else Rat(1)
    while t < length:
        drops.append(t)
        t += 1
    depths = {t: generic - drop_height for t in drops}
    shift = 0 if cfg.normalize else 2 * (k or cfg.k or len(g) + 3)
    return EdgeProfile(
        edge_index=edge_index,
        axis=axis,
        length=length,
        start_height=h_at(Rat(0)) + shift,
        end_height=h_at(length) + shift,
        generic_height=generic + shift,
        drop_offsets=tuple(drops),
        drop_depths=depths,
        drop_residue=drop_res,
        drop_height=drop_height + shift,
    )


@dataclass(frozen=True)
class BoundaryHeights:
    profiles: Tuple[EdgeProfile, ...]
    max_height: int
    min_height: int
    argmax: Tuple[int, ...]
    vertex_words: Tuple[GroupWord, ...]


def boundary_heights(
    p: RectilinearPolygon,
    cfg: HeightConfig = HeightConfig(),
    vertex_words: Optional[Sequence[GroupWord]] = None,
) -> BoundaryHeights:
    """Heights on every edge of ``p``.

    ``vertex_words`` supplies inherited words at the vertices (used for
    pieces of a partly tiled region); otherwise ccw prefix words from the
    basepoint are used and checked against the clockwise ones.
    """
    if vertex_words is None:
        if not boundary_word(p).is_identity:
            raise BoundaryWordNotTrivial(f"boundary word is {boundary_word(p)}")
        vertex_words = prefix_words(p)
        cw = cw_prefix_words(p)
        for i, (a, b) in enumerate(zip(vertex_words, cw)):
            if a != b:
                raise BoundaryWordNotTrivial(f"ccw/cw words differ at vertex {i}")
    profiles = tuple(
        edge_profile(vertex_words[e.index], e.axis, e.signed_length, cfg, edge_index=e.index)
        for e in p.edges
    )
    M = max(pr.generic_height for pr in profiles)
    m = min(pr.min_height for pr in profiles)
    argmax = tuple(pr.edge_index for pr in profiles if pr.generic_height == M)
    return BoundaryHeights(profiles, M, m, argmax, tuple(vertex_words))


# ---------------------------------------------------------------------------
# words on tiling edges


def point_word_on_rect(g_ll: GroupWord, r: Rect, p: Point) -> GroupWord:
    """Word at a boundary point of ``r`` reached ccw from its lower-left corner."""
    x, y = p
    if y == r.y0:
        return g_ll.append(H, x - r.x0)
    if x == r.x1:
        return g_ll.append(H, r.width).append(V, y - r.y0)
    if y == r.y1:
        return g_ll.append(H, r.width).append(V, r.height).append(H, x - r.x1)
    if x == r.x0:
        return g_ll.append(V, y - r.y0)
    raise ValueError(f"{p} is not on the boundary of {r}")


def _tile_is_trivial(r: Rect, scale: Rat) -> bool:
    return (r.width / scale).denominator == 1 or (r.height / scale).denominator == 1


def tile_words(
    tiles: Sequence[Rect],
    anchor: Point,
    anchor_word: GroupWord = identity(),
    scale: Rat = Rat(1),
    check: bool = True,
) -> List[GroupWord]:
    """Word at the lower-left corner of every tile, propagated from an anchor.

    Raises PathInconsistent if some tile is not trivial in the group or two
    paths to the same point disagree.
    """
    scale = as_rat(scale)
    n = len(tiles)
    for r in tiles:
        if not _tile_is_trivial(r, scale):
            raise PathInconsistent(f"tile {r} has no side in the lattice")
    words: List[Optional[GroupWord]] = [None] * n
    seeds = [i for i, r in enumerate(tiles) if r.on_boundary(anchor)]
    if not seeds:
        raise PathInconsistent(f"anchor {anchor} is on no tile")
    i0 = seeds[0]
    r0 = tiles[i0]
    # word at r0's lower-left from the anchor: walk back along r0's boundary
    back = point_word_on_rect(identity(anchor_word.modulus), r0, anchor)
    words[i0] = anchor_word * back.inverse()
    frontier = [i0]
    while frontier:
        nxt = []
        for i in frontier:
            ri = tiles[i]
            for j in range(n):
                if words[j] is not None:
                    continue
                rj = tiles[j]
                shared = _shared_point(ri, rj)
                if shared is None:
                    continue
                gp = point_word_on_rect(words[i], ri, shared)
                back = point_word_on_rect(identity(gp.modulus), rj, shared)
                words[j] = gp * back.inverse()
                nxt.append(j)
        frontier = nxt
    if any(w is None for w in words):
        raise PathInconsistent("tiles are not edge-connected")
    if check:
        for i in range(n):
            for j in range(i + 1, n):
                for pt in _touch_points(tiles[i], tiles[j]):
                    if point_word_on_rect(words[i], tiles[i], pt) != point_word_on_rect(
                        words[j], tiles[j], pt
                    ):
                        raise PathInconsistent(f"two paths disagree at {pt}")
    return words


def _touch_points(a: Rect, b: Rect) -> List[Point]:
    pts = [c for c in a.corners() if b.on_boundary(c)]
    pts += [c for c in b.corners() if a.on_boundary(c)]
    return pts


def _shared_point(a: Rect, b: Rect) -> Optional[Point]:
    pts = _touch_points(a, b)
    return min(pts) if pts else None


def interior_point_height(
    tiles: Sequence[Rect],
    point: Point,
    cfg: HeightConfig = HeightConfig(),
    anchor: Point = (Rat(0), Rat(0)),
    scale: Rat = Rat(1),
) -> int:
    """Height of a point on the tiling skeleton; every path to it is checked."""
    point = (as_rat(point[0]), as_rat(point[1]))
    words = tile_words(tiles, anchor, scale=scale)
    seen = {
        point_word_on_rect(words[i], r, point) for i, r in enumerate(tiles) if r.on_boundary(point)
    }
    if not seen:
        raise ValueError(f"{point} is not on the tiling skeleton")
    if len(seen) > 1:
        raise PathInconsistent(f"paths to {point} disagree")
    g = seen.pop()
    return point_height(g, cfg) if cfg.k is not None or not cfg.normalize else height(g, cfg.beta)

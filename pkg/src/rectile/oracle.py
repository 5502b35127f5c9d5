"""Brute-force ground truth on a fixed grid.

Cells are squares of side ``unit``; a cell belongs to the region iff its
closed square lies in the polygon.  The search always covers the lowest,
then leftmost, free cell, whose covering tile must have it as lower-left
corner.  A negative answer only rules out tilings on this grid.
"""
from __future__ import annotations

from dataclasses import dataclass
from .rational import Rat
from typing import Callable, Iterator, List, Optional, Tuple

from .errors import BudgetExceeded, CapExceeded, NotRectilinear
from .geometry import CellGrid, Rect, RectilinearPolygon, grid_unit
from .groupword import as_rat
from .tiler import Tiling


@dataclass
class GridRegion:
    x0: Rat
    y0: Rat
    unit: Rat
    width: int
    height: int
    mask: int  # bit j*width + i set iff cell (i, j) is inside

    def cell_index(self, i: int, j: int) -> int:
        return j * self.width + i

    def rect(self, i: int, j: int, w: int, h: int) -> Rect:
        u = self.unit
        return Rect(self.x0 + i * u, self.y0 + j * u, self.x0 + (i + w) * u, self.y0 + (j + h) * u)

    @property
    def n_cells(self) -> int:
        return bin(self.mask).count("1")


def rasterize(p: RectilinearPolygon, unit) -> GridRegion:
    unit = as_rat(unit)
    x_lo, y_lo, x_hi, y_hi = p.bbox
    for x, y in p.vertices:
        if ((x - x_lo) / unit).denominator != 1 or ((y - y_lo) / unit).denominator != 1:
            raise NotRectilinear(f"vertex ({x}, {y}) is off the {unit} grid")
    W = int((x_hi - x_lo) / unit)
    Hh = int((y_hi - y_lo) / unit)
    grid = CellGrid([x_lo + i * unit for i in range(W + 1)], [y_lo + j * unit for j in range(Hh + 1)])
    mask = 0
    for i, j in grid.cells_inside(p):
        mask |= 1 << (j * W + i)
    return GridRegion(x_lo, y_lo, unit, W, Hh, mask)


def _search(
    g: GridRegion,
    allowed: Callable[[int, int], bool],
    want_all: bool,
    cap: int,
    budget: int,
) -> Tuple[List[List[Tuple[int, int, int, int]]], bool]:
    """Depth-first search; returns (solutions, capped)."""
    W = g.width
    region = g.mask
    row_bits = (1 << W) - 1
    solutions: List[List[Tuple[int, int, int, int]]] = []
    dead = set()
    nodes = 0
    capped = False

    def rect_mask(i, j, w, h):
        m = ((1 << w) - 1) << i
        out = 0
        for jj in range(j, j + h):
            out |= m << (jj * W)
        return out

    path: List[Tuple[int, int, int, int]] = []

    def rec(covered: int) -> bool:
        nonlocal nodes, capped
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"search exceeded {budget} nodes")
        free = region & ~covered
        if not free:
            solutions.append(list(path))
            if len(solutions) >= cap:
                capped = True
                return True
            return not want_all
        if covered in dead:
            return False
        low = free & -free
        idx = low.bit_length() - 1
        j, i = divmod(idx, W)
        found = False
        w = 1
        while i + w <= W and (free >> (j * W + i + w - 1)) & 1:
            h = 1
            col = rect_mask(i, j, w, 1)
            m = col
            while True:
                if allowed(w, h):
                    path.append((i, j, w, h))
                    n_before = len(solutions)
                    stop = rec(covered | m)
                    path.pop()
                    if len(solutions) > n_before:
                        found = True
                    if stop:
                        return True
                nxt_row = col << ((h) * W)
                if j + h >= g.height or (free & nxt_row) != nxt_row:
                    break
                m |= nxt_row
                h += 1
            w += 1
        if not found:
            dead.add(covered)
        return False

    rec(0)
    return solutions, capped


def _integer_side(unit: Rat, scale: Rat) -> Callable[[int, int], bool]:
    step = unit / scale

    def ok(w: int, h: int) -> bool:
        return (w * step).denominator == 1 or (h * step).denominator == 1

    return ok


def _default_unit(p: RectilinearPolygon, scale: Rat) -> Rat:
    scaled = RectilinearPolygon(tuple((x / scale, y / scale) for x, y in p.vertices))
    return scale / (2 * grid_unit(scaled))


def _to_tiling(p, g, sol, scale) -> Tiling:
    return Tiling(p, tuple(g.rect(*t) for t in sol), scale)


def brute_force(
    p: RectilinearPolygon,
    budget: int = 2_000_000,
    unit=None,
    scale=1,
) -> Optional[Tiling]:
    """Some grid tiling by rectangles with a side in ``scale * Z``, or None."""
    scale = as_rat(scale)
    unit = as_rat(unit) if unit is not None else _default_unit(p, scale)
    g = rasterize(p, unit)
    sols, _ = _search(g, _integer_side(unit, scale), False, 1, budget)
    return _to_tiling(p, g, sols[0], scale) if sols else None


def enumerate_tilings(
    p: RectilinearPolygon,
    cap: int = 100,
    budget: int = 2_000_000,
    unit=None,
    scale=1,
    strict: bool = False,
) -> List[Tiling]:
    """All grid tilings up to ``cap``, in deterministic search order.

    With ``strict`` a full cap raises CapExceeded carrying the partial list.
    """
    scale = as_rat(scale)
    unit = as_rat(unit) if unit is not None else _default_unit(p, scale)
    g = rasterize(p, unit)
    sols, capped = _search(g, _integer_side(unit, scale), True, cap, budget)
    out = [_to_tiling(p, g, s, scale) for s in sols]
    if capped and strict:
        raise CapExceeded(f"more than {cap} tilings", partial=out)
    return out


def brute_force_bars(p: RectilinearPolygon, n: int, m: int, budget: int = 2_000_000) -> Optional[Tiling]:
    """Tiling of an integer polyomino by ``n x 1`` and ``1 x m`` bars, or None."""
    g = rasterize(p, 1)

    def ok(w: int, h: int) -> bool:
        return (w, h) == (n, 1) or (w, h) == (1, m)

    sols, _ = _search(g, ok, False, 1, budget)
    return _to_tiling(p, g, sols[0], Rat(1)) if sols else None

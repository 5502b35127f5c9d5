"""Generators of small test polygons."""
from __future__ import annotations

import random
from .rational import Rat
from typing import Iterator, List, Optional

from .errors import NotSimple
from .geometry import CellGrid, Rect, RectilinearPolygon, boundary_word, validate


def _connected(cells: set) -> bool:
    if not cells:
        return False
    start = next(iter(cells))
    seen = {start}
    stack = [start]
    while stack:
        i, j = stack.pop()
        for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(cells)


def polygon_of_cells(grid: CellGrid, cells: set) -> Optional[RectilinearPolygon]:
    """The polygon of a cell set, or None if it is not a simple polygon."""
    if not _connected(cells):
        return None
    try:
        traced = grid.trace(cells)
    except NotSimple:
        return None
    return validate(traced.vertices)


def cell_polygons(nx: int, ny: int, unit, max_edges: int = 8) -> Iterator[RectilinearPolygon]:
    """Every simple polygon made of cells of an ``nx x ny`` grid of side ``unit``."""
    unit = Rat(unit)
    grid = CellGrid([i * unit for i in range(nx + 1)], [j * unit for j in range(ny + 1)])
    cells_all = [(i, j) for j in range(ny) for i in range(nx)]
    seen = set()
    for bits in range(1, 1 << len(cells_all)):
        cells = {c for k, c in enumerate(cells_all) if bits >> k & 1}
        # canonical position: touch the left and bottom sides of the box
        if min(c[0] for c in cells) or min(c[1] for c in cells):
            continue
        p = polygon_of_cells(grid, cells)
        if p is None or len(p) > max_edges:
            continue
        key = p.key()
        if key not in seen:
            seen.add(key)
            yield p


def null_boundary(polys) -> List[RectilinearPolygon]:
    return [p for p in polys if boundary_word(p).is_identity]


def random_polygon(
    rng: random.Random,
    unit=Rat(1, 4),
    box: int = 12,
    max_edges: int = 12,
    cuts: int = 4,
) -> Optional[RectilinearPolygon]:
    """Random cell union on a random coarse grid with lines in ``unit * Z``."""
    unit = Rat(unit)
    xs = sorted(set([0, box] + [rng.randint(1, box - 1) for _ in range(rng.randint(1, cuts))]))
    ys = sorted(set([0, box] + [rng.randint(1, box - 1) for _ in range(rng.randint(1, cuts))]))
    grid = CellGrid([x * unit for x in xs], [y * unit for y in ys])
    nx, ny = len(xs) - 1, len(ys) - 1
    cells = {(rng.randrange(nx), rng.randrange(ny))}
    target = rng.randint(1, nx * ny)
    while len(cells) < target:
        i, j = rng.choice(sorted(cells))
        di, dj = rng.choice(((1, 0), (-1, 0), (0, 1), (0, -1)))
        if 0 <= i + di < nx and 0 <= j + dj < ny:
            cells.add((i + di, j + dj))
    p = polygon_of_cells(grid, cells)
    if p is None or len(p) > max_edges:
        return None
    return p


def random_tileable_polygon(
    rng: random.Random, unit=Rat(1, 4), box: int = 12, max_edges: int = 12, pieces: int = 4
) -> Optional[RectilinearPolygon]:
    """Union of random rectangles each having an integer side (so the
    boundary word is trivial when the union is simple)."""
    unit = Rat(unit)
    per = int(1 / unit)
    rects = []
    for _ in range(rng.randint(1, pieces)):
        if rng.random() < 0.5:
            w = per * rng.randint(1, max(1, box // per))
            h = rng.randint(1, box)
        else:
            w = rng.randint(1, box)
            h = per * rng.randint(1, max(1, box // per))
        if w > box or h > box:
            continue
        x = rng.randint(0, box - w)
        y = rng.randint(0, box - h)
        rects.append((x, y, x + w, y + h))
    if not rects:
        return None
    xs = sorted({v for r in rects for v in (r[0], r[2])})
    ys = sorted({v for r in rects for v in (r[1], r[3])})
    grid = CellGrid([x * unit for x in xs], [y * unit for y in ys])
    cells = set()
    for i in range(len(xs) - 1):
        for j in range(len(ys) - 1):
            cx, cy = xs[i], ys[j]
            if any(r[0] <= cx < r[2] and r[1] <= cy < r[3] for r in rects):
                cells.add((i, j))
    p = polygon_of_cells(grid, cells)
    if p is None or len(p) > max_edges:
        return None
    return p

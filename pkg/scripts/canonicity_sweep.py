"""Normalize every oracle tiling of every small region and tally the outcomes.

Default family: simple polygons made of half-unit cells in a 2 x 2 box with
at most 8 edges and trivial boundary word.
"""
import argparse
import collections
import time

from rectile.errors import RectileError
from rectile.families import cell_polygons, null_boundary
from rectile.moves import normalize, replay
from rectile.oracle import enumerate_tilings
from rectile.rational import Rat
from rectile.tiler import CANONICAL, tile


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--cells", type=int, default=4, help="box side in cells")
    ap.add_argument("--unit", default="1/2", help="cell side")
    ap.add_argument("--max-edges", type=int, default=8)
    ap.add_argument("--cap", type=int, default=500)
    ap.add_argument("--verify", choices=("local", "full"), default="local")
    args = ap.parse_args()
    start = time.perf_counter()
    polys = null_boundary(cell_polygons(args.cells, args.cells, Rat(args.unit), args.max_edges))
    tally = collections.Counter()
    moves = 0
    longest = 0
    for i, p in enumerate(polys):
        t0 = tile(p, CANONICAL).tiling
        for t in enumerate_tilings(p, cap=args.cap):
            try:
                out, trace = normalize(t)
                end = replay(t, trace.moves, verify=args.verify)
                ok = out.same_tiles(t0) and end.same_tiles(t0)
                tally["canonical" if ok else "different"] += 1
                moves += len(trace)
                longest = max(longest, len(trace))
            except RectileError as exc:
                tally[type(exc).__name__] += 1
        if i % 50 == 0:
            print(f"{i}/{len(polys)} regions, {sum(tally.values())} tilings, {time.perf_counter() - start:.0f}s",
                  flush=True)
    print(f"regions {len(polys)}; outcomes {dict(tally)}; moves {moves}; longest trace {longest}; "
          f"{time.perf_counter() - start:.0f}s")


if __name__ == "__main__":
    main()

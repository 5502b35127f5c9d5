"""Wall time of tile() on n x n integer squares and the fitted power of the area."""
import argparse
import math
import time

from rectile.geometry import validate
from rectile.tiler import CANONICAL, FAST, tile


def square(n):
    return validate([(0, 0), (n, 0), (n, n), (0, n)])


def fit_exponent(areas, times):
    xs = [math.log(a) for a in areas]
    ys = [math.log(t) for t in times]
    mx, my = sum(xs) / len(xs), sum(ys) / len(ys)
    return sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / sum((x - mx) ** 2 for x in xs)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=[8, 16, 32, 64])
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()
    for mode in (FAST, CANONICAL):
        times = []
        for n in args.sizes:
            best = math.inf
            for _ in range(args.repeats):
                start = time.perf_counter()
                out = tile(square(n), mode)
                best = min(best, time.perf_counter() - start)
            times.append(best)
            print(f"{mode:9s} n={n:3d} tiles={len(out.tiling.tiles):5d} time={best:.4f}s")
        k = fit_exponent([n * n for n in args.sizes], times)
        print(f"{mode:9s} exponent vs area: {k:.3f}")


if __name__ == "__main__":
    main()

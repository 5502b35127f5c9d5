"""Write SVG pictures of the sample regions: outline with heights, lowest
tiling, canonical tiling, and the first few oracle tilings."""
import argparse
from pathlib import Path

from rectile.geometry import read_polygon
from rectile.heights import boundary_heights
from rectile.oracle import enumerate_tilings
from rectile.render import RenderSpec, render_svg
from rectile.tiler import CANONICAL, tile

DATA = Path(__file__).resolve().parent.parent / "data"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="figures")
    ap.add_argument("--oracle", type=int, default=3, help="oracle tilings to draw per region")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(exist_ok=True)
    for path in sorted(DATA.glob("*.poly")):
        p = read_polygon(path)
        name = path.stem
        try:
            bh = boundary_heights(p)
        except Exception:
            bh = None
        (out / f"{name}_outline.svg").write_text(render_svg(p, None, bh, RenderSpec(show_heights=bh is not None)))
        for mode in ("fast", CANONICAL):
            res = tile(p, mode)
            if res.tiled:
                (out / f"{name}_{mode}.svg").write_text(render_svg(p, res.tiling, bh, RenderSpec(show_heights=True)))
        if bh is not None and args.oracle:
            for i, t in enumerate(enumerate_tilings(p, cap=args.oracle)):
                (out / f"{name}_oracle{i}.svg").write_text(render_svg(p, t))
        print(f"{name}: written")


if __name__ == "__main__":
    main()

"""``rectile`` command-line front end.

Exit codes: 0 success or tiled, 1 untileable, 2 input error, 3 internal
invariant violation.  Errors go to stderr as ``ERROR:<code>: message``.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from .errors import InputError, InternalInvariant, RectileError
from .formats import dumps, read_tiling, tiling_to_json, trace_to_json
from .geometry import RectilinearPolygon, boundary_word, grid_unit, read_polygon
from .groupword import as_rat, fmt_rat, format_word
from .heights import HeightConfig, boundary_heights
from .moves import connect, normalize
from .oracle import brute_force, enumerate_tilings
from .render import RenderSpec, render_svg
from .tiler import CANONICAL, FAST, tile, tile_bars

log = logging.getLogger("rectile")


def _config(args, region: RectilinearPolygon) -> HeightConfig:
    k = None if args.k == "auto" else int(args.k)
    if args.beta == "generic":
        return HeightConfig.generic(grid_unit(region), k=k)
    return HeightConfig(k=k)


def _load(path) -> RectilinearPolygon:
    try:
        return read_polygon(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _write(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def cmd_check(args) -> int:
    p = _load(args.file)
    w = boundary_word(p)
    print(f"alpha={format_word(w)}")
    return 0 if w.is_identity else 1


def cmd_heights(args) -> int:
    p = _load(args.file)
    bh = boundary_heights(p, _config(args, p))
    rows = []
    for e, prof in zip(p.edges, bh.profiles):
        direction = ("+" if e.signed_length > 0 else "-") + e.axis
        rows.append(
            {
                "edge": e.index,
                "start": [fmt_rat(e.start[0]), fmt_rat(e.start[1])],
                "direction": direction,
                "length": fmt_rat(e.length),
                "generic_height": prof.generic_height,
                "drop_offsets": [fmt_rat(t) for t in prof.drop_offsets],
                "drop_depths": [prof.drop_depths[t] for t in prof.drop_offsets],
            }
        )
    if args.json:
        print(dumps({"max_height": bh.max_height, "min_height": bh.min_height, "edges": rows}))
        return 0
    print("edge\tstart\tdirection\tlength\tgeneric\tdrops")
    for r in rows:
        start = f"({r['start'][0]},{r['start'][1]})"
        drops = ",".join(r["drop_offsets"]) or "-"
        print(f"{r['edge']}\t{start}\t{r['direction']}\t{r['length']}\t{r['generic_height']}\t{drops}")
    print(f"# M={bh.max_height} m={bh.min_height}")
    return 0


def _emit_tiling(args, p, outcome, cfg) -> int:
    if not outcome.tiled:
        print(f"untileable: {outcome.reason}")
        return 1
    t = outcome.tiling
    if getattr(args, "svg", None):
        _write(args.svg, render_svg(p, t, boundary_heights(p, cfg) if args.heights else None,
                                    RenderSpec(show_heights=args.heights)))
    if args.json:
        print(dumps(tiling_to_json(t)))
    else:
        print(f"tiled: {len(t.tiles)} tiles")
        for r in t.tiles:
            print(r)
    return 0


def cmd_tile(args) -> int:
    p = _load(args.file)
    cfg = _config(args, p)
    outcome = tile(p, args.mode, cfg, as_rat(args.scale))
    return _emit_tiling(args, p, outcome, cfg)


def cmd_bars(args) -> int:
    p = _load(args.file)
    cfg = _config(args, p)
    outcome = tile_bars(p, args.n, args.m, cfg)
    return _emit_tiling(args, p, outcome, cfg)


def cmd_normalize(args) -> int:
    t = read_tiling(args.tiling)
    out, trace = normalize(t, _config(args, t.region))
    if args.out:
        _write(args.out, dumps(tiling_to_json(out)) + "\n")
    print(dumps(trace_to_json(trace.moves)))
    return 0


def cmd_connect(args) -> int:
    a, b = read_tiling(args.a), read_tiling(args.b)
    trace = connect(a, b, _config(args, a.region))
    print(dumps(trace_to_json(trace.moves)))
    return 0


def cmd_oracle(args) -> int:
    p = _load(args.file)
    scale = as_rat(args.scale)
    if args.enumerate:
        found = enumerate_tilings(p, cap=args.enumerate, budget=args.budget, scale=scale)
        if args.json:
            print(dumps([tiling_to_json(t) for t in found]))
        else:
            print(f"tilings: {len(found)}" + (" (cap reached)" if len(found) >= args.enumerate else ""))
        return 0 if found else 1
    t = brute_force(p, budget=args.budget, scale=scale)
    if t is None:
        print("untileable: no grid tiling")
        return 1
    if args.json:
        print(dumps(tiling_to_json(t)))
    else:
        print(f"tiled: {len(t.tiles)} tiles")
    return 0


def cmd_render(args) -> int:
    p = _load(args.file)
    t = read_tiling(args.tiling) if args.tiling else None
    bh = boundary_heights(p, _config(args, p)) if args.heights else None
    spec = RenderSpec(scale=args.px, show_heights=args.heights, show_grid=args.grid, label_tiles=args.labels)
    _write(args.out, render_svg(p, t, bh, spec))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rectile", description="Tile rectilinear polygons by rectangles with an integer side.")
    ap.add_argument("--beta", choices=("paper", "generic"), default="paper",
                    help="basepoint residue: 1/2, or one off the refined grid")
    ap.add_argument("--k", default="auto", help="basepoint depth: auto or a positive integer")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("check", help="boundary word of a polygon")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("heights", help="boundary height profile per edge")
    sp.add_argument("file")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_heights)

    sp = sub.add_parser("tile", help="decide tileability and build a tiling")
    sp.add_argument("file")
    sp.add_argument("--mode", choices=(FAST, CANONICAL), default=FAST)
    sp.add_argument("--scale", default="1", help="lattice scale s: tiles need a side in sZ")
    sp.add_argument("--svg")
    sp.add_argument("--heights", action="store_true", help="label boundary heights in the SVG")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_tile)

    sp = sub.add_parser("bars", help="tile an integer polyomino by n x 1 and 1 x m bars")
    sp.add_argument("file")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--svg")
    sp.add_argument("--heights", action="store_true")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_bars)

    sp = sub.add_parser("normalize", help="moves from a tiling to the canonical one")
    sp.add_argument("tiling")
    sp.add_argument("--out", help="also write the canonical tiling JSON here")
    sp.set_defaults(func=cmd_normalize)

    sp = sub.add_parser("connect", help="moves from one tiling to another")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.set_defaults(func=cmd_connect)

    sp = sub.add_parser("oracle", help="brute-force grid search")
    sp.add_argument("file")
    sp.add_argument("--enumerate", type=int, metavar="N", help="list up to N tilings")
    sp.add_argument("--budget", type=int, default=2_000_000, help="search node budget")
    sp.add_argument("--scale", default="1")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("render", help="SVG of a region and optional tiling")
    sp.add_argument("file")
    sp.add_argument("--tiling")
    sp.add_argument("--heights", action="store_true")
    sp.add_argument("--grid", action="store_true")
    sp.add_argument("--labels", action="store_true")
    sp.add_argument("--px", type=float, default=120.0, help="pixels per unit")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_render)
    return ap


def _error(code: str, msg) -> None:
    print(f"ERROR:{code}: {msg}", file=sys.stderr)


def run(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(name)s: %(message)s")
    if args.k != "auto":
        try:
            if int(args.k) < 1:
                raise ValueError
        except ValueError:
            _error("bad-k", f"--k must be auto or a positive integer, got {args.k!r}")
            return 2
    try:
        return args.func(args)
    except InternalInvariant as exc:
        _error(exc.code, exc)
        return 3
    except RectileError as exc:
        _error(exc.code, exc)
        return exc.exit_code
    except (ValueError, ZeroDivisionError) as exc:
        _error("input", exc)
        return 2
    except RecursionError as exc:
        _error("internal", exc)
        return 3


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

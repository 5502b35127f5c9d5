"""Rational JSON for tilings and move traces."""
from __future__ import annotations

import json
from pathlib import Path
from typing import List, Sequence

from .errors import InputError
from .geometry import Rect, validate
from .groupword import as_rat, fmt_rat
from .moves import Move, move_from_json
from .tiler import Tiling


def tiling_to_json(t: Tiling) -> dict:
    return {
        "region": [[fmt_rat(x), fmt_rat(y)] for x, y in t.region.vertices],
        "basepoint": 0,
        "tiles": [[fmt_rat(c) for c in (r.x0, r.y0, r.x1, r.y1)] for r in t.tiles],
        "mode": t.mode,
        "k": "auto" if t.k is None else t.k,
        "beta": fmt_rat(t.beta),
        "scale": fmt_rat(t.lattice_scale),
    }


def tiling_from_json(d: dict) -> Tiling:
    try:
        pts = [(as_rat(x), as_rat(y)) for x, y in d["region"]]
        base = int(d.get("basepoint", 0))
        pts = pts[base:] + pts[:base]
        region = validate(pts, translate=False)
        tiles = tuple(Rect(*(as_rat(c) for c in r)) for r in d["tiles"])
        k = d.get("k", "auto")
        return Tiling(
            region,
            tiles,
            as_rat(d.get("scale", 1)),
            d.get("mode", "fast"),
            as_rat(d.get("beta", "1/2")),
            None if k in (None, "auto") else int(k),
        )
    except InputError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed tiling JSON: {exc}") from exc


def read_tiling(path) -> Tiling:
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: not JSON: {exc}") from exc
    return tiling_from_json(data)


def trace_to_json(moves: Sequence[Move]) -> List[dict]:
    return [m.to_json() for m in moves]


def trace_from_json(items) -> List[Move]:
    try:
        return [move_from_json(d) for d in items]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed trace JSON: {exc}") from exc


def dumps(obj) -> str:
    return json.dumps(obj, indent=2)

"""Acceptance criteria, one test each, with a PASS/FAIL line per criterion.

The lines are printed as each test runs and again in the terminal summary.
Tilings produced by criteria 1, 2, 3 and 6 are collected for the lasso
criterion, which therefore runs after them (it rebuilds any missing set).
"""
import itertools
import math
import random
import time
from functools import lru_cache

from rectile.families import cell_polygons, null_boundary, random_polygon, random_tileable_polygon
from rectile.geometry import boundary_word, cw_prefix_words, grid_unit, paths_equal_in_G, prefix_words
from rectile.groupword import parse_raw
from rectile.heights import HeightConfig, boundary_heights, point_height
from rectile.moves import connect, lasso_decomposition, lasso_product, normalize, replay
from rectile.oracle import brute_force, brute_force_bars, enumerate_tilings
from rectile.rational import Rat
from rectile.tiler import CANONICAL, FAST, tile, tile_bars, verify_tiling

from conftest import FIG3_CCW, FIG3_CW, fig3_polygon, octagon_polygon, rect_polygon

SIDES = [Rat(1, 3), Rat(1, 2), Rat(2, 3), Rat(1), Rat(5, 4), Rat(3, 2), Rat(2), Rat(3)]

_PRODUCED = {}


# --- criterion 1 ------------------------------------------------------------------


def run_rectangles():
    tilings, rows = [], []
    t_tile = t_oracle = 0.0
    for t1, t2 in itertools.product(SIDES, SIDES):
        p = rect_polygon(t1, t2)
        start = time.perf_counter()
        out = tile(p)
        t_tile += time.perf_counter() - start
        expected = t1.denominator == 1 or t2.denominator == 1
        ok = out.tiled == expected and (not out.tiled or bool(verify_tiling(out.tiling)))
        oracle_ok = None
        if t1 * t2 <= 6:
            start = time.perf_counter()
            found = brute_force(p)
            t_oracle += time.perf_counter() - start
            oracle_ok = (found is not None) == expected
            if found is not None:
                tilings.append(found)
        if out.tiled:
            tilings.append(out.tiling)
        rows.append((t1, t2, ok, oracle_ok))
    return rows, tilings, t_tile, t_oracle


def test_criterion_1_rectangles(acceptance_report):
    start = time.perf_counter()
    rows, tilings, t_tile, t_oracle = run_rectangles()
    total = time.perf_counter() - start
    _PRODUCED[1] = tilings
    agree = sum(ok for *_, ok, _ in rows)
    checked = [o for *_, o in rows if o is not None]
    passed = agree == 64 and all(checked) and total < 10
    acceptance_report(
        1, passed,
        f"{agree}/64 agree with the integer-side rule; oracle agrees on {sum(checked)}/{len(checked)} "
        f"with area <= 6; tile {t_tile:.2f}s, oracle {t_oracle:.2f}s, total {total:.2f}s",
    )
    assert passed


# --- criterion 2 ------------------------------------------------------------------


def test_criterion_2_octagon(acceptance_report):
    p = octagon_polygon()
    alpha_trivial = boundary_word(p).is_identity
    out = tile(p)
    found = brute_force(p, unit=Rat(1, 6))
    _PRODUCED[2] = []
    passed = alpha_trivial and not out.tiled and found is None
    acceptance_report(
        2, passed,
        f"boundary word trivial={alpha_trivial}; tile: {'tiled' if out.tiled else out.reason}; "
        f"oracle on the 1/6 grid: {'found a tiling' if found else 'none'}",
    )
    assert passed


# --- criterion 3 ------------------------------------------------------------------


def test_criterion_3_L_example(acceptance_report):
    p = fig3_polygon()
    equal = paths_equal_in_G(parse_raw(FIG3_CCW), parse_raw(FIG3_CW))
    out = tile(p)
    t0 = tile(p, CANONICAL).tiling
    found = enumerate_tilings(p, cap=10)
    normal_ok = all(normalize(t)[0].same_tiles(t0) for t in found)
    pairs = 0
    connect_ok = True
    for a, b in itertools.combinations(found, 2):
        trace = connect(a, b)
        connect_ok &= replay(a, trace.moves, verify="full").same_tiles(b)
        pairs += 1
    first_edge = boundary_heights(p).profiles[0].generic_height
    _PRODUCED[3] = [out.tiling, t0] + found
    passed = equal and out.tiled and len(found) >= 2 and normal_ok and connect_ok and first_edge == 1
    acceptance_report(
        3, passed,
        f"paths equal in G={equal}; tiled={out.tiled} ({len(out.tiling.tiles)} tiles); "
        f"{len(found)} oracle tilings all normalize to T0={normal_ok}; "
        f"{pairs} pairs connect with fully verified replays={connect_ok}; first-edge height {first_edge}",
    )
    assert passed


# --- criterion 5 and 8 share a sample -------------------------------------------


@lru_cache(maxsize=1)
def height_sample():
    rng = random.Random(5)
    polys, seen = [], set()
    while len(polys) < 200:
        maker = random_polygon if rng.random() < 0.5 else random_tileable_polygon
        p = maker(rng, Rat(1, 4), 12, 12)
        if p is None or p.key() in seen or not boundary_word(p).is_identity:
            continue
        seen.add(p.key())
        polys.append(p)
    return tuple(polys)


def grid_points(e, step):
    t = Rat(0)
    while t <= e.length:
        yield t
        t += step


def test_criterion_5_height_well_defined(acceptance_report):
    polys = height_sample()
    vertex_bad = k_bad = points = 0
    for p in polys:
        E = len(p)
        cfg_a, cfg_b = HeightConfig(k=E + 2), HeightConfig(k=E + 5)
        ccw, cw = prefix_words(p), cw_prefix_words(p)
        for a, b in zip(ccw, cw):
            vertex_bad += point_height(a, cfg_a) != point_height(b, cfg_a)
        step = Rat(1, 2 * grid_unit(p))
        for e in p.edges:
            sgn = 1 if e.signed_length > 0 else -1
            for t in grid_points(e, step):
                g = ccw[e.index].append(e.axis, sgn * t)
                k_bad += point_height(g, cfg_a) != point_height(g, cfg_b)
                points += 1
    passed = len(polys) == 200 and vertex_bad == 0 and k_bad == 0
    acceptance_report(
        5, passed,
        f"{len(polys)} polygons (max {max(len(p) for p in polys)} edges); ccw/cw vertex mismatches {vertex_bad}; "
        f"k=E+2 vs k=E+5 mismatches {k_bad} over {points} boundary points",
    )
    assert passed


def letter_vanishing(words, e, t):
    """Offsets where the edge letter cancels the last letter of the prefix word."""
    last = words[e.index].last()
    if last is None or last[0] != e.axis:
        return t.denominator == 1
    sgn = 1 if e.signed_length > 0 else -1
    return (last[1] + sgn * t) % 1 == 0


def test_criterion_8_drop_spacing(acceptance_report):
    polys = height_sample()
    generic_bad = paper_bad = brute_bad = drops = vanishing = 0
    for p in polys:
        L = grid_unit(p)
        words = prefix_words(p)
        for cfg, mode in ((HeightConfig.generic(L), "generic"), (HeightConfig(), "paper")):
            bh = boundary_heights(p, cfg)
            step = Rat(1, 2 * L) if mode == "paper" else cfg.beta
            for e, prof in zip(p.edges, bh.profiles):
                offs = list(prof.drop_offsets)
                drops += len(offs)
                spaced = all(b - a == 1 for a, b in zip(offs, offs[1:]))
                depth_one = all(d == 1 for d in prof.drop_depths.values())
                if mode == "generic":
                    generic_bad += not (spaced and depth_one)
                else:
                    sub = [t for t in offs if letter_vanishing(words, e, t)]
                    vanishing += len(sub)
                    paper_bad += not all(b - a == 1 for a, b in zip(sub, sub[1:]))
                # the closed-form profile against direct word reduction
                sgn = 1 if e.signed_length > 0 else -1
                for t in itertools.chain(grid_points(e, step), offs):
                    g = words[e.index].append(e.axis, sgn * t)
                    brute_bad += prof.height_at(t) != point_height(g, HeightConfig(k=len(p) + 2, beta=cfg.beta))
    passed = generic_bad == 0 and paper_bad == 0 and brute_bad == 0
    acceptance_report(
        8, passed,
        f"generic beta: {generic_bad} edges with spacing or depth != 1; beta=1/2: {paper_bad} edges with "
        f"letter-vanishing drops ({vanishing}) not 1 apart; {drops} drops in all; "
        f"profile vs direct reduction mismatches {brute_bad}",
    )
    assert passed


# --- criterion 6 ------------------------------------------------------------------


def test_criterion_6_canonicity(acceptance_report):
    start = time.perf_counter()
    polys = null_boundary(cell_polygons(4, 4, Rat(1, 2), 8))
    n_tilings = n_moves = wrong = capped = full_checked = 0
    produced = []
    for p in polys:
        t0 = tile(p, CANONICAL)
        if not t0.tiled:
            wrong += 1
            continue
        produced.append(t0.tiling)
        found = enumerate_tilings(p, cap=500)
        capped += len(found) == 500
        for i, t in enumerate(found):
            n_tilings += 1
            out, trace = normalize(t)
            n_moves += len(trace)
            # a verified start plus legal moves verifies every state; a
            # sample is also re-verified state by state
            mode = "full" if i % 97 == 0 else "local"
            full_checked += mode == "full"
            end = replay(t, trace.moves, verify=mode)
            wrong += not (out.same_tiles(t0.tiling) and end.same_tiles(t0.tiling))
        produced.extend(found)
    elapsed = time.perf_counter() - start
    _PRODUCED[6] = produced
    passed = wrong == 0 and elapsed < 300
    acceptance_report(
        6, passed,
        f"{len(polys)} regions, {n_tilings} oracle tilings ({capped} regions hit the cap of 500), "
        f"{n_tilings - wrong if wrong <= n_tilings else 0}/{n_tilings} reach tile(canonical) by replay; "
        f"{n_moves} moves; {full_checked} traces re-verified state by state; {elapsed:.0f}s",
    )
    assert passed


# --- criterion 4 ------------------------------------------------------------------


def test_criterion_4_lasso_identity(acceptance_report):
    if 1 not in _PRODUCED:
        _PRODUCED[1] = run_rectangles()[1]
    if 3 not in _PRODUCED:
        p = fig3_polygon()
        _PRODUCED[3] = [tile(p).tiling, tile(p, CANONICAL).tiling] + enumerate_tilings(p, cap=10)
    if 6 not in _PRODUCED:
        _PRODUCED[6] = [
            t
            for p in null_boundary(cell_polygons(4, 4, Rat(1, 2), 8))
            for t in [tile(p, CANONICAL).tiling] + enumerate_tilings(p, cap=500)
        ]
    counts = {}
    bad = 0
    for crit in (1, 2, 3, 6):
        tilings = _PRODUCED.get(crit, [])
        counts[crit] = len(tilings)
        for t in tilings:
            bad += lasso_product(lasso_decomposition(t)) != boundary_word(t.region)
    total = sum(counts.values())
    passed = bad == 0 and total > 0
    acceptance_report(
        4, passed,
        f"{total - bad}/{total} lasso products equal the boundary word "
        f"(per criterion: {', '.join(f'{k}: {v}' for k, v in counts.items())})",
    )
    assert passed


# --- criterion 7 ------------------------------------------------------------------


def test_criterion_7_bars(acceptance_report):
    polys = list(cell_polygons(4, 4, 1, max_edges=100))
    keys = {p.key() for p in polys}
    square3 = rect_polygon(3, 3)
    mutilated = fig_mutilated()
    disagree = tiled = 0
    for p in polys:
        out = tile_bars(p, 2, 2)
        if out.tiled:
            tiled += 1
            disagree += not verify_tiling(out.tiling)
        disagree += out.tiled != (brute_force_bars(p, 2, 2) is not None)
    specials = (
        square3.key() in keys
        and mutilated.key() in keys
        and not tile_bars(square3, 2, 2).tiled
        and not tile_bars(mutilated, 2, 2).tiled
    )
    passed = disagree == 0 and specials
    acceptance_report(
        7, passed,
        f"{len(polys)} simple polyominoes in a 4x4 box, {tiled} domino-tileable, {disagree} disagreements; "
        f"3x3 and mutilated 4x4 untileable={specials}",
    )
    assert passed


def fig_mutilated():
    from rectile.geometry import validate

    return validate([(1, 0), (4, 0), (4, 3), (3, 3), (3, 4), (0, 4), (0, 1), (1, 1)])


# --- criterion 9 ------------------------------------------------------------------


def fit_exponent(areas, times):
    xs = [math.log(a) for a in areas]
    ys = [math.log(t) for t in times]
    mx, my = sum(xs) / len(xs), sum(ys) / len(ys)
    return sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / sum((x - mx) ** 2 for x in xs)


def time_squares(mode, sizes=(8, 16, 32, 64), repeats=3):
    times = []
    for n in sizes:
        p = rect_polygon(n, n)
        best = math.inf
        for _ in range(repeats):
            start = time.perf_counter()
            out = tile(p, mode)
            best = min(best, time.perf_counter() - start)
            assert out.tiled
        times.append(best)
    return [n * n for n in sizes], times


def test_criterion_9_complexity(acceptance_report):
    areas, fast = time_squares(FAST)
    _, canon = time_squares(CANONICAL, repeats=1)
    e_fast, e_canon = fit_exponent(areas, fast), fit_exponent(areas, canon)
    passed = e_fast <= 1.5 and e_canon <= 1.5
    acceptance_report(
        9, passed,
        f"exponent vs area: fast {e_fast:.2f}, canonical {e_canon:.2f} "
        f"(times fast {', '.join(f'{t * 1000:.1f}ms' for t in fast)}; "
        f"canonical {', '.join(f'{t:.2f}s' for t in canon)})",
    )
    assert passed

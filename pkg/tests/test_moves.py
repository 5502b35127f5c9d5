import random
from collections import deque

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rectile.errors import DifferentRegions, IllegalMove, NoInteriorMax
from rectile.geometry import Rect, boundary_word
from rectile.groupword import H, V
from rectile.moves import (
    Merge,
    Split,
    apply_move,
    connect,
    lasso_decomposition,
    lasso_product,
    lower_interior_max,
    move_from_json,
    normalize,
    replay,
    tiling_hash,
)
from rectile.oracle import enumerate_tilings
from rectile.rational import Rat
from rectile.tiler import CANONICAL, Tiling, tile, verify_tiling

from conftest import rect_polygon


def one_tile(w, h):
    p = rect_polygon(w, h)
    return Tiling(p, (Rect(0, 0, w, h),))


def test_split_and_merge_are_inverse():
    t = one_tile(1, 2)
    s = apply_move(t, Split(0, H, Rat(1)))
    assert s.key() == (Rect(0, 0, 1, 1), Rect(0, 1, 1, 2))
    assert verify_tiling(s)
    back = apply_move(s, Merge(0, 1))
    assert back.same_tiles(t)


def test_vertical_cut_of_wide_tile():
    t = one_tile(Rat(3, 2), 1)
    s = apply_move(t, Split(0, V, Rat(3, 4)))
    assert [r.width for r in s.tiles] == [Rat(3, 4), Rat(3, 4)]
    assert verify_tiling(s)


def test_illegal_moves():
    t = one_tile(1, 2)
    with pytest.raises(IllegalMove):
        apply_move(t, Split(0, H, Rat(2)))
    with pytest.raises(IllegalMove):
        apply_move(t, Split(3, H, Rat(1)))
    # both pieces of a (1/2) x 2 tile cut at height 1/2 would lose their integer side
    with pytest.raises(IllegalMove):
        apply_move(one_tile(Rat(1, 2), 2), Split(0, H, Rat(1, 2)))
    p = rect_polygon(2, 2)
    corner = Tiling(p, (Rect(0, 0, 1, 1), Rect(1, 1, 2, 2), Rect(1, 0, 2, 1), Rect(0, 1, 1, 2)))
    with pytest.raises(IllegalMove):
        apply_move(corner, Merge(0, 1))
    with pytest.raises(IllegalMove):
        apply_move(corner, Merge(0, 0))


def test_merge_of_unequal_pieces():
    p = rect_polygon(Rat(3, 2), 1)
    t = Tiling(p, (Rect(0, 0, Rat(1, 2), 1), Rect(Rat(1, 2), 0, Rat(3, 2), 1)))
    assert verify_tiling(apply_move(t, Merge(0, 1)))


def test_move_json_round_trip():
    for mv in (Split(2, V, Rat(3, 4)), Merge(1, 4)):
        assert move_from_json(mv.to_json()) == mv


def test_replay_modes():
    t = one_tile(1, 2)
    moves = [Split(0, H, Rat(1)), Split(1, V, Rat(1, 2)), Merge(1, 2)]
    for mode in ("local", "full", "none"):
        assert replay(t, moves, verify=mode).key() == (Rect(0, 0, 1, 1), Rect(0, 1, 1, 2))
    with pytest.raises(ValueError):
        replay(t, moves, verify="sometimes")
    bad = Tiling(t.region, (Rect(0, 0, 1, 1),))
    with pytest.raises(IllegalMove):
        replay(bad, [])


def test_trace_states_regenerate_every_tiling(fig3):
    t = enumerate_tilings(fig3, cap=1)[0]
    out, trace = normalize(t)
    states = trace.states(t)
    assert len(states) == len(trace) + 1
    assert tiling_hash(states[0]) == trace.start_hash
    assert tiling_hash(states[-1]) == trace.end_hash
    assert states[-1].same_tiles(out)
    assert all(verify_tiling(s) for s in states)


def test_normalize_fixed_point(fig3):
    t0 = tile(fig3, CANONICAL).tiling
    out, trace = normalize(t0)
    assert out.same_tiles(t0)
    again, _ = normalize(out)
    assert again.same_tiles(out)


def test_normalize_reaches_the_canonical_tiling(fig3):
    t0 = tile(fig3, CANONICAL).tiling
    for t in enumerate_tilings(fig3, cap=6):
        out, trace = normalize(t)
        assert out.same_tiles(t0)
        assert replay(t, trace.moves, verify="full").same_tiles(t0)


def test_lower_interior_max_merges_the_high_edge():
    p = rect_polygon(Rat(1, 2), 1)
    t = Tiling(p, (Rect(0, 0, Rat(1, 4), 1), Rect(Rat(1, 4), 0, Rat(1, 2), 1)))
    out, trace = lower_interior_max(t)
    assert out.key() == (Rect(0, 0, Rat(1, 2), 1),)
    assert trace.moves == [Merge(0, 1)]


def test_lower_interior_max_without_interior_maximum():
    with pytest.raises(NoInteriorMax):
        lower_interior_max(one_tile(1, 1))
    p = rect_polygon(2, 1)
    with pytest.raises(NoInteriorMax):
        lower_interior_max(Tiling(p, (Rect(0, 0, 1, 1), Rect(1, 0, 2, 1))))


def shortest_move_path(a, b, limit=4):
    """Breadth-first search over split/merge moves on a half-unit grid."""
    def moves_of(t):
        for i, r in enumerate(t.tiles):
            for axis, extent in ((H, r.height), (V, r.width)):
                off = Rat(1, 2)
                while off < extent:
                    yield Split(i, axis, off)
                    off += Rat(1, 2)
        for i in range(len(t.tiles)):
            for j in range(i + 1, len(t.tiles)):
                yield Merge(i, j)

    seen = {a.key(): 0}
    queue = deque([(a, 0)])
    while queue:
        t, d = queue.popleft()
        if t.same_tiles(b):
            return d
        if d == limit:
            continue
        for mv in moves_of(t):
            try:
                n = apply_move(t, mv)
            except IllegalMove:
                continue
            if n.key() not in seen:
                seen[n.key()] = d + 1
                queue.append((n, d + 1))
    return None


def test_connect_domino_tilings_of_two_by_two():
    p = rect_polygon(2, 2)
    a = Tiling(p, (Rect(0, 0, 1, 2), Rect(1, 0, 2, 2)))
    b = Tiling(p, (Rect(0, 0, 2, 1), Rect(0, 1, 2, 2)))
    assert shortest_move_path(a, b) <= 4
    trace = connect(a, b)
    assert replay(a, trace.moves, verify="full").same_tiles(b)


def test_connect_identical_and_foreign():
    t = one_tile(1, 1)
    assert len(connect(t, t)) == 0
    with pytest.raises(DifferentRegions):
        connect(t, one_tile(1, 2))


def test_connect_L_example_tilings(fig3):
    found = enumerate_tilings(fig3, cap=3)
    trace = connect(found[0], found[-1])
    assert replay(found[0], trace.moves).same_tiles(found[-1])


def test_lasso_examples(fig3):
    t = one_tile(1, 1)
    lassos = lasso_decomposition(t)
    assert len(lassos) == 1 and lassos[0].is_identity
    p = rect_polygon(2, 1)
    two = Tiling(p, (Rect(0, 0, 1, 1), Rect(1, 0, 2, 1)))
    lassos = lasso_decomposition(two)
    assert len(lassos) == 2 and lasso_product(lassos).is_identity
    algo = tile(fig3).tiling
    assert lasso_product(lasso_decomposition(algo)) == boundary_word(fig3)


def test_lasso_product_over_the_reals(fig3):
    for t in enumerate_tilings(fig3, cap=3):
        lassos = lasso_decomposition(t, modulus=None)
        assert len(lassos) == len(t.tiles)
        assert lasso_product(lassos) == boundary_word(fig3, modulus=None)


@given(st.integers(1, 4), st.integers(1, 4), st.integers(0, 50))
def test_normalize_rectangles_from_random_splits(w, h, seed):
    rng = random.Random(seed)
    t = one_tile(Rat(w, 2) if w % 2 else Rat(w), Rat(h))
    # random legal splits from the single-tile tiling
    for _ in range(rng.randint(0, 5)):
        i = rng.randrange(len(t.tiles))
        r = t.tiles[i]
        axis = rng.choice((H, V))
        extent = r.height if axis == H else r.width
        steps = int(extent * 4)
        if steps < 2:
            continue
        try:
            t = apply_move(t, Split(i, axis, Rat(rng.randint(1, steps - 1), 4)))
        except IllegalMove:
            continue
    assert verify_tiling(t)
    out, trace = normalize(t)
    assert out.same_tiles(tile(t.region, CANONICAL).tiling)
    assert replay(t, trace.moves, verify="full").same_tiles(out)

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rectile.errors import BoundaryWordNotTrivial, PathInconsistent
from rectile.families import random_polygon, random_tileable_polygon
from rectile.geometry import Rect, boundary_word, grid_unit, prefix_words
from rectile.groupword import H, V, identity, parse_word
from rectile.heights import (
    HeightConfig,
    boundary_heights,
    edge_profile,
    interior_point_height,
    point_height,
)
from rectile.rational import Rat

from conftest import rect_polygon
from test_groupword import naive_reduce


def naive_height(path, beta=Rat(1, 2), k=None):
    """Length of x0 followed by the reversed boundary walk, reduced by brute force."""
    k = k if k is not None else len(path) + 3
    x0 = [(H, -beta), (V, -beta)] * k
    back = [(a, -q) for a, q in reversed(path)]
    # |x0 * g| = |g^-1 * x0^-1|; reduce the latter from raw letters
    inv_x0 = [(a, -q) for a, q in reversed(x0)]
    return len(naive_reduce(back + inv_x0)) - 2 * k


def boundary_path_to(p, edge_index, offset):
    path = [(e.axis, e.signed_length) for e in p.edges[:edge_index]]
    e = p.edges[edge_index]
    path.append((e.axis, offset if e.signed_length > 0 else -offset))
    return path


# --- worked point examples ------------------------------------------------------


def test_point_height_examples():
    cfg = HeightConfig()
    assert point_height(identity(), cfg) == 0
    assert point_height(parse_word("h(1/2)"), cfg) == 1
    assert point_height(parse_word("h(1)"), cfg) == 0


def test_raw_height_is_shifted_by_2k():
    cfg = HeightConfig(k=5, normalize=False)
    assert point_height(identity(), cfg) == 10
    assert point_height(parse_word("h(1/2)"), cfg) == 11


def test_first_edge_of_L_example(fig3):
    prof = edge_profile(identity(), H, Rat(1))
    assert prof.generic_height == 1
    assert prof.end_height == 0
    assert prof.drop_offsets == ()
    bh = boundary_heights(fig3)
    assert bh.profiles[0].generic_height == 1


def test_unit_square_heights():
    bh = boundary_heights(rect_polygon(1, 1))
    assert bh.max_height == 1
    # vertical sides sit one level lower, with a drop at their midpoint
    assert bh.min_height == -1
    assert [pr.generic_height for pr in bh.profiles] == [1, 0, 1, 0]
    assert bh.profiles[1].drop_offsets == (Rat(1, 2),)


def test_half_square_has_no_heights():
    with pytest.raises(BoundaryWordNotTrivial):
        boundary_heights(rect_polygon(Rat(1, 2), Rat(1, 2)))


def test_L_example_levels(fig3):
    bh = boundary_heights(fig3)
    assert (bh.max_height, bh.min_height) == (4, -1)
    assert bh.max_height - bh.min_height >= 2
    for i in bh.argmax:
        assert fig3.edges[i].length.denominator == 1


def test_profiles_match_brute_force_on_L_example(fig3):
    bh = boundary_heights(fig3)
    step = Rat(1, 2 * grid_unit(fig3))
    for e, prof in zip(fig3.edges, bh.profiles):
        t = Rat(0)
        while t <= e.length:
            assert prof.height_at(t) == naive_height(boundary_path_to(fig3, e.index, t)), (e.index, t)
            t += step


def test_interior_cross_point_of_four_squares():
    tiles = [Rect(0, 0, 1, 1), Rect(1, 0, 2, 1), Rect(0, 1, 1, 2), Rect(1, 1, 2, 2)]
    assert interior_point_height(tiles, (1, 1)) == 0


def test_every_skeleton_point_is_path_independent():
    tiles = [Rect(0, 0, 2, Rat(1, 3)), Rect(0, Rat(1, 3), 1, 1), Rect(1, Rat(1, 3), 2, 1)]
    for pt in [(1, Rat(1, 3)), (1, Rat(2, 3)), (Rat(1, 2), Rat(1, 3)), (Rat(3, 2), Rat(1, 3))]:
        interior_point_height(tiles, pt)


def test_tiles_without_integer_side_are_rejected():
    tiles = [Rect(0, 0, 1, Rat(3, 4)), Rect(0, Rat(3, 4), 1, Rat(3, 2))]
    # both tiles have width 1, so this one is fine
    interior_point_height(tiles, (Rat(1, 2), Rat(3, 4)))
    bad = [Rect(0, 0, Rat(1, 2), Rat(3, 4)), Rect(Rat(1, 2), 0, 1, Rat(3, 4))]
    with pytest.raises(PathInconsistent):
        interior_point_height(bad, (Rat(1, 2), Rat(3, 8)))


# --- properties on random null-boundary polygons --------------------------------


def sample_polygon(seed):
    rng = random.Random(seed)
    maker = random_polygon if rng.random() < 0.5 else random_tileable_polygon
    p = maker(rng, Rat(1, 4), 12, 12)
    if p is None or not boundary_word(p).is_identity:
        return None
    return p


@given(st.integers(0, 100_000), st.sampled_from(["paper", "generic"]))
def test_k_stability_and_closed_form(seed, beta_mode):
    p = sample_polygon(seed)
    if p is None:
        return
    E = len(p)
    L = grid_unit(p)
    cfg = HeightConfig() if beta_mode == "paper" else HeightConfig.generic(L)
    bh = boundary_heights(p, cfg)
    words = prefix_words(p)
    step = Rat(1, 2 * L)
    for e, prof in zip(p.edges, bh.profiles):
        sgn = 1 if e.signed_length > 0 else -1
        t = Rat(0)
        while t <= e.length:
            g = words[e.index].append(e.axis, sgn * t)
            a = point_height(g, HeightConfig(k=E + 2, beta=cfg.beta))
            b = point_height(g, HeightConfig(k=E + 5, beta=cfg.beta))
            assert a == b == prof.height_at(t)
            t += step


@given(st.integers(0, 100_000))
def test_generic_beta_drops_are_unit_spaced_and_one_deep(seed):
    p = sample_polygon(seed)
    if p is None:
        return
    bh = boundary_heights(p, HeightConfig.generic(grid_unit(p)))
    for e, prof in zip(p.edges, bh.profiles):
        drops = list(prof.drop_offsets)
        assert all(b - a == 1 for a, b in zip(drops, drops[1:]))
        assert all(d == 1 for d in prof.drop_depths.values())
        assert all(0 < t < e.length for t in drops)


@given(st.integers(0, 100_000))
def test_brute_force_heights_agree_with_profiles(seed):
    p = sample_polygon(seed)
    if p is None or len(p) > 8:
        return
    bh = boundary_heights(p)
    step = Rat(1, 4)
    for e, prof in zip(p.edges, bh.profiles):
        t = Rat(0)
        while t <= e.length:
            assert prof.height_at(t) == naive_height(boundary_path_to(p, e.index, t))
            t += step

import itertools
import random

import pytest
from hypothesis import given, strategies as st

from khfri import (
    Interval,
    LevelMismatch,
    NotCNF,
    OutOfRange,
    alpha_cut,
    lower_distance,
    make_trapezoid,
    precedes,
    upper_distance,
)

levels = st.floats(0.0, 1.0)
coords = st.lists(st.floats(-100, 100, allow_nan=False), min_size=4, max_size=4).map(sorted)
trapezoids = coords.map(lambda pts: make_trapezoid(*pts))
# quarter-grid points keep the dense oracle's arithmetic exact
grid_trapezoids = st.lists(st.integers(-40, 40), min_size=4, max_size=4).map(
    lambda v: make_trapezoid(*sorted(x / 4 for x in v))
)


def test_make_trapezoid_example_x1():
    a = make_trapezoid(0, 2, 2, 6)
    assert a.points == (0.0, 2.0, 2.0, 6.0)


def test_singleton_is_valid():
    s = make_trapezoid(1, 1, 1, 1)
    assert alpha_cut(s, 0.3) == Interval(1.0, 1.0, 0.3)


@pytest.mark.parametrize("pts", [(0, 3, 2, 6), (1, 0, 2, 3), (0, 1, 5, 4)])
def test_misordered_points_rejected(pts):
    with pytest.raises(NotCNF):
        make_trapezoid(*pts)


def test_role_does_not_affect_equality():
    assert make_trapezoid(0, 1, 1, 2, role="antecedent") == make_trapezoid(0, 1, 1, 2, role="consequent")


@pytest.mark.parametrize("alpha, expected", [(0.0, (7.0, 9.0)), (1.0, (8.0, 8.0)), (0.5, (7.5, 8.5))])
def test_alpha_cut_observation_x1(alpha, expected):
    cut = alpha_cut(make_trapezoid(7, 8, 8, 9), alpha)
    assert (cut.lo, cut.hi) == expected
    assert cut.level == alpha


@pytest.mark.parametrize("alpha", [-0.01, 1.01, float("nan")])
def test_alpha_cut_out_of_range(alpha):
    with pytest.raises(OutOfRange):
        alpha_cut(make_trapezoid(0, 1, 1, 2), alpha)


def test_precedes_examples():
    a1, astar, a2 = make_trapezoid(0, 2, 2, 6), make_trapezoid(7, 8, 8, 9), make_trapezoid(10, 12, 12, 16)
    assert precedes(a1, astar) and precedes(astar, a2)
    assert not precedes(a1, a1)
    assert not precedes(make_trapezoid(0, 1, 1, 2), make_trapezoid(0, 2, 2, 3))


def test_distances():
    # Y1 situation 1 at alpha 0: inf(A*) = 9, inf(A1) = 0
    astar0 = alpha_cut(make_trapezoid(9, 11, 11, 13), 0.0)
    a10 = alpha_cut(make_trapezoid(0, 2, 2, 8), 0.0)
    assert lower_distance(astar0, a10) == 9.0
    assert lower_distance(a10, a10) == 0.0
    # X1 at alpha 0: sup(A*) = 9, sup(A2) = 16
    x1_astar0 = alpha_cut(make_trapezoid(7, 8, 8, 9), 0.0)
    x1_a20 = alpha_cut(make_trapezoid(10, 12, 12, 16), 0.0)
    assert upper_distance(x1_astar0, x1_a20) == 7.0


def test_distance_level_mismatch():
    s = make_trapezoid(0, 1, 1, 2)
    with pytest.raises(LevelMismatch):
        lower_distance(alpha_cut(s, 0.0), alpha_cut(s, 0.5))
    with pytest.raises(LevelMismatch):
        upper_distance(alpha_cut(s, 0.0), alpha_cut(s, 0.5))


@given(trapezoids, levels, levels)
def test_cuts_are_nested(s, x, y):
    lo_a, hi_a = sorted((x, y))
    outer, inner = alpha_cut(s, lo_a), alpha_cut(s, hi_a)
    assert outer.lo <= inner.lo + 1e-12
    assert inner.hi <= outer.hi + 1e-12
    assert inner.valid and outer.valid


@given(trapezoids, levels, levels, levels)
def test_cut_endpoints_are_affine(s, x, y, z):
    pts = [alpha_cut(s, a) for a in (x, y, z)]
    for end in ("lo", "hi"):
        (x1, y1), (x2, y2), (x3, y3) = [(c.level, getattr(c, end)) for c in pts]
        area = (x2 - x1) * (y3 - y1) - (x3 - x1) * (y2 - y1)
        assert abs(area) <= 1e-9 * (1 + max(abs(y1), abs(y2), abs(y3)))


def test_precedes_is_strict_partial_order():
    rng = random.Random(7)
    sets = [make_trapezoid(*sorted(rng.randint(0, 6) for _ in range(4))) for _ in range(40)]
    for a in sets:
        assert not precedes(a, a)
    for a, b, c in itertools.product(sets[:20], repeat=3):
        if precedes(a, b) and precedes(b, c):
            assert precedes(a, c)
        if precedes(a, b):
            assert not precedes(b, a)


@given(grid_trapezoids, grid_trapezoids)
def test_precedes_matches_dense_check(a, b):
    dense = all(
        alpha_cut(a, t / 50).lo < alpha_cut(b, t / 50).lo and alpha_cut(a, t / 50).hi < alpha_cut(b, t / 50).hi
        for t in range(51)
    )
    assert precedes(a, b) == dense

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from plane_reconfig.geometry import (CCW, CW, COORD_BOUND, GeometryError, PointSet, convex_hull, convex_point_set,
                                     orientation, point_in_hull, properly_cross, radial_order, random_point_set,
                                     segment_visible, triangle_strictly_empty)

coord = st.integers(-COORD_BOUND, COORD_BOUND)
point = st.tuples(coord, coord)


def test_orientation_examples():
    assert orientation((0, 0), (2, 0), (2, 2)) == 1
    assert orientation((0, 0), (2, 0), (4, 0)) == 0
    assert orientation((0, 0), (2, 2), (2, 0)) == -1


@given(point, point, point)
def test_orientation_antisymmetric(p, q, r):
    assert orientation(p, q, r) == -orientation(q, p, r) == orientation(q, r, p)


@given(point, point, point)
def test_orientation_extreme_coordinates_exact(p, q, r):
    # python ints never overflow, so compare with the rational determinant sign
    det = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    assert orientation(p, q, r) == (det > 0) - (det < 0)


def test_orientation_at_bound():
    b = COORD_BOUND
    assert orientation((-b, -b), (b, -b), (b, b)) == 1
    assert orientation((-b, -b), (b, b), (b - 1, b)) == 1


def test_pointset_rejects_bad_input():
    with pytest.raises(GeometryError) as e:
        PointSet([(0, 0), (1, 1), (2, 2), (0, 1)])
    assert e.value.indices == (0, 1, 2)
    with pytest.raises(GeometryError):
        PointSet([(0, 0), (1, 0)])
    with pytest.raises(GeometryError):
        PointSet([(0, 0), (1, 0), (0, 0)])
    with pytest.raises(GeometryError):
        PointSet([(0, 0), (1, 0), (0, COORD_BOUND + 1)])
    with pytest.raises(GeometryError):
        PointSet([(0, 0), (1, 0), (0.5, 2)])


def test_properly_cross_square(square):
    assert properly_cross((0, 2), (1, 3), square)
    assert not properly_cross((0, 1), (1, 2), square)
    assert not properly_cross((0, 1), (2, 3), square)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32))
def test_properly_cross_matches_oracle(seed):
    ps = random_point_set(6, random.Random(seed), grid=50)
    pts = [tuple(p) for p in ps]
    for s in ps.segments:
        for t in ps.segments:
            assert properly_cross(s, t, ps) == oracles.cross(pts, s, t)


def test_convex_hull_examples(square, square_inner):
    assert convex_hull(square, range(4)) == [0, 1, 2, 3]
    assert sorted(convex_hull(square_inner, range(5))) == [0, 1, 2, 3]
    assert convex_hull(square, {2}) == [2]


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32), st.integers(3, 9))
def test_convex_hull_matches_gift_wrapping(seed, n):
    ps = random_point_set(n, random.Random(seed), grid=100)
    pts = [tuple(p) for p in ps]
    h = convex_hull(ps, range(n))
    ref = oracles.hull_of(pts, range(n))
    assert sorted(h) == sorted(ref)
    # CCW: consecutive triples turn left
    for i in range(len(h)):
        assert ps.orient(h[i], h[(i + 1) % len(h)], h[(i + 2) % len(h)]) == 1
    for p in range(n):
        if p not in h:
            assert point_in_hull(p, h, ps)


def test_triangle_strictly_empty(square, square_inner):
    assert triangle_strictly_empty(0, 1, 2, square)
    assert not triangle_strictly_empty(0, 1, 2, square_inner)
    assert triangle_strictly_empty(0, 1, 4, square_inner)


def test_segment_visible(square, square_inner):
    assert not segment_visible(0, 2, [(1, 3)], square)
    assert segment_visible(0, 2, [(0, 1), (1, 2)], square)
    assert not segment_visible(0, 2, [(1, 4), (4, 3)], square_inner)


def test_radial_order_square(square):
    # sweeping from direction (0,0) about (2,0) towards the interior is clockwise (y up)
    assert radial_order(1, 0, [2, 3], square, CW) == [3, 2]
    assert radial_order(1, 0, [2, 3], square, CCW) == [2, 3]
    assert radial_order(1, 0, [3], square, CW) == [3]
    assert radial_order(1, 0, [], square, CW) == []


def test_radial_order_rejects_pivot(square):
    with pytest.raises(ValueError):
        radial_order(1, 0, [1, 2], square, CW)
    with pytest.raises(ValueError):
        radial_order(1, 0, [2], square, 0)


def test_random_point_set_deterministic():
    a = random_point_set(8, random.Random(7))
    b = random_point_set(8, random.Random(7))
    assert a == b and a.n == 8


@pytest.mark.parametrize("n", range(3, 13))
def test_convex_point_set(n):
    ps = convex_point_set(n)
    assert ps.in_convex_position()
    h = list(ps.hull)
    k = h.index(0)
    assert h[k:] + h[:k] == list(range(n))


def test_cross_masks_symmetric(six):
    cm = six.cross_masks
    for i in range(len(cm)):
        for j in range(len(cm)):
            assert bool(cm[i] >> j & 1) == bool(cm[j] >> i & 1)

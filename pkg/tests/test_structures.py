import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from plane_reconfig.geometry import PointSet, convex_point_set, random_point_set
from plane_reconfig.structures import (CapExceeded, Family, SpanningStructure, StructureError, classify,
                                       enumerate_double_stars, enumerate_keys, enumerate_plane_trees,
                                       in_family, is_generalized_peeling_path, is_peeling_sequence,
                                       is_well_separated, make_star, path_order, well_separated_orientations)

FAMILY_NAMES = {Family.ALL: "all", Family.CATERPILLARS: "caterpillars", Family.PATHS: "paths"}

# filtered complete-graph oracle on convex n = 3..7 (tests/oracles.py, frozen)
CONVEX_COUNTS = {
    3: (3, 3, 3),
    4: (12, 12, 8),
    5: (55, 55, 20),
    6: (273, 273, 48),
    7: (1428, 1372, 112),
}


def edge_sets(ps, family):
    return {frozenset(t.edges) for t in enumerate_plane_trees(ps, family)}


@pytest.mark.parametrize("n", sorted(CONVEX_COUNTS))
def test_convex_counts(n):
    ps = convex_point_set(n)
    got = tuple(len(enumerate_keys(ps, f)) for f in Family)
    assert got == CONVEX_COUNTS[n]


def test_square_counts(square):
    assert len(list(enumerate_plane_trees(square))) == 12
    assert len(list(enumerate_plane_trees(square, Family.PATHS))) == 8
    assert len(list(enumerate_plane_trees(square, Family.CATERPILLARS))) == 12
    # 16 labeled spanning trees of K4, 4 of them use both diagonals
    assert oracles.spanning_tree_count(4) - 4 == 12


@pytest.mark.parametrize("pts", ["square_inner", "six"])
@pytest.mark.parametrize("family", list(Family))
def test_enumeration_matches_oracle(pts, family, request):
    ps = request.getfixturevalue(pts)
    ref = set(oracles.plane_trees([tuple(p) for p in ps], FAMILY_NAMES[family]))
    assert edge_sets(ps, family) == ref


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32), st.integers(3, 6))
def test_enumeration_random_sets(seed, n):
    ps = random_point_set(n, random.Random(seed), grid=60)
    pts = [tuple(p) for p in ps]
    for family in Family:
        assert edge_sets(ps, family) == set(oracles.plane_trees(pts, FAMILY_NAMES[family]))


def test_paths_match_hamiltonian_oracle(six):
    ref = {frozenset(tuple(sorted(e)) for e in zip(p, p[1:])) for p in oracles.hamiltonian_paths(list(six))}
    assert edge_sets(six, Family.PATHS) == ref


def test_structure_validation(square):
    with pytest.raises(StructureError, match="cross"):
        SpanningStructure(square, [(0, 2), (1, 3), (0, 1)])
    with pytest.raises(StructureError):
        SpanningStructure(square, [(0, 1), (1, 2)])
    with pytest.raises(StructureError):
        SpanningStructure(square, [(0, 1), (1, 2), (0, 2)])


def test_classify_examples(square):
    assert classify(SpanningStructure(square, [(0, 1), (1, 2), (2, 3)])).kind == "path"
    c = classify(SpanningStructure(square, [(0, 1), (0, 2), (0, 3)]))
    assert c.kind == "star" and c.center == 0
    ps = convex_point_set(6)
    d = classify(SpanningStructure(ps, [(0, 1), (0, 5), (0, 4), (1, 2), (1, 3)]))
    assert d.kind == "double_star" and set(d.centers) == {0, 1}


def test_classify_caterpillar_and_other():
    ps = convex_point_set(7)
    c = classify(SpanningStructure(ps, [(0, 1), (1, 2), (2, 3), (1, 6), (2, 5), (3, 4)]))
    assert c.kind == "caterpillar" and c.spine in ((1, 2, 3), (3, 2, 1))
    # spider with three legs of length two is the smallest non-caterpillar
    spider = SpanningStructure(ps, [(0, 1), (1, 2), (0, 6), (6, 5), (0, 3), (3, 4)])
    assert classify(spider).kind == "other"
    assert not in_family(spider, Family.CATERPILLARS)
    assert in_family(spider, Family.ALL)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 2**32))
def test_classify_agrees_with_oracle(seed):
    ps = random_point_set(7, random.Random(seed))
    for t in enumerate_plane_trees(ps):
        cat = oracles.is_caterpillar(7, t.edges)
        assert classify(t).is_caterpillar == cat == in_family(t, Family.CATERPILLARS)
        assert (classify(t).kind == "path") == oracles.is_path(7, t.edges)


def test_path_order(square):
    assert path_order(SpanningStructure(square, [(1, 0), (0, 3), (3, 2)])) == [1, 0, 3, 2]


def test_make_star(square, triangle, square_inner):
    assert make_star(square, 0).edges == ((0, 1), (0, 2), (0, 3))
    assert make_star(triangle, 1).edges == ((0, 1), (1, 2))
    assert make_star(square_inner, 4).degree(4) == 4


def test_double_stars(square, triangle):
    got = {frozenset(t.edges) for t in enumerate_double_stars(square, 0, 1)}
    assert got == {frozenset({(0, 1), (0, 2), (0, 3)}), frozenset({(0, 1), (1, 2), (1, 3)}),
                   frozenset({(0, 1), (1, 2), (0, 3)})}
    assert len(list(enumerate_double_stars(triangle, 0, 1))) == 2
    with pytest.raises(ValueError):
        list(enumerate_double_stars(square, 1, 1))


def test_peeling_paths(square):
    t = SpanningStructure.from_path(square, [0, 1, 2, 3])
    assert is_generalized_peeling_path(t, [0, 1, 2, 3])
    assert is_generalized_peeling_path(SpanningStructure.from_path(square, [0, 1, 3, 2]), [0, 1, 3, 2])
    with pytest.raises(StructureError):
        is_generalized_peeling_path(t, [0, 2, 1, 3])


def test_interior_point_cannot_start():
    ps = PointSet([(0, 0), (10, 0), (5, 10), (5, 3)])
    assert is_peeling_sequence(ps, [0, 1, 2, 3])
    assert not is_peeling_sequence(ps, [3, 0, 1, 2])


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 2**32), st.integers(3, 6))
def test_peeling_sequences_match_oracle(seed, n):
    ps = random_point_set(n, random.Random(seed), grid=80)
    ref = set(oracles.peeling_orders(list(ps)))
    got = {o for o in itertools.permutations(range(n)) if is_peeling_sequence(ps, o)}
    assert got == ref


def test_well_separated(square):
    star = make_star(square, 2)
    assert is_well_separated(star, (2,))
    path = SpanningStructure.from_path(square, [0, 1, 2, 3])
    assert is_well_separated(path, (1, 2)) and is_well_separated(path, (2, 1))
    # spine vertex 3 sits inside the hull of the first group {0, 1, 2}
    ps = PointSet([(0, 0), (10, 0), (5, 10), (5, 3), (20, 5)])
    t = SpanningStructure(ps, [(0, 1), (0, 2), (0, 3), (3, 4)])
    assert classify(t).spine in ((0, 3), (3, 0))
    assert not is_well_separated(t, (0, 3))
    assert well_separated_orientations(t) == []
    with pytest.raises(StructureError):
        is_well_separated(t, (0, 4))


def test_cap(monkeypatch):
    ps = convex_point_set(5)
    with pytest.raises(CapExceeded):
        enumerate_keys(ps, cap=4)
    monkeypatch.setenv("PLANE_RECONFIG_CAP_N", "4")
    with pytest.raises(CapExceeded):
        enumerate_keys(ps)

"""The compiled core and the pure-Python fallback must agree bit for bit."""

import random

import pytest

from plane_reconfig import kernels
from plane_reconfig.geometry import convex_point_set, random_point_set
from plane_reconfig.structures import Family, tables

compiled = pytest.mark.skipif(kernels.BACKEND != "compiled", reason="extension not built")


def _sets():
    rng = random.Random(2024)
    out = [convex_point_set(n) for n in (4, 6, 7)]
    out += [random_point_set(n, rng) for n in (5, 6, 7, 8)]
    return out


@compiled
@pytest.mark.parametrize("ps", _sets(), ids=lambda p: f"n{p.n}")
def test_enumeration_and_neighbors_agree(ps):
    sa, sb, cross = tables(ps)
    et = ps.empty_triangles
    for fam in Family:
        a = kernels.impl.enumerate_trees(ps.n, sa, sb, cross, fam.value)
        b = kernels.pure.enumerate_trees(ps.n, sa, sb, cross, fam.value)
        assert list(a) == list(b)
        for op in range(5):
            if len(a) <= 3000:
                # the pure graph build is slow beyond this; sampled neighbours still run below
                ea = kernels.impl.graph_edges(ps.n, a, sa, sb, cross, et, op, fam.value)
                eb = kernels.pure.graph_edges(ps.n, b, sa, sb, cross, et, op, fam.value)
                assert sorted(zip(*ea)) == sorted(zip(*eb))
            for k in a[:: max(1, len(a) // 25)]:
                assert (sorted(kernels.impl.tree_neighbors(ps.n, k, sa, sb, cross, et, op, fam.value))
                        == sorted(kernels.pure.tree_neighbors(ps.n, k, sa, sb, cross, et, op, fam.value)))
            if len(a) <= 3000:
                iso_a = kernels.impl.count_isolated(ps.n, a, sa, sb, cross, et, op, fam.value)
                iso_b = kernels.pure.count_isolated(ps.n, b, sa, sb, cross, et, op, fam.value)
                assert list(iso_a) == list(iso_b)


@compiled
def test_eccentricities_agree():
    rng = random.Random(5)
    for nv in (1, 2, 7, 30):
        adj = [set() for _ in range(nv)]
        for _ in range(nv * 2):
            i, j = rng.randrange(nv), rng.randrange(nv)
            if i != j:
                adj[i].add(j)
                adj[j].add(i)
        indptr, indices = [0], []
        for a in adj:
            indices.extend(sorted(a))
            indptr.append(len(indices))
        assert list(kernels.impl.eccentricities(nv, indptr, indices)) == \
            list(kernels.pure.eccentricities(nv, indptr, indices))


@compiled
def test_raw_slide_count_agrees():
    rng = random.Random(11)
    for _ in range(400):
        n = rng.randrange(4, 11)
        xs = [rng.randrange(30) for _ in range(n)]
        ys = [rng.randrange(30) for _ in range(n)]
        # random tree by attaching each vertex to an earlier one
        ea, eb = [], []
        for v in range(1, n):
            ea.append(rng.randrange(v))
            eb.append(v)
        assert kernels.impl.raw_slide_count(xs, ys, ea, eb) == kernels.pure.raw_slide_count(xs, ys, ea, eb)


def test_raw_slide_count_sentinels():
    # collinear triple
    assert kernels.pure.raw_slide_count([0, 1, 2, 0], [0, 1, 2, 5], [0, 1, 2], [1, 2, 3]) == -1
    # crossing diagonals of a square
    assert kernels.pure.raw_slide_count([0, 2, 2, 0], [0, 0, 2, 2], [0, 1, 0], [2, 3, 1]) == 1000001


def test_backend_flag():
    assert kernels.BACKEND in ("compiled", "python")
    assert kernels.pure.OP_SLIDE == kernels.OP_SLIDE

"""Acceptance suite: one test per criterion, each printed as a PASS/FAIL line at the end of the run.

Sizes are chosen to run on a single core in well under an hour.
"""

import itertools
import random

import pytest

import oracles
from plane_reconfig import analysis, verify
from plane_reconfig.constructive import radial_path, straighten_hull
from plane_reconfig.geometry import PointSet, convex_point_set
from plane_reconfig.reconfig import OpKind, build_graph, classify_move, diameter, neighbors
from plane_reconfig.structures import (Family, SpanningStructure, enumerate_keys, enumerate_plane_trees,
                                       in_family)

SEED = 0
FAMILY_NAMES = {Family.ALL: "all", Family.CATERPILLARS: "caterpillars", Family.PATHS: "paths"}
# strongest first: each kind implies the next
CHAIN = [OpKind.SLIDE, OpKind.EMPTY_TRIANGLE_ROTATION, OpKind.ROTATION, OpKind.COMPATIBLE_FLIP, OpKind.FLIP]
SEARCH_BUDGET = {8: 20_000_000, 9: 1_000_000, 10: 1_000_000}

DETAILS: dict[int, str] = {}


def note(criterion, **detail):
    DETAILS[criterion] = " ".join(f"{k}={v}" for k, v in detail.items())


def run_checks(rows):
    """Collect InstanceResults; return (instances, failing labels)."""
    rows = list(rows)
    return len(rows), [f"{r.label}/n={r.n}" for r in rows if not r.ok]


def small_sets(ns, per_n):
    for n in ns:
        yield from verify.instances(n, per_n, SEED)


def hamming_two_pairs(keys):
    """Pairs of keys that differ by one removed and one added segment."""
    buckets: dict[int, list[int]] = {}
    for k in keys:
        rest = k
        while rest:
            bit = rest & -rest
            rest ^= bit
            buckets.setdefault(k ^ bit, []).append(k)
    for group in buckets.values():
        yield from itertools.combinations(group, 2)


@pytest.mark.criterion(1)
def test_operation_hierarchy():
    sets = pairs = bad = 0
    checked = 0
    for n in (4, 5, 6, 7):
        for label, ps in verify.random_sets(n, 250, SEED):
            sets += 1
            pts = [tuple(p) for p in ps]
            rng = random.Random(sets)
            for a, b in hamming_two_pairs(enumerate_keys(ps)):
                t, u = SpanningStructure.from_key(ps, a), SpanningStructure.from_key(ps, b)
                mv = classify_move(t, u)
                pairs += 1
                if mv is None or OpKind.FLIP not in mv.kinds:
                    bad += 1
                    continue
                bad += any(s in mv.kinds and w not in mv.kinds for s, w in zip(CHAIN, CHAIN[1:]))
                if rng.random() < 0.01:
                    # independent definition of every kind on a sample
                    checked += 1
                    ref = {op for op in OpKind
                           if oracles.exchange_ok(pts, frozenset(t.edges), frozenset(u.edges), op.label)}
                    bad += ref != set(mv.kinds)
    note(1, sets=sets, pairs=pairs, oracle_checked=checked, violations=bad)
    assert bad == 0


@pytest.mark.criterion(2)
def test_convex_slide_connected_with_diameter_bound():
    rows = [verify.check_t1(convex_point_set(n)) for n in range(4, 9)]
    note(2, diameters=",".join(f"{r.n}:{r.detail['diameter']}<={r.detail['bound']}" for r in rows))
    assert all(r.ok for r in rows)


@pytest.mark.criterion(3)
def test_convex_sequence_bounds():
    rows = [verify.check_c1(convex_point_set(n)) for n in range(4, 8)]
    runs = sum(r.detail["cat_runs"] for r in rows)
    path_pairs = sum(r.detail.get("path_pairs", 0) for r in rows)
    note(3, cat_runs=runs, path_pairs=path_pairs, violations=sum(r.detail["violations"] for r in rows))
    assert all(r.ok for r in rows)


def pocket_check(ps, label):
    """Radial path between hull neighbours, then the pocket construction, for every hull edge."""
    bad = runs = 0
    h = list(ps.hull)
    for i, u in enumerate(h):
        for v in (h[(i + 1) % len(h)], h[i - 1]):
            seq = straighten_hull(ps, range(ps.n), u, v, radial_path(ps, range(ps.n), u, v))
            runs += 1
            try:
                seq.validate()
            except ValueError:
                bad += 1
    return verify.InstanceResult(label, ps.n, bad == 0, {"runs": runs, "violations": bad})


@pytest.mark.criterion(4)
def test_slide_generators():
    checks = {"double/star": verify.check_l1, "pocket": pocket_check, "well-separated": verify.check_t4,
              "triple": verify.check_l4}
    total = 0
    failures = []
    fallbacks = 0
    for label, ps in small_sets((4, 5, 6, 7), 50):
        for name, fn in checks.items():
            r = fn(ps, label)
            total += r.detail["runs"]
            fallbacks += r.detail.get("fallbacks", 0)
            if not r.ok:
                failures.append(f"{name}:{label}/n={ps.n}")
    note(4, instances=4 * 51, sequences=total, fallbacks=fallbacks, failures=len(failures))
    assert not failures, failures[:5]


@pytest.mark.criterion(5)
def test_rotation_to_star_and_rotation_connectivity():
    rows = [verify.check_p1(ps, label) for label, ps in small_sets((4, 5, 6, 7), 50)]
    count, failing = run_checks(rows)
    note(5, instances=count, sequences=sum(r.detail["runs"] for r in rows),
         fallbacks=sum(r.detail["fallbacks"] for r in rows), failures=len(failing))
    assert not failing, failing[:5]


@pytest.mark.criterion(6)
def test_slide_connectivity_small_and_isolated_witnesses():
    rows = [verify.check_t5_connected(ps, label) for label, ps in verify.random_sets(7, 1000, SEED)]
    rows += [verify.check_t5_connected(convex_point_set(n), "convex") for n in range(3, 8)]
    count, failing = run_checks(rows)
    found = {}
    for n, budget in SEARCH_BUDGET.items():
        rep = analysis.search_isolated_caterpillar(n, budget=budget, seed=SEED)
        if rep is None:
            found[n] = "none"
            continue
        pts = [tuple(p) for p in rep.point_set]
        ok = (rep.revalidate() and oracles.is_caterpillar(n, rep.witness.edges)
              and oracles.slides(pts, rep.witness.edges) == [])
        found[n] = f"{rep.iterations}" if ok else "invalid"
    note(6, connected_sets=count, failures=len(failing),
         witnesses=",".join(f"{n}:{v}" for n, v in found.items()),
         budgets=",".join(f"{n}:{b}" for n, b in SEARCH_BUDGET.items()))
    assert not failing, failing[:5]
    assert all(v not in ("none", "invalid") for v in found.values()), found


@pytest.mark.criterion(7)
def test_fixed_endpoint_path_graphs():
    rows = []
    for label, ps in small_sets((5, 6, 7, 8), 50):
        for th in ("L5", "L6", "L7", "P2"):
            rows.append(verify.check_fixed_endpoint(ps, f"{th}:{label}", th))
        rows.append(verify.check_t7(ps, f"T7:{label}"))
    count, failing = run_checks(rows)
    note(7, checks=count, failures=len(failing))
    assert not failing, failing[:5]


@pytest.mark.criterion(8)
def test_peeling_paths():
    rows = [verify.check_t6(ps, label, 100, SEED) for label, ps in small_sets((5, 6, 7, 8), 50)]
    count, failing = run_checks(rows)
    worst = min(r.detail["directed"] / r.detail["bound"] for r in rows)
    note(8, instances=count, pairs=100 * count, min_count_over_bound=f"{worst:.2f}", failures=len(failing))
    assert not failing, failing[:5]


@pytest.mark.criterion(9)
def test_well_separated_single_component():
    rows = [verify.check_ws(ps, label) for label, ps in small_sets((3, 4, 5, 6, 7), 50)]
    count, failing = run_checks(rows)
    by_n = {}
    for r in rows:
        if r.label == "convex":
            by_n[r.n] = f"{r.detail['count']}/{r.detail['bound']}"
    note(9, instances=count, failures=len(failing), convex_count_vs_bound=",".join(f"{n}:{v}" for n, v in by_n.items()))
    assert not failing, failing[:5]


@pytest.mark.criterion(10)
def test_convex_path_flip_diameter():
    got = {n: diameter(build_graph(convex_point_set(n), Family.PATHS, OpKind.FLIP)) for n in range(5, 9)}
    note(10, diameters=",".join(f"{n}:{d}" for n, d in got.items()))
    assert all(d == 2 * n - 6 for n, d in got.items())


def naive_neighbors(t, trees, op):
    out = set()
    for u in trees:
        mv = classify_move(t, u)
        if mv is not None and op in mv.kinds:
            out.add(frozenset(u.edges))
    return out


@pytest.mark.criterion(11)
def test_oracle_cross_checks():
    mismatches = 0
    for n in range(3, 7):
        ps = convex_point_set(n)
        pts = [tuple(p) for p in ps]
        for fam in Family:
            mismatches += len(enumerate_keys(ps, fam)) != len(oracles.plane_trees(pts, FAMILY_NAMES[fam]))
    sets = [convex_point_set(n) for n in (3, 4, 5)]
    sets += [PointSet([(0, 0), (20, 0), (20, 20), (0, 20), (10, 9)])]
    sets += [ps for _, ps in verify.random_sets(5, 6, SEED)]
    sets += [ps for _, ps in verify.random_sets(4, 4, SEED)]
    scans = 0
    for ps in sets:
        pts = [tuple(p) for p in ps]
        for fam in Family:
            trees = list(enumerate_plane_trees(ps, fam))
            for op in OpKind:
                ref = oracles.graph(pts, FAMILY_NAMES[fam], op.label)
                for t in trees:
                    scans += 1
                    got = {frozenset(u.edges) for u in neighbors(t, op, fam)}
                    assert all(in_family(u, fam) for u in neighbors(t, op, fam))
                    mismatches += got != naive_neighbors(t, trees, op)
                    mismatches += got != set(ref[frozenset(t.edges)])
    note(11, count_checks=12, neighbor_scans=scans, mismatches=mismatches)
    assert mismatches == 0

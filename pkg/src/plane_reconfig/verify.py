"""Instance-by-instance theorem checks shared by the CLI and the acceptance tests.

Each check walks a family of point sets (convex configurations plus seeded random
sets) and returns one `InstanceResult` per instance; a report passes iff every
instance does.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Iterator

from . import analysis
from .constructive import (ConstructionError, convex_cat_to_star, convex_path_to_path, double_star_to_star,
                           peeling_connect, rotation_to_star, star_to_star_general,
                           triple_star_to_star, well_separated_to_star)
from .geometry import PointSet, convex_point_set, random_point_set
from .reconfig import OpKind, build_graph, components, diameter, girth
from .structures import (Family, classify, enumerate_double_stars, enumerate_plane_trees, make_star,
                         path_order, well_separated_orientations)

THEOREMS = ("T1", "C1", "P1", "L1", "T4", "L4", "T5", "P2", "L5", "L6", "L7", "T6", "T7", "WS")


@dataclass
class InstanceResult:
    label: str
    n: int
    ok: bool
    detail: dict = field(default_factory=dict)

    def line(self, theorem: str) -> str:
        extra = " ".join(f"{k}={v}" for k, v in self.detail.items())
        return f"{theorem} {self.label} n={self.n} {'PASS' if self.ok else 'FAIL'} {extra}".rstrip()


@dataclass
class VerifyReport:
    theorem: str
    results: list[InstanceResult]

    @property
    def passed(self) -> bool:
        return bool(self.results) and all(r.ok for r in self.results)

    @property
    def failures(self) -> list[InstanceResult]:
        return [r for r in self.results if not r.ok]

    def summary(self) -> str:
        bad = len(self.failures)
        return (f"{self.theorem} instances={len(self.results)} failures={bad} "
                f"verdict={'PASS' if self.passed else 'FAIL'}")


def instance_rng(seed: int, n: int, i: int) -> random.Random:
    """Independent stream per (seed, n, sample) so results do not depend on run order."""
    return random.Random((seed * 1_000_003 + n) * 1_000_003 + i)


def random_sets(n: int, samples: int, seed: int) -> Iterator[tuple[str, PointSet]]:
    for i in range(samples):
        yield f"random[{seed}:{i}]", random_point_set(n, instance_rng(seed, n, i))


def instances(n: int, samples: int, seed: int, convex: bool = True) -> Iterator[tuple[str, PointSet]]:
    if convex:
        yield "convex", convex_point_set(n)
    yield from random_sets(n, samples, seed)


def _valid(seq, end=None) -> str | None:
    try:
        seq.validate()
    except ValueError as exc:
        return str(exc)
    if end is not None and seq.end != end:
        return "wrong endpoint"
    return None


def _is_star(t) -> bool:
    return classify(t).kind == "star"


# -- convex position ---------------------------------------------------------------------

def check_t1(ps: PointSet) -> InstanceResult:
    n = ps.n
    g = build_graph(ps, Family.CATERPILLARS, OpKind.SLIDE)
    comps = len(components(g))
    d = diameter(g) if comps == 1 else float("inf")
    return InstanceResult("convex", n, comps == 1 and d <= 3 * n - 8,
                          {"vertices": len(g), "diameter": d, "bound": 3 * n - 8})


def check_c1(ps: PointSet) -> InstanceResult:
    """Caterpillar-to-star length bound, path-to-path length bound, and the exact path flip diameter."""
    n = ps.n
    bad = []
    runs = 0
    for c in enumerate_plane_trees(ps, Family.CATERPILLARS):
        spine = classify(c).spine
        for s in {spine[0], spine[-1]}:
            seq = convex_cat_to_star(c, s)
            runs += 1
            err = _valid(seq, make_star(ps, s))
            if err or len(seq) > n - 1 - c.degree(s):
                bad.append(("cat", c.edges, s, err or len(seq)))
    detail = {"cat_runs": runs}
    if n >= 5:
        paths = list(enumerate_plane_trees(ps, Family.PATHS))
        for p, q in itertools.product(paths, repeat=2):
            seq = convex_path_to_path(p, q)
            runs += 1
            err = _valid(seq, q)
            if err or len(seq) > 2 * n - 6:
                bad.append(("path", p.edges, q.edges, err or len(seq)))
        d = diameter(build_graph(ps, Family.PATHS, OpKind.FLIP))
        detail.update(path_pairs=len(paths) ** 2, path_flip_diameter=d)
        if d != 2 * n - 6:
            bad.append(("diameter", d))
    detail["violations"] = len(bad)
    return InstanceResult("convex", n, not bad, detail)


# -- slide sequences on arbitrary sets -----------------------------------------------------

def check_l1(ps: PointSet, label: str) -> InstanceResult:
    """Double stars to either centre's star, and star to star through a double star."""
    n = ps.n
    bad = runs = fallbacks = 0
    hull = ps.hull
    for i, u in enumerate(hull):
        v = hull[(i + 1) % len(hull)]
        for c in enumerate_double_stars(ps, u, v):
            for target in (u, v):
                seq = double_star_to_star(c, u, v, target)
                runs += 1
                fallbacks += seq.notes.get("fallbacks", 0)
                bad += _valid(seq, make_star(ps, target)) is not None
    for u, v in itertools.permutations(range(n), 2):
        seq = star_to_star_general(ps, u, v)
        runs += 1
        fallbacks += seq.notes.get("fallbacks", 0)
        bad += _valid(seq, make_star(ps, v)) is not None
    return InstanceResult(label, n, bad == 0, {"runs": runs, "violations": bad, "fallbacks": fallbacks})


def check_t4(ps: PointSet, label: str) -> InstanceResult:
    bad = runs = fallbacks = 0
    for c in enumerate_plane_trees(ps, Family.CATERPILLARS):
        for o in well_separated_orientations(c):
            seq = well_separated_to_star(c, o)
            runs += 1
            fallbacks += seq.notes.get("fallbacks", 0)
            bad += _valid(seq) is not None or not _is_star(seq.end)
    return InstanceResult(label, ps.n, bad == 0, {"runs": runs, "violations": bad, "fallbacks": fallbacks})


def check_l4(ps: PointSet, label: str) -> InstanceResult:
    bad = runs = fallbacks = 0
    for c in enumerate_plane_trees(ps, Family.CATERPILLARS):
        if len(classify(c).spine) != 3:
            continue
        seq = triple_star_to_star(c)
        runs += 1
        fallbacks += seq.notes.get("fallbacks", 0)
        bad += _valid(seq) is not None or not _is_star(seq.end)
    return InstanceResult(label, ps.n, bad == 0, {"runs": runs, "violations": bad, "fallbacks": fallbacks})


def check_p1(ps: PointSet, label: str) -> InstanceResult:
    bad = runs = fallbacks = 0
    for c in enumerate_plane_trees(ps, Family.CATERPILLARS):
        seq = rotation_to_star(c)
        runs += 1
        fallbacks += seq.notes.get("fallbacks", 0)
        bad += _valid(seq) is not None or not _is_star(seq.end)
    g = build_graph(ps, Family.CATERPILLARS, OpKind.ROTATION)
    connected = len(components(g)) == 1
    return InstanceResult(label, ps.n, bad == 0 and connected,
                          {"runs": runs, "violations": bad, "fallbacks": fallbacks, "rotation_connected": connected})


def check_t5_connected(ps: PointSet, label: str) -> InstanceResult:
    g = build_graph(ps, Family.CATERPILLARS, OpKind.SLIDE)
    comps = len(components(g))
    return InstanceResult(label, ps.n, comps == 1, {"vertices": len(g), "components": comps})


def check_t5_search(n: int, seed: int, budget: int) -> InstanceResult:
    rep = analysis.search_isolated_caterpillar(n, budget=budget, seed=seed)
    if rep is None:
        return InstanceResult("search", n, False, {"budget": budget, "found": False})
    return InstanceResult("search", n, rep.revalidate(),
                          {"found": True, "evaluations": rep.iterations, "seed": seed})


# -- paths with a fixed endpoint -------------------------------------------------------------

def check_fixed_endpoint(ps: PointSet, label: str, theorem: str) -> InstanceResult:
    """One of the per-hull-vertex path-graph properties, across every hull choice of u."""
    bad = []
    for u in ps.hull:
        g = analysis.fixed_endpoint_graph(ps, u)
        adj = g.adjacency
        if theorem == "L5":
            gr = girth(adj, limit=6)
            if gr < 6:
                bad.append((u, gr))
        elif theorem == "L6":
            if any(not a for a in adj):
                bad.append(u)
        elif theorem == "L7":
            for i, a in enumerate(adj):
                if len(a) == 1 and not analysis.check_degree_one(g, i):
                    bad.append((u, g.orders[i]))
        elif theorem == "P2":
            ok, small = analysis.min_component_check(adj, 4)
            if not ok:
                bad.append((u, len(small)))
    return InstanceResult(label, ps.n, not bad, {"hull": len(ps.hull), "violations": len(bad)})


def check_t7(ps: PointSet, label: str) -> InstanceResult:
    g = build_graph(ps, Family.PATHS, OpKind.FLIP)
    ok, small = analysis.min_component_check(g, 7)
    return InstanceResult(label, ps.n, ok, {"vertices": len(g), "smallest_bad": len(small) if small else 0})


def check_t6(ps: PointSet, label: str, pairs: int, seed: int) -> InstanceResult:
    n = ps.n
    ok, rep = analysis.peeling_component_check(ps)
    seqs = analysis.peeling_sequences(ps)
    rng = random.Random(seed)
    by_start: dict[int, list] = {}
    for o in seqs:
        by_start.setdefault(o[0], []).append(o)
    starts = sorted(by_start)
    bad = 0
    for _ in range(pairs):
        u = rng.choice(starts)
        p, q = rng.choice(by_start[u]), rng.choice(by_start[u])
        try:
            seq = peeling_connect(list(p), list(q), u, ps)
        except ConstructionError:
            bad += 1
            continue
        if _valid(seq) is not None or path_order_from(seq.end, u) != list(q):
            bad += 1
        elif any(path_order_from(t, u)[0] != u for t in seq.structures()):
            bad += 1
    return InstanceResult(label, n, ok and bad == 0,
                          {"directed": rep.directed, "bound": 2 ** (n - 1), "undirected": rep.undirected,
                           "single_component": rep.single_component, "connect_failures": bad})


def path_order_from(t, u: int) -> list[int]:
    o = path_order(t)
    if o[0] == u:
        return o
    return o[::-1] if o[-1] == u else [-1]


def check_ws(ps: PointSet, label: str) -> InstanceResult:
    ok, info = analysis.ws_component_check(ps)
    return InstanceResult(label, ps.n, ok, info)


# -- dispatch --------------------------------------------------------------------------------

def verify(theorem: str, n_values, samples: int = 20, seed: int = 0, budget: int = 3_000_000,
           on_result: Callable[[InstanceResult], None] | None = None) -> VerifyReport:
    """Run one theorem check over convex and `samples` random sets per n."""
    theorem = theorem.upper()
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem id {theorem!r}; choose from {', '.join(THEOREMS)}")
    results: list[InstanceResult] = []

    def add(r: InstanceResult) -> None:
        results.append(r)
        if on_result is not None:
            on_result(r)

    for n in n_values:
        if theorem in ("T1", "C1"):
            ps = convex_point_set(n)
            add(check_t1(ps) if theorem == "T1" else check_c1(ps))
            continue
        if theorem == "T5" and n >= 8:
            add(check_t5_search(n, seed, budget))
            continue
        for label, ps in instances(n, samples, seed):
            if theorem == "L1":
                add(check_l1(ps, label))
            elif theorem == "T4":
                add(check_t4(ps, label))
            elif theorem == "L4":
                add(check_l4(ps, label))
            elif theorem == "P1":
                add(check_p1(ps, label))
            elif theorem == "T5":
                add(check_t5_connected(ps, label))
            elif theorem in ("L5", "L6", "L7", "P2"):
                add(check_fixed_endpoint(ps, label, theorem))
            elif theorem == "T7":
                add(check_t7(ps, label))
            elif theorem == "T6":
                add(check_t6(ps, label, 100, seed))
            elif theorem == "WS":
                add(check_ws(ps, label))
    return VerifyReport(theorem, results)

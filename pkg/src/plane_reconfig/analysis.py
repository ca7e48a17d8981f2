"""Instance-level checks on path flip graphs, component sizes, counting bounds and isolated caterpillars."""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from . import kernels
from .geometry import (GeometryError, PointSet, convex_hull, random_point_set, seg,
                       triangle_strictly_empty)
from .reconfig import OpKind, ReconfigGraph, build_graph, components
from .structures import (Family, SpanningStructure, check_cap, enumerate_keys, mask_of, path_order,
                         peeling_step_ok, tables, well_separated_orientations)


# -- paths with a fixed endpoint -------------------------------------------------------

@dataclass
class FixedEndpointGraph:
    """Plane spanning paths starting at u; edges are plane suffix reversals."""

    u: int
    orders: list[tuple[int, ...]]
    graph: ReconfigGraph

    def __len__(self) -> int:
        return len(self.orders)

    @property
    def adjacency(self) -> list[list[int]]:
        return self.graph.adjacency

    def degree(self, i: int) -> int:
        return len(self.graph.adjacency[i])


def fixed_endpoint_graph(ps: PointSet, u: int, cap: int | None = None) -> FixedEndpointGraph:
    if not 0 <= u < ps.n:
        raise IndexError(u)
    check_cap(ps.n, cap)
    orders = []
    for key in enumerate_keys(ps, Family.PATHS, cap):
        t = SpanningStructure.from_key(ps, key)
        if t.degree(u) != 1:
            continue
        o = path_order(t)
        orders.append(tuple(o if o[0] == u else o[::-1]))
    orders.sort()
    index = {o: i for i, o in enumerate(orders)}
    src, dst = [], []
    for i, o in enumerate(orders):
        for k in range(1, ps.n - 1):
            other = o[:k] + o[k:][::-1]
            j = index.get(other)
            if j is not None and j > i:
                src.append(i)
                dst.append(j)
    keys = [mask_of(ps, zip(o, o[1:])) for o in orders]
    g = ReconfigGraph.from_edges(keys, src, dst, ps, Family.PATHS, OpKind.FLIP)
    return FixedEndpointGraph(u, orders, g)


def check_degree_one(g: FixedEndpointGraph, i: int) -> bool:
    """Last three vertices of a degree-one path: consecutive hull vertices around an empty triangle."""
    if g.degree(i) != 1:
        raise ValueError(f"path {list(g.orders[i])} has degree {g.degree(i)}, not 1")
    ps = g.graph.point_set
    o = g.orders[i]
    a, b, c = o[-3], o[-2], o[-1]
    hull = list(ps.hull)
    h = len(hull)
    if c not in hull:
        return False
    k = hull.index(c)
    around = {hull[(k - 1) % h], hull[(k + 1) % h]}
    return around == {a, b} and triangle_strictly_empty(a, b, c, ps)


def min_component_check(g: ReconfigGraph | FixedEndpointGraph | Sequence[Sequence[int]],
                        bound: int) -> tuple[bool, list[int] | None]:
    """Every component has more than `bound` vertices; otherwise the smallest one as witness."""
    if isinstance(g, FixedEndpointGraph):
        g = g.graph
    if not isinstance(g, ReconfigGraph):
        g = ReconfigGraph(None, None, None, list(range(len(g))), [list(a) for a in g])
    comps = components(g)
    if not comps:
        return True, None
    small = comps[-1]
    if len(small) <= bound:
        return False, small
    return True, None


# -- peeling paths and well-separated caterpillars ----------------------------------------

def peeling_sequences(ps: PointSet, start: int | None = None, strict: bool = False) -> list[tuple[int, ...]]:
    """Every directed generalized peeling order, by depth-first search over the choices."""
    out: list[tuple[int, ...]] = []
    drawn: list = []

    def rec(order: list[int], left: list[int]) -> None:
        if not left:
            out.append(tuple(order))
            return
        prev = order[-1] if order else None
        for v in left:
            if peeling_step_ok(ps, prev, v, left, drawn, strict):
                if prev is not None:
                    drawn.append(seg(prev, v))
                rec(order + [v], [x for x in left if x != v])
                if prev is not None:
                    drawn.pop()

    firsts = [start] if start is not None else list(range(ps.n))
    for s in firsts:
        if s in ps.hull:
            rec([s], [x for x in range(ps.n) if x != s])
    return out


def count_peeling_sequences(ps: PointSet, cap: int | None = None) -> int:
    check_cap(ps.n, cap)
    return len(peeling_sequences(ps))


@dataclass
class PeelingReport:
    directed: int
    undirected: int
    component_size: int
    single_component: bool


def peeling_component_check(ps: PointSet, cap: int | None = None,
                            graph: ReconfigGraph | None = None) -> tuple[bool, PeelingReport]:
    """All peeling paths in one flip component, with at least 2^(n-2) distinct undirected paths."""
    check_cap(ps.n, cap)
    g = graph if graph is not None else build_graph(ps, Family.PATHS, OpKind.FLIP, cap)
    seqs = peeling_sequences(ps)
    keys = {mask_of(ps, zip(o, o[1:])) for o in seqs}
    label = {}
    for ci, comp in enumerate(components(g)):
        for i in comp:
            label[g.vertices[i]] = (ci, len(comp))
    hit = {label[k] for k in keys}
    single = len(hit) == 1
    size = next(iter(hit))[1] if single else 0
    rep = PeelingReport(len(seqs), len(keys), size, single)
    ok = single and len(keys) >= 2 ** (ps.n - 2) and len(seqs) >= 2 ** (ps.n - 1)
    return ok, rep


def well_separated_keys(ps: PointSet, cap: int | None = None) -> list[int]:
    return [k for k in enumerate_keys(ps, Family.CATERPILLARS, cap)
            if well_separated_orientations(SpanningStructure.from_key(ps, k))]


def count_well_separated(ps: PointSet, cap: int | None = None) -> int:
    return len(well_separated_keys(ps, cap))


def ws_bound(n: int) -> int:
    """The lower bound (3^n - 1) / 2 claimed for the number of well-separated caterpillars."""
    return (3 ** n - 1) // 2


def ws_component_check(ps: PointSet, cap: int | None = None,
                       graph: ReconfigGraph | None = None) -> tuple[bool, dict]:
    """All well-separated caterpillars lie in one slide component of the caterpillar graph."""
    g = graph if graph is not None else build_graph(ps, Family.CATERPILLARS, OpKind.SLIDE, cap)
    ws = well_separated_keys(ps, cap)
    comp_of = {}
    for ci, comp in enumerate(components(g)):
        for i in comp:
            comp_of[g.vertices[i]] = ci
    hit = {comp_of[k] for k in ws}
    return len(hit) <= 1, {"count": len(ws), "bound": ws_bound(ps.n), "components_hit": len(hit)}


# -- isolated caterpillars -----------------------------------------------------------------

@dataclass
class SearchReport:
    point_set: PointSet
    witness: SpanningStructure
    neighbor_count: int
    seed: int
    iterations: int
    strategy: str
    elapsed: float = 0.0
    notes: dict = field(default_factory=dict)

    def revalidate(self) -> bool:
        """Zero caterpillar-internal slides, recomputed through the kernel from scratch."""
        ps = PointSet(list(self.point_set))
        t = SpanningStructure(ps, self.witness.edges)
        sa, sb, cross = tables(ps)
        nb = kernels.pure.tree_neighbors(ps.n, t.key, sa, sb, cross, ps.empty_triangles,
                                         int(OpKind.SLIDE), Family.CATERPILLARS.value)
        return not nb and self.neighbor_count == 0


def _is_caterpillar_adj(adj: list[set[int]]) -> bool:
    deg = [len(a) for a in adj]
    return all(sum(1 for w in adj[v] if deg[w] >= 2) <= 2 for v in range(len(adj)) if deg[v] >= 2)


def slide_count(pts: Sequence[tuple[int, int]], edges: Sequence[tuple[int, int]]) -> int | None:
    """Caterpillar-internal slides available to the tree `edges` on raw points.

    None for degenerate point sets, a large number for crossing drawings. Every
    slide adds the chord xz of some two-edge path x-y-z, removing xy or yz.
    """
    be = kernels.impl if len(pts) <= 32 else kernels.pure
    c = be.raw_slide_count([p[0] for p in pts], [p[1] for p in pts],
                           [a for a, _ in edges], [b for _, b in edges])
    return None if c < 0 else c


def _shape_edges(dist: Sequence[int]) -> list[tuple[int, int]]:
    k = len(dist)
    edges = [(i, i + 1) for i in range(k - 1)]
    nxt = k
    for i, c in enumerate(dist):
        for _ in range(c):
            edges.append((i, nxt))
            nxt += 1
    return edges


def _family_paths(n: int, edges) -> list[tuple[int, int, int]]:
    """Two-edge paths x-y-z whose slide stays a caterpillar; geometry has to block these."""
    adj: list[set[int]] = [set() for _ in range(n)]
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    open_paths = []
    for y in range(n):
        nb = sorted(adj[y])
        for i, x in enumerate(nb):
            for z in nb[i + 1:]:
                ok = False
                for r0, r1 in ((x, y), (y, z)):
                    adj[r0].discard(r1)
                    adj[r1].discard(r0)
                    adj[x].add(z)
                    adj[z].add(x)
                    ok = ok or _is_caterpillar_adj(adj)
                    adj[x].discard(z)
                    adj[z].discard(x)
                    adj[r0].add(r1)
                    adj[r1].add(r0)
                if ok:
                    open_paths.append((x, y, z))
    return open_paths


def _family_open(n: int, edges) -> int:
    return len(_family_paths(n, edges))


@lru_cache(maxsize=None)
def _ranked_shapes(n: int) -> tuple[tuple[int, ...], ...]:
    """Leaf distributions along a spine (both ends carrying a leaf), fewest open paths first."""
    found = []
    for k in range(2, n - 1):
        # two leaves are pinned to the ends, the rest spread by stars and bars
        free = n - k - 2
        for bars in combinations(range(free + k - 1), k - 1):
            cuts = (-1,) + bars + (free + k - 1,)
            dist = tuple(cuts[i + 1] - cuts[i] - 1 for i in range(k))
            dist = (dist[0] + 1,) + dist[1:-1] + (dist[-1] + 1,) if k > 1 else dist
            if dist[::-1] < dist:
                continue
            found.append((_family_open(n, _shape_edges(dist)), dist))
    found.sort()
    return tuple(d for _, d in found)


@lru_cache(maxsize=None)
def _zigzag_shapes(n: int) -> tuple[tuple[int, ...], ...]:
    """Longest spines on which every spine edge has a leaf at one of its ends at least."""
    ok = [d for d in _ranked_shapes(n) if all(a or b for a, b in zip(d, d[1:]))]
    k = max(len(d) for d in ok)
    return tuple(d for d in ok if len(d) == k)


class _ShapePicker:
    """Spreads annealing restarts over the caterpillar shapes the family rule protects best.

    Leaves on a vertex with two spine neighbours cannot slide onto each other, and
    such a leaf also keeps the chord of its vertex's spine neighbours out of the
    family, so shapes are ranked by how many two-edge paths remain open. After a
    warm-up every shape has a mean plateau (lowest count an annealing run reaches);
    most restarts then go to the shape with the lowest mean.
    """

    def __init__(self, n: int, rng: random.Random, top: int = 8, warmup: int = 10, explore: float = 0.1,
                 shapes: Sequence[tuple[int, ...]] | None = None):
        self.shapes = list(shapes) if shapes is not None else list(_ranked_shapes(n)[:top])
        self.rng = rng
        self.warmup = warmup
        self.explore = explore
        self.runs = [0] * len(self.shapes)
        self.total = [0] * len(self.shapes)

    def pick(self) -> int:
        for i, r in enumerate(self.runs):
            if r < self.warmup:
                return i
        if self.rng.random() < self.explore:
            return self.rng.randrange(len(self.shapes))
        return min(range(len(self.shapes)), key=lambda i: (self.total[i] / self.runs[i], i))

    def record(self, i: int, plateau: int) -> None:
        self.runs[i] += 1
        self.total[i] += plateau


ANNEAL_SHARE = 0.2


def _anneal(n: int, rng: random.Random, edges, iters: int, grid: int, start=None):
    """Anneal coordinates towards zero slides; returns (points or None, steps used, lowest count seen)."""
    pts = start
    cur = slide_count(pts, edges) if pts is not None else None
    while cur is None:
        pts = [(rng.randrange(grid), rng.randrange(grid)) for _ in range(n)]
        cur = slide_count(pts, edges)
    best = cur
    temp = 1.0
    for it in range(iters):
        if cur == 0:
            return pts, it, 0
        i = rng.randrange(n)
        r = max(3, int(grid * 0.3 * (1 - it / iters)))
        x, y = pts[i]
        cand = list(pts)
        cand[i] = (min(grid - 1, max(0, x + rng.randint(-r, r))), min(grid - 1, max(0, y + rng.randint(-r, r))))
        s = slide_count(cand, edges)
        if s is None:
            continue
        if s <= cur or rng.random() < math.exp((cur - s) / temp):
            pts, cur = cand, s
            best = min(best, cur)
        temp = max(0.05, temp * 0.999)
    return (pts, iters, 0) if cur == 0 else (None, iters, best)


def _orient_raw(pts, a, b, c) -> int:
    (ax, ay), (bx, by), (cx, cy) = pts[a], pts[b], pts[c]
    v = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    return (v > 0) - (v < 0)


def _unblocked(pts, edges, paths) -> list[tuple[int, int, int]]:
    """Family-valid two-edge paths that the drawing does not block."""
    n = len(pts)
    out = []
    for x, y, z in paths:
        o = _orient_raw(pts, x, y, z)
        if any(_orient_raw(pts, x, y, p) == o and _orient_raw(pts, y, z, p) == o and _orient_raw(pts, z, x, p) == o
               for p in range(n) if p not in (x, y, z)):
            continue
        if any(len({x, z, a, b}) == 4
               and _orient_raw(pts, x, z, a) * _orient_raw(pts, x, z, b) < 0
               and _orient_raw(pts, a, b, x) * _orient_raw(pts, a, b, z) < 0 for a, b in edges):
            continue
        out.append((x, y, z))
    return out


def _min_conflicts(n: int, rng: random.Random, edges, limit: int, grid: int, stall_limit: int = 1000,
                   noise: float = 0.1):
    """Pick an open two-edge path and try to block it; returns (points or None, evaluations, lowest count).

    Candidates drop each other point into the triangle of the path or nudge one of its
    three corners; the best candidate is taken (a random one with probability `noise`).
    Crossing drawings are repaired by nudging random points.
    """
    paths = _family_paths(n, edges)

    def clamp(v: int) -> int:
        return min(grid - 1, max(0, v))

    def nudge(pts, i, r):
        c = list(pts)
        x, y = pts[i]
        c[i] = (clamp(x + rng.randint(-r, r)), clamp(y + rng.randint(-r, r)))
        return c

    used = 0
    cur = None
    while cur is None:
        pts = [(rng.randrange(grid), rng.randrange(grid)) for _ in range(n)]
        cur = slide_count(pts, edges)
        used += 1
    best = cur
    stall = 0
    while used < limit and stall < stall_limit:
        if cur == 0:
            return pts, used, 0
        if cur >= 1_000_000:
            cands = [nudge(pts, rng.randrange(n), rng.choice((10, 50, 200)))]
        else:
            tri = rng.choice(_unblocked(pts, edges, paths))
            (x0, y0), (x1, y1), (x2, y2) = (pts[t] for t in tri)
            cands = []
            for p in range(n):
                if p in tri:
                    continue
                u, v = rng.random(), rng.random()
                if u + v > 1:
                    u, v = 1 - u, 1 - v
                c = list(pts)
                c[p] = (int(x0 + u * (x1 - x0) + v * (x2 - x0)), int(y0 + u * (y1 - y0) + v * (y2 - y0)))
                cands.append(c)
            cands += [nudge(pts, t, rng.choice((5, 30, 150))) for t in tri]
        scored = []
        for c in cands:
            s = slide_count(c, edges)
            used += 1
            if s is not None:
                scored.append((s, rng.random(), c))
        if not scored:
            continue
        s, _, c = rng.choice(scored) if rng.random() < noise else min(scored)
        if s <= cur or rng.random() < noise:
            pts, cur = c, s
        if cur < best:
            best, stall = cur, 0
        else:
            stall += 1
    return (pts, used, 0) if cur == 0 else (None, used, best)


def _uniform_probe(n: int, rng: random.Random, grid: int):
    """One uniform point set, every caterpillar checked through the kernel."""
    ps = random_point_set(n, rng, grid)
    sa, sb, cross = tables(ps)
    be = kernels.impl if n <= kernels.MAX_COMPILED_N else kernels.pure
    keys = enumerate_keys(ps, Family.CATERPILLARS, cap=max(n, 10))
    iso = be.count_isolated(n, keys, sa, sb, cross, ps.empty_triangles, int(OpKind.SLIDE),
                            Family.CATERPILLARS.value)
    return ps, [keys[i] for i in iso]


def search_isolated_caterpillar(n: int, strategy: str = "random", budget: int = 20_000_000,
                                seed: int = 0, grid: int = 1000, anneal_steps: int = 4000) -> SearchReport | None:
    """Look for a point set with a caterpillar that admits no slide inside the caterpillar family.

    ``random``: local search over point coordinates for a fixed caterpillar shape.
    Most restarts run `_min_conflicts` on the zigzag shapes; about a fifth of the
    evaluations go to annealing over the shapes ranked by `_ranked_shapes`. Budget is
    counted in evaluated candidate point sets. Every 50th restart is spent on a
    uniformly random set with all caterpillars checked.
    ``exhaustive``: uniformly random sets only, each checked over all caterpillars;
    budget counted in point sets.
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    if strategy not in ("random", "exhaustive"):
        raise ValueError(f"unknown strategy {strategy!r}")
    if n < 4:
        return None
    rng = random.Random(seed)
    pickers = {"anneal": _ShapePicker(n, rng), "min-conflicts": _ShapePicker(n, rng, warmup=1, shapes=_zigzag_shapes(n))}
    t0 = time.perf_counter()
    used = annealed = 0
    restart = 0
    while used < budget:
        restart += 1
        if strategy == "exhaustive" or restart % 50 == 0:
            if n > kernels.MAX_COMPILED_N and strategy == "random":
                continue
            ps, iso = _uniform_probe(n, rng, grid)
            used += 1
            if iso:
                t = SpanningStructure.from_key(ps, iso[0])
                return SearchReport(ps, t, 0, seed, used, strategy, time.perf_counter() - t0,
                                    {"source": "uniform", "restarts": restart})
            continue
        method = "anneal" if annealed < ANNEAL_SHARE * used else "min-conflicts"
        picker = pickers[method]
        k = picker.pick()
        edges = _shape_edges(picker.shapes[k])
        if method == "anneal":
            pts, it, plateau = _anneal(n, rng, edges, min(anneal_steps, budget - used), grid)
            used += it + 1
            annealed += it + 1
        else:
            pts, it, plateau = _min_conflicts(n, rng, edges, budget - used, grid)
            used += it
        picker.record(k, plateau)
        if pts is None:
            continue
        try:
            ps = PointSet(pts)
        except GeometryError:
            continue
        t = SpanningStructure(ps, [seg(a, b) for a, b in edges])
        sa, sb, cross = tables(ps)
        be = kernels.impl if n <= kernels.MAX_COMPILED_N else kernels.pure
        nb = be.tree_neighbors(n, t.key, sa, sb, cross, ps.empty_triangles, int(OpKind.SLIDE),
                               Family.CATERPILLARS.value)
        if not nb:
            return SearchReport(ps, t, 0, seed, used, strategy, time.perf_counter() - t0,
                                {"source": method, "restarts": restart, "shape": picker.shapes[k]})
    return None


def slide_graph_connected(ps: PointSet, cap: int | None = None) -> bool:
    g = build_graph(ps, Family.CATERPILLARS, OpKind.SLIDE, cap)
    return len(components(g)) <= 1


def hull_vertices(ps: PointSet) -> list[int]:
    return list(convex_hull(ps, range(ps.n)))

"""Edge-exchange classification and reconfiguration graphs."""

from __future__ import annotations

import enum
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from . import kernels
from .geometry import PointSet, Segment, properly_cross, seg, triangle_strictly_empty
from .structures import (CanonicalKey, Family, SpanningStructure, backend_for, check_cap,
                         enumerate_keys, tables)

DEFAULT_MAX_VERTICES = 2_000_000


class OpKind(enum.IntEnum):
    """Exchange kinds, ordered from weakest to most restrictive."""

    FLIP = kernels.OP_FLIP
    COMPATIBLE_FLIP = kernels.OP_COMPATIBLE_FLIP
    ROTATION = kernels.OP_ROTATION
    EMPTY_TRIANGLE_ROTATION = kernels.OP_EMPTY_ROTATION
    SLIDE = kernels.OP_SLIDE

    @classmethod
    def parse(cls, name: str) -> "OpKind":
        aliases = {"flip": cls.FLIP, "compatible-flip": cls.COMPATIBLE_FLIP, "comp-flip": cls.COMPATIBLE_FLIP,
                   "rotation": cls.ROTATION, "rot": cls.ROTATION,
                   "empty-triangle-rotation": cls.EMPTY_TRIANGLE_ROTATION, "emp-rot": cls.EMPTY_TRIANGLE_ROTATION,
                   "slide": cls.SLIDE}
        try:
            return aliases[name.lower().replace("_", "-")]
        except KeyError:
            raise ValueError(f"unknown operation {name!r}") from None

    @property
    def label(self) -> str:
        return self.name.lower().replace("_", "-")


class GraphTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class MoveStep:
    removed: Segment
    added: Segment
    kinds: frozenset[OpKind]

    def reversed(self) -> "MoveStep":
        return MoveStep(self.added, self.removed, self.kinds)

    def satisfies(self, op: OpKind) -> bool:
        return op in self.kinds


def exchange_kinds(ps: PointSet, e: Segment, f: Segment, common: Iterable[Segment]) -> frozenset[OpKind]:
    """Kinds satisfied by swapping e for f when `common` edges stay in place."""
    kinds = {OpKind.FLIP}
    if not properly_cross(e, f, ps):
        kinds.add(OpKind.COMPATIBLE_FLIP)
    shared = set(e) & set(f)
    if shared:
        (a,) = shared
        b = e[0] if e[1] == a else e[1]
        c = f[0] if f[1] == a else f[1]
        kinds.add(OpKind.ROTATION)
        if triangle_strictly_empty(a, b, c, ps):
            kinds.add(OpKind.EMPTY_TRIANGLE_ROTATION)
            if seg(b, c) in set(common):
                kinds.add(OpKind.SLIDE)
    return frozenset(kinds)


def classify_move(t1: SpanningStructure, t2: SpanningStructure) -> MoveStep | None:
    if t1.point_set != t2.point_set:
        raise ValueError("structures live on different point sets")
    e1 = set(t1.edges)
    e2 = set(t2.edges)
    gone = e1 - e2
    new = e2 - e1
    if len(gone) != 1 or len(new) != 1:
        return None
    (e,) = gone
    (f,) = new
    return MoveStep(e, f, exchange_kinds(t1.point_set, e, f, e1 & e2))


def neighbors(t: SpanningStructure, op: OpKind, family: Family = Family.ALL) -> list[SpanningStructure]:
    ps = t.point_set
    sa, sb, cross = tables(ps)
    keys = backend_for(ps.n).tree_neighbors(ps.n, t.key, sa, sb, cross, ps.empty_triangles,
                                           int(op), family.value)
    return [SpanningStructure.from_key(ps, k) for k in sorted(keys)]


@dataclass
class ReconfigGraph:
    point_set: PointSet | None
    family: Family | None
    op: OpKind | None
    vertices: list[CanonicalKey]
    adjacency: list[list[int]]
    _index: dict[CanonicalKey, int] = field(default=None, repr=False)

    def __post_init__(self):
        if self._index is None:
            self._index = {k: i for i, k in enumerate(self.vertices)}

    @classmethod
    def from_edges(cls, vertices: Sequence[CanonicalKey], src: Sequence[int], dst: Sequence[int],
                   point_set=None, family=None, op=None) -> "ReconfigGraph":
        adj: list[list[int]] = [[] for _ in vertices]
        for i, j in zip(src, dst):
            adj[i].append(j)
            adj[j].append(i)
        for a in adj:
            a.sort()
        return cls(point_set, family, op, list(vertices), adj)

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def index_of(self, key: CanonicalKey) -> int:
        return self._index[key]

    def __contains__(self, key: CanonicalKey) -> bool:
        return key in self._index

    def structure(self, i: int) -> SpanningStructure:
        return SpanningStructure.from_key(self.point_set, self.vertices[i])

    def csr(self) -> tuple[list[int], list[int]]:
        indptr = [0]
        indices: list[int] = []
        for a in self.adjacency:
            indices.extend(a)
            indptr.append(len(indices))
        return indptr, indices

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, a in enumerate(self.adjacency) for j in a if i < j]

    def subgraph(self, keep: Iterable[int]) -> "ReconfigGraph":
        keep = sorted(set(keep))
        remap = {old: new for new, old in enumerate(keep)}
        adj = [[remap[j] for j in self.adjacency[i] if j in remap] for i in keep]
        return ReconfigGraph(self.point_set, self.family, self.op, [self.vertices[i] for i in keep], adj)


def build_graph(ps: PointSet, family: Family, op: OpKind, cap: int | None = None,
                max_vertices: int = DEFAULT_MAX_VERTICES) -> ReconfigGraph:
    check_cap(ps.n, cap)
    keys = enumerate_keys(ps, family, cap)
    if len(keys) > max_vertices:
        raise GraphTooLarge(f"{len(keys)} vertices exceeds the limit {max_vertices}")
    sa, sb, cross = tables(ps)
    src, dst = backend_for(ps.n).graph_edges(ps.n, keys, sa, sb, cross, ps.empty_triangles,
                                            int(op), family.value)
    return ReconfigGraph.from_edges(keys, src, dst, ps, family, op)


def components(g: ReconfigGraph) -> list[list[int]]:
    """Vertex-index sets of the connected components, largest first."""
    nv = len(g)
    if nv == 0:
        return []
    src, dst = zip(*g.edges()) if g.edge_count else ((), ())
    mat = csr_matrix((np.ones(len(src), dtype=np.int8), (np.array(src, dtype=np.int64),
                                                         np.array(dst, dtype=np.int64))), shape=(nv, nv))
    _, labels = connected_components(mat, directed=False)
    groups: dict[int, list[int]] = {}
    for i, lab in enumerate(labels):
        groups.setdefault(int(lab), []).append(i)
    return sorted(groups.values(), key=lambda c: (-len(c), c[0]))


def is_connected(g: ReconfigGraph) -> bool:
    return len(components(g)) <= 1


def diameter(g: ReconfigGraph, max_vertices: int = DEFAULT_MAX_VERTICES) -> float:
    nv = len(g)
    if nv == 0:
        return 0
    if nv > max_vertices:
        raise GraphTooLarge(f"diameter on {nv} vertices exceeds the limit {max_vertices}")
    indptr, indices = g.csr()
    ecc = kernels.impl.eccentricities(nv, indptr, indices)
    if ecc and ecc[0] < 0:
        return math.inf
    return max(ecc)


def bfs_distances(g: ReconfigGraph, source: int) -> list[int]:
    dist = [-1] * len(g)
    dist[source] = 0
    q = deque([source])
    while q:
        v = q.popleft()
        for w in g.adjacency[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                q.append(w)
    return dist


def girth(adjacency: Sequence[Sequence[int]], limit: float = math.inf) -> float:
    """Length of the shortest cycle (inf for forests); BFS from every vertex."""
    best = math.inf
    for s in range(len(adjacency)):
        dist = {s: 0}
        parent = {s: -1}
        q = deque([s])
        while q:
            v = q.popleft()
            if 2 * dist[v] >= min(best, limit):
                break
            for w in adjacency[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    q.append(w)
                elif parent[v] != w:
                    best = min(best, dist[v] + dist[w] + 1)
    return best


def girth_lower_bound(g: ReconfigGraph | Sequence[Sequence[int]], k: int) -> bool:
    """True iff the graph has no cycle shorter than k."""
    adjacency = g.adjacency if isinstance(g, ReconfigGraph) else g
    return girth(adjacency, limit=k) >= k

"""Plane spanning trees, their classification and exhaustive enumeration."""

from __future__ import annotations

import enum
import functools
import itertools
import os
import warnings
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import kernels
from .geometry import (PointSet, Segment, convex_hull, hull_edges, point_in_hull,
                       properly_cross, seg)

DEFAULT_CAP_N = 10

CanonicalKey = int


class CapExceeded(ValueError):
    pass


class StructureError(ValueError):
    pass


class Family(enum.Enum):
    ALL = kernels.FAMILY_ALL
    CATERPILLARS = kernels.FAMILY_CATERPILLARS
    PATHS = kernels.FAMILY_PATHS

    @classmethod
    def parse(cls, name: str) -> "Family":
        try:
            return cls[name.upper()]
        except KeyError:
            raise ValueError(f"unknown family {name!r}; expected all, caterpillars or paths") from None


def cap_n() -> int:
    return int(os.environ.get("PLANE_RECONFIG_CAP_N", DEFAULT_CAP_N))


def check_cap(n: int, cap: int | None = None) -> None:
    limit = cap_n() if cap is None else cap
    if n > limit:
        raise CapExceeded(f"n={n} exceeds the enumeration cap {limit} (set PLANE_RECONFIG_CAP_N)")
    if limit > DEFAULT_CAP_N:
        warnings.warn(f"enumeration cap raised to {limit}; expect long runtimes", stacklevel=3)


def backend_for(n: int):
    """Compiled kernels only handle masks up to 64 bits (n <= 10)."""
    return kernels.impl if n <= kernels.MAX_COMPILED_N else kernels.pure


@functools.lru_cache(maxsize=256)
def tables(ps: PointSet):
    segs = ps.segments
    return ([a for a, _ in segs], [b for _, b in segs], list(ps.cross_masks))


def mask_of(ps: PointSet, edges: Iterable[Segment]) -> CanonicalKey:
    index = ps.segment_index
    mask = 0
    for a, b in edges:
        mask |= 1 << index[seg(a, b)]
    return mask


def edges_of(ps: PointSet, mask: CanonicalKey) -> tuple[Segment, ...]:
    segs = ps.segments
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(segs[i])
        mask >>= 1
        i += 1
    return tuple(out)


class SpanningStructure:
    """A plane spanning tree on a point set, identified by its segment bitmask."""

    __slots__ = ("point_set", "key", "__dict__")

    def __init__(self, point_set: PointSet, edges: Iterable[Segment] = (), *,
                 key: CanonicalKey | None = None, validate: bool = True):
        self.point_set = point_set
        self.key = mask_of(point_set, edges) if key is None else key
        if validate:
            self._validate()

    @classmethod
    def from_key(cls, ps: PointSet, key: CanonicalKey, validate: bool = False) -> "SpanningStructure":
        return cls(ps, key=key, validate=validate)

    @classmethod
    def from_path(cls, ps: PointSet, order: Sequence[int]) -> "SpanningStructure":
        if sorted(order) != list(range(ps.n)):
            raise StructureError(f"{list(order)} is not a Hamiltonian sequence")
        return cls(ps, zip(order, order[1:]))

    def _validate(self) -> None:
        ps = self.point_set
        edges = self.edges
        if len(edges) != ps.n - 1:
            raise StructureError(f"expected {ps.n - 1} edges, got {len(edges)}")
        if not _connected(ps.n, edges):
            raise StructureError("edges do not form a spanning tree")
        cm = ps.cross_masks
        idx = ps.segment_index
        for s in edges:
            if cm[idx[s]] & self.key:
                other = next(t for t in edges if properly_cross(s, t, ps))
                raise StructureError(f"edges {s} and {other} cross")

    @functools.cached_property
    def edges(self) -> tuple[Segment, ...]:
        return edges_of(self.point_set, self.key)

    @property
    def n(self) -> int:
        return self.point_set.n

    @functools.cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return tuple(frozenset(s) for s in adj)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, a: int, b: int) -> bool:
        return bool(self.key >> self.point_set.segment_index[seg(a, b)] & 1)

    def leaves_of(self, v: int) -> list[int]:
        return sorted(w for w in self.adjacency[v] if len(self.adjacency[w]) == 1)

    def exchange(self, removed: Segment, added: Segment) -> "SpanningStructure":
        idx = self.point_set.segment_index
        key = (self.key & ~(1 << idx[seg(*removed)])) | (1 << idx[seg(*added)])
        return SpanningStructure(self.point_set, key=key)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, SpanningStructure) and self.key == other.key
                and self.point_set == other.point_set)

    def __hash__(self) -> int:
        return hash(self.key)

    def __lt__(self, other: "SpanningStructure") -> bool:
        return self.key < other.key

    def __repr__(self) -> str:
        return f"SpanningStructure({list(self.edges)})"


def _connected(n: int, edges: Sequence[Segment]) -> bool:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return len({find(v) for v in range(n)}) == 1


# -- classification ------------------------------------------------------------

@dataclass(frozen=True)
class StructureClass:
    kind: str  # "path" | "star" | "double_star" | "caterpillar" | "other"
    spine: tuple[int, ...] = ()
    center: int | None = None
    centers: tuple[int, int] | None = None

    @property
    def has_spine(self) -> bool:
        return self.kind != "other"

    @property
    def is_caterpillar(self) -> bool:
        return self.kind != "other"


def path_order(t: SpanningStructure) -> list[int]:
    """Vertex sequence of a path structure, starting at its smaller endpoint."""
    adj = t.adjacency
    ends = [v for v in range(t.n) if len(adj[v]) == 1]
    if len(ends) != 2 or any(len(a) > 2 for a in adj):
        raise StructureError("structure is not a path")
    order = [min(ends)]
    prev = -1
    while len(order) < t.n:
        nxt = next(w for w in adj[order[-1]] if w != prev)
        prev = order[-1]
        order.append(nxt)
    return order


def classify(t: SpanningStructure) -> StructureClass:
    adj = t.adjacency
    n = t.n
    deg = [len(a) for a in adj]
    if max(deg) <= 2:
        return StructureClass("path", spine=tuple(path_order(t)[1:-1]))
    inner = [v for v in range(n) if deg[v] >= 2]
    if len(inner) == 1:
        return StructureClass("star", spine=(inner[0],), center=inner[0])
    inner_set = set(inner)
    inner_deg = {v: len(adj[v] & inner_set) for v in inner}
    if any(d > 2 for d in inner_deg.values()):
        return StructureClass("other")
    if len(inner) == 2:
        u, v = inner
        return StructureClass("double_star", spine=(u, v), centers=(u, v))
    start = min(v for v in inner if inner_deg[v] == 1)
    spine = [start]
    prev = -1
    while len(spine) < len(inner):
        nxt = next(w for w in adj[spine[-1]] if w in inner_set and w != prev)
        prev = spine[-1]
        spine.append(nxt)
    return StructureClass("caterpillar", spine=tuple(spine))


def is_caterpillar(t: SpanningStructure) -> bool:
    return classify(t).is_caterpillar


def in_family(t: SpanningStructure, family: Family) -> bool:
    return bool(backend_for(t.n).family_ok(t.n, t.key, *tables(t.point_set)[:2], family.value))


# -- enumeration ------------------------------------------------------------------

def enumerate_keys(ps: PointSet, family: Family = Family.ALL, cap: int | None = None) -> list[CanonicalKey]:
    check_cap(ps.n, cap)
    sa, sb, cross = tables(ps)
    return backend_for(ps.n).enumerate_trees(ps.n, sa, sb, cross, family.value)


def enumerate_plane_trees(ps: PointSet, family: Family = Family.ALL,
                          cap: int | None = None) -> Iterator[SpanningStructure]:
    """Every plane spanning tree of the family once, in canonical-key order."""
    for key in enumerate_keys(ps, family, cap):
        yield SpanningStructure.from_key(ps, key)


def make_star(ps: PointSet, center: int) -> SpanningStructure:
    if not 0 <= center < ps.n:
        raise IndexError(center)
    return SpanningStructure(ps, (seg(center, i) for i in range(ps.n) if i != center))


def enumerate_double_stars(ps: PointSet, u: int, v: int) -> Iterator[SpanningStructure]:
    """Plane trees containing uv with every other vertex a leaf of u or v.

    Includes the two stars (all leaves on one center); yields in key order.
    """
    if u == v:
        raise ValueError("double star centers must differ")
    others = [w for w in range(ps.n) if w not in (u, v)]
    found = []
    for choice in itertools.product((u, v), repeat=len(others)):
        edges = [seg(u, v)] + [seg(c, w) for c, w in zip(choice, others)]
        key = mask_of(ps, edges)
        if not any(ps.cross_masks[ps.segment_index[s]] & key for s in edges):
            found.append(key)
    for key in sorted(found):
        yield SpanningStructure.from_key(ps, key)


# -- peeling paths and well-separated caterpillars --------------------------------

def peeling_step_ok(ps: PointSet, prev: int | None, v: int, remaining: Sequence[int],
                    drawn: Sequence[Segment] = (), strict: bool = False) -> bool:
    """Can v follow prev in a generalized peeling path when `remaining` is unvisited?"""
    hull = convex_hull(ps, remaining)
    if v not in hull:
        return False
    if prev is None:
        return True
    blockers = hull_edges(hull)
    if strict:
        blockers = list(blockers) + list(drawn)
    s = (prev, v)
    return not any(properly_cross(s, b, ps) for b in blockers)


def is_peeling_sequence(ps: PointSet, order: Sequence[int], strict: bool = False) -> bool:
    if sorted(order) != list(range(ps.n)):
        return False
    remaining = list(order)
    drawn: list[Segment] = []
    prev = None
    for v in order:
        if not peeling_step_ok(ps, prev, v, remaining, drawn, strict):
            return False
        remaining.remove(v)
        if prev is not None:
            drawn.append(seg(prev, v))
        prev = v
    return True


def is_generalized_peeling_path(t: SpanningStructure, orientation: Sequence[int],
                                strict: bool = False) -> bool:
    order = list(orientation)
    if sorted(order) != list(range(t.n)) or any(not t.has_edge(a, b) for a, b in zip(order, order[1:])):
        raise StructureError("orientation is not a Hamiltonian ordering of the path's edges")
    return is_peeling_sequence(t.point_set, order, strict)


def hulls_disjoint(ps: PointSet, a: Sequence[int], b: Sequence[int]) -> bool:
    ha = convex_hull(ps, a)
    hb = convex_hull(ps, b)
    if any(point_in_hull(p, hb, ps) for p in ha) or any(point_in_hull(p, ha, ps) for p in hb):
        return False
    return not any(properly_cross(e, f, ps) for e in hull_edges(ha) for f in hull_edges(hb))


def spine_groups(t: SpanningStructure, spine: Sequence[int]) -> list[list[int]]:
    """Each spine vertex together with the leaves hanging off it."""
    spine_set = set(spine)
    groups = []
    for v in spine:
        groups.append([v] + [w for w in sorted(t.adjacency[v]) if w not in spine_set and t.degree(w) == 1])
    return groups


def _check_spine(t: SpanningStructure, spine_orientation: Sequence[int]) -> tuple[int, ...]:
    cls = classify(t)
    if not cls.has_spine:
        raise StructureError("structure has no spine")
    spine = tuple(spine_orientation)
    if spine not in (cls.spine, cls.spine[::-1]):
        raise StructureError(f"{list(spine)} is not an orientation of the spine {list(cls.spine)}")
    return spine


def is_well_separated(t: SpanningStructure, spine_orientation: Sequence[int]) -> bool:
    """Every oriented spine prefix, with its leaves, has a hull disjoint from the rest's hull."""
    spine = _check_spine(t, spine_orientation)
    groups = spine_groups(t, spine)
    prefix: list[int] = []
    all_pts = set(range(t.n))
    for g in groups[:-1]:
        prefix.extend(g)
        rest = sorted(all_pts - set(prefix))
        if not hulls_disjoint(t.point_set, prefix, rest):
            return False
    return True


def well_separated_orientations(t: SpanningStructure) -> list[tuple[int, ...]]:
    cls = classify(t)
    if not cls.has_spine:
        return []
    cands = [cls.spine] if len(cls.spine) == 1 else [cls.spine, cls.spine[::-1]]
    return [s for s in cands if is_well_separated(t, s)]

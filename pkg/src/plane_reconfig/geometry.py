"""Exact integer predicates and constructions on planar point sets."""

from __future__ import annotations

import functools
import math
import random
from typing import Iterable, NamedTuple, Sequence

COORD_BOUND = 10**6

CCW = 1
CW = -1


class GeometryError(ValueError):
    """Raised for point sets violating the integer / general-position contract."""

    def __init__(self, message: str, indices: tuple[int, ...] = ()):
        super().__init__(message)
        self.indices = indices


class Point(NamedTuple):
    x: int
    y: int


Segment = tuple[int, int]


def seg(a: int, b: int) -> Segment:
    """Normalised segment key with the smaller index first."""
    if a == b:
        raise ValueError(f"degenerate segment ({a}, {a})")
    return (a, b) if a < b else (b, a)


def orientation(p: Sequence[int], q: Sequence[int], r: Sequence[int]) -> int:
    det = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (det > 0) - (det < 0)


class PointSet:
    """Immutable, validated set of integer points in general position.

    Derived tables (segment universe, crossing masks, empty triangles) are
    computed lazily and cached since every enumeration and graph build leans
    on them.
    """

    __slots__ = ("points", "__dict__")

    def __init__(self, points: Iterable[Sequence[int]]):
        pts = []
        for i, p in enumerate(points):
            x, y = p
            if not (isinstance(x, int) and isinstance(y, int)):
                raise GeometryError(f"point {i} has non-integer coordinates {p!r}", (i,))
            if abs(x) > COORD_BOUND or abs(y) > COORD_BOUND:
                raise GeometryError(f"point {i} exceeds coordinate bound {COORD_BOUND}", (i,))
            pts.append(Point(x, y))
        self.points: tuple[Point, ...] = tuple(pts)
        n = len(pts)
        if n < 3:
            raise GeometryError(f"need at least 3 points, got {n}")
        seen: dict[Point, int] = {}
        for i, p in enumerate(pts):
            if p in seen:
                raise GeometryError(f"duplicate point {tuple(p)} at indices {seen[p]}, {i}", (seen[p], i))
            seen[p] = i
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    if orientation(pts[i], pts[j], pts[k]) == 0:
                        raise GeometryError(f"collinear triple {i}, {j}, {k}", (i, j, k))

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i: int) -> Point:
        return self.points[i]

    def __iter__(self):
        return iter(self.points)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PointSet) and self.points == other.points

    def __hash__(self) -> int:
        return hash(self.points)

    def __repr__(self) -> str:
        return f"PointSet({[tuple(p) for p in self.points]})"

    @property
    def n(self) -> int:
        return len(self.points)

    def orient(self, a: int, b: int, c: int) -> int:
        return orientation(self.points[a], self.points[b], self.points[c])

    @functools.cached_property
    def segments(self) -> tuple[Segment, ...]:
        """All C(n,2) segments in lexicographic order; bit i of a key is segments[i]."""
        n = self.n
        return tuple((a, b) for a in range(n) for b in range(a + 1, n))

    @functools.cached_property
    def segment_index(self) -> dict[Segment, int]:
        return {s: i for i, s in enumerate(self.segments)}

    @functools.cached_property
    def cross_masks(self) -> tuple[int, ...]:
        """cross_masks[i] has bit j set iff segments i and j properly cross."""
        segs = self.segments
        masks = [0] * len(segs)
        for i, s in enumerate(segs):
            for j in range(i + 1, len(segs)):
                if properly_cross(s, segs[j], self):
                    masks[i] |= 1 << j
                    masks[j] |= 1 << i
        return tuple(masks)

    @functools.cached_property
    def empty_triangles(self) -> bytes:
        """Flat n*n*n table; entry a*n*n+b*n+c is 1 iff triangle abc holds no other point."""
        n = self.n
        table = bytearray(n * n * n)
        for a in range(n):
            for b in range(a + 1, n):
                for c in range(b + 1, n):
                    if triangle_strictly_empty(a, b, c, self):
                        for x, y, z in ((a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)):
                            table[x * n * n + y * n + z] = 1
        return bytes(table)

    @functools.cached_property
    def hull(self) -> tuple[int, ...]:
        return tuple(convex_hull(self, range(self.n)))

    def in_convex_position(self) -> bool:
        return len(self.hull) == self.n


def properly_cross(s1: Segment, s2: Segment, ps: PointSet) -> bool:
    a, b = s1
    c, d = s2
    if a in (c, d) or b in (c, d):
        return False
    return (ps.orient(a, b, c) * ps.orient(a, b, d) < 0
            and ps.orient(c, d, a) * ps.orient(c, d, b) < 0)


def convex_hull(ps: PointSet, subset: Iterable[int]) -> list[int]:
    """Hull vertices CCW, starting from the lexicographically smallest point."""
    idx = sorted(set(subset), key=lambda i: ps[i])
    if not idx:
        raise ValueError("convex_hull of an empty subset")
    if len(idx) <= 2:
        return idx

    def half(order):
        chain: list[int] = []
        for i in order:
            while len(chain) >= 2 and ps.orient(chain[-2], chain[-1], i) <= 0:
                chain.pop()
            chain.append(i)
        return chain

    lower = half(idx)
    upper = half(reversed(idx))
    return lower[:-1] + upper[:-1]


def point_in_triangle(p: int, a: int, b: int, c: int, ps: PointSet) -> bool:
    """Strict interior test; p must differ from a, b, c."""
    o1 = ps.orient(a, b, p)
    o2 = ps.orient(b, c, p)
    o3 = ps.orient(c, a, p)
    return o1 == o2 == o3


def triangle_strictly_empty(a: int, b: int, c: int, ps: PointSet) -> bool:
    if len({a, b, c}) != 3:
        raise ValueError("triangle needs three distinct vertices")
    return not any(point_in_triangle(p, a, b, c, ps)
                   for p in range(ps.n) if p not in (a, b, c))


def points_in_triangle(a: int, b: int, c: int, ps: PointSet,
                       candidates: Iterable[int] | None = None) -> list[int]:
    pool = range(ps.n) if candidates is None else candidates
    return [p for p in pool if p not in (a, b, c) and point_in_triangle(p, a, b, c, ps)]


def point_in_hull(p: int, hull: Sequence[int], ps: PointSet) -> bool:
    """Closed containment of point p in a CCW hull polygon (any size)."""
    if p in hull:
        return True
    if len(hull) < 3:
        return False
    return all(ps.orient(hull[i], hull[(i + 1) % len(hull)], p) > 0 for i in range(len(hull)))


def hull_edges(hull: Sequence[int]) -> list[Segment]:
    if len(hull) < 2:
        return []
    if len(hull) == 2:
        return [seg(hull[0], hull[1])]
    return [seg(hull[i], hull[(i + 1) % len(hull)]) for i in range(len(hull))]


def segment_visible(a: int, b: int, blockers: Iterable[Segment], ps: PointSet) -> bool:
    s = (a, b)
    return not any(properly_cross(s, t, ps) for t in blockers)


def _angle_key(ps: PointSet, pivot: int, ref: int, direction: int):
    """Sort key giving the rotation angle from ray pivot->ref, exactly."""
    px, py = ps[pivot]
    rx, ry = ps[ref].x - px, ps[ref].y - py

    @functools.cmp_to_key
    def cmp(i, j):
        return _cmp_angle(rx, ry, ps[i].x - px, ps[i].y - py, ps[j].x - px, ps[j].y - py, direction)

    return cmp


def _half(rx, ry, vx, vy, direction):
    # 0: angle in [0, pi) measured in `direction` from r; 1: [pi, 2pi)
    c = (rx * vy - ry * vx) * direction
    d = rx * vx + ry * vy
    if c > 0 or (c == 0 and d > 0):
        return 0
    return 1


def _cmp_angle(rx, ry, ax, ay, bx, by, direction):
    ha = _half(rx, ry, ax, ay, direction)
    hb = _half(rx, ry, bx, by, direction)
    if ha != hb:
        return ha - hb
    c = (ax * by - ay * bx) * direction
    return -1 if c > 0 else (1 if c < 0 else 0)


def radial_order(pivot: int, from_dir: int, subset: Iterable[int], ps: PointSet,
                 direction: int) -> list[int]:
    """Points of subset in the order swept by a ray rotating from pivot->from_dir.

    direction is CCW (+1) or CW (-1) in the usual y-up orientation.
    """
    items = list(subset)
    if pivot in items:
        raise ValueError("pivot must not be in subset")
    if from_dir == pivot:
        raise ValueError("reference direction is degenerate")
    if direction not in (CCW, CW):
        raise ValueError("direction must be CCW or CW")
    return sorted(items, key=_angle_key(ps, pivot, from_dir, direction))


def line_side(ps: PointSet, a: int, b: int, p: int) -> int:
    return ps.orient(a, b, p)


def sq_dist_to_line_scaled(ps: PointSet, a: int, b: int, p: int) -> int:
    """|cross(b-a, p-a)|; proportional to distance of p from line ab."""
    ax, ay = ps[a]
    bx, by = ps[b]
    px, py = ps[p]
    return abs((bx - ax) * (py - ay) - (by - ay) * (px - ax))


# -- sampling ---------------------------------------------------------------

def random_point_set(n: int, rng: random.Random, grid: int = 1000,
                     max_tries: int = 10_000) -> PointSet:
    """Uniform integer points in [0, grid)^2, rejection-sampled for general position."""
    for _ in range(max_tries):
        pts: list[tuple[int, int]] = []
        while len(pts) < n:
            p = (rng.randrange(grid), rng.randrange(grid))
            if p in pts:
                continue
            if any(orientation(pts[i], pts[j], p) == 0
                   for i in range(len(pts)) for j in range(i + 1, len(pts))):
                continue
            pts.append(p)
        try:
            return PointSet(pts)
        except GeometryError:
            continue
    raise RuntimeError("could not sample a point set in general position")


def convex_point_set(n: int, radius: int = 10_000, phase: float = 0.1) -> PointSet:
    """n points on a circle, rounded to integers; CCW order from index 0."""
    pts = [(round(radius * math.cos(phase + 2 * math.pi * k / n)),
            round(radius * math.sin(phase + 2 * math.pi * k / n))) for k in range(n)]
    ps = PointSet(pts)
    if not ps.in_convex_position():
        raise GeometryError("rounding broke convex position; raise the radius")
    return ps

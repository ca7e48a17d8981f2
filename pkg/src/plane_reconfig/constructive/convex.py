"""Slide sequences for point sets in convex position."""

from __future__ import annotations

import functools

from ..reconfig import OpKind
from ..structures import Family, SpanningStructure, StructureError, classify
from .sequence import ConstructionError, MoveSequence, Walk


def _angle_cmp(ps, pivot: int, ref: int):
    """Order points by unsigned angle at pivot from the ray pivot->ref, smallest first."""
    ox, oy = ps[pivot]
    rx, ry = ps[ref].x - ox, ps[ref].y - oy

    def parts(i):
        x, y = ps[i].x - ox, ps[i].y - oy
        return rx * x + ry * y, abs(rx * y - ry * x)

    def cmp(i, j):
        d1, c1 = parts(i)
        d2, c2 = parts(j)
        # compare cot: d/c, both c > 0 under general position
        lhs, rhs = d1 * c2, d2 * c1
        return -1 if lhs > rhs else (1 if lhs < rhs else 0)

    return functools.cmp_to_key(cmp)


def collapse_onto(w: Walk, s: int) -> None:
    """Slide every vertex of the walk's tree onto s, one new s-edge per step.

    A neighbour of s is emptied by moving its other neighbours to s, the one
    closest in angle to s first; in convex position that move never crosses.
    """
    queue = sorted(x for x in w.adj[s] if w.degree(x) > 1)
    while queue:
        v = queue.pop(0)
        while w.degree(v) > 1:
            cands = sorted((x for x in w.adj[v] if x != s), key=_angle_cmp(w.ps, v, s))
            for x in cands:
                if w.try_move((v, x), (s, x)):
                    if w.degree(x) > 1:
                        queue.append(x)
                    break
            else:
                raise ConstructionError(f"no neighbour of {v} can slide onto {s}")


def convex_cat_to_star(c: SpanningStructure, s: int) -> MoveSequence:
    ps = c.point_set
    if not ps.in_convex_position():
        raise ValueError("point set is not in convex position")
    cls = classify(c)
    if not cls.is_caterpillar:
        raise StructureError("structure is not a caterpillar")
    ends = {cls.spine[0], cls.spine[-1]}
    # a head- or tail-leaf may act as s too: it extends the spine by one vertex
    if s not in ends and not (c.degree(s) == 1 and c.adjacency[s] & ends):
        raise ValueError(f"{s} is neither an endpoint of the spine {list(cls.spine)} nor a leaf at one")
    w = Walk(c, OpKind.SLIDE, Family.CATERPILLARS)
    collapse_onto(w, s)
    return w.sequence(bound=ps.n - 1 - c.degree(s))


def convex_path_to_path(p: SpanningStructure, q: SpanningStructure) -> MoveSequence:
    ps = p.point_set
    if ps.n < 5:
        raise ValueError("needs at least five points")
    if not ps.in_convex_position():
        raise ValueError("point set is not in convex position")
    if classify(p).kind != "path" or classify(q).kind != "path":
        raise StructureError("both structures must be paths")
    if p == q:
        return MoveSequence(p, [], OpKind.SLIDE, Family.CATERPILLARS, {"bound": 2 * ps.n - 6})
    v = min(x for x in range(ps.n) if p.degree(x) == 2 and q.degree(x) == 2)
    there = Walk(p, OpKind.SLIDE, Family.CATERPILLARS)
    collapse_onto(there, v)
    back = Walk(q, OpKind.SLIDE, Family.CATERPILLARS)
    collapse_onto(back, v)
    seq = there.sequence().then(back.sequence().reversed())
    seq.notes = {"bound": 2 * ps.n - 6, "center": v}
    return seq

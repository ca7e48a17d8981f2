"""Flip sequences between peeling paths that share their first vertex."""

from __future__ import annotations

from typing import Sequence

from ..geometry import PointSet, convex_hull
from ..reconfig import OpKind
from ..structures import Family, SpanningStructure, is_peeling_sequence, path_order, peeling_step_ok
from .sequence import ConstructionError, MoveSequence, Walk


def _peels(ps: PointSet, order: Sequence[int]) -> bool:
    remaining = list(order)
    prev = None
    for v in order:
        if not peeling_step_ok(ps, prev, v, remaining):
            return False
        remaining.remove(v)
        prev = v
    return True


def connector(ps: PointSet, pts: Sequence[int], p: int, q: int) -> list[int]:
    """Peeling order of pts from p to q built by always taking the longer hull arc towards q."""
    remaining = set(pts)
    out = [p]
    cur = p
    while len(remaining) > 2:
        hull = convex_hull(ps, remaining)
        i, j = hull.index(cur), hull.index(q)
        h = len(hull)
        ccw = [hull[(i + k) % h] for k in range(1, (j - i) % h)]
        cw = [hull[(i - k) % h] for k in range(1, (i - j) % h)]
        arc = ccw if len(ccw) >= len(cw) else cw
        if not arc:
            raise ConstructionError("connector stalled")
        remaining.discard(cur)
        remaining.difference_update(arc[:-1])
        out.extend(arc)
        cur = arc[-1]
    if q != cur:
        out.append(q)
    return out


def _search_connector(ps: PointSet, pts: Sequence[int], p: int, q: int) -> list[int] | None:
    """Depth-first search for an order from p to q that peels in both directions."""
    rest = sorted(set(pts) - {p, q})

    def rec(order, left):
        if not left:
            cand = order + [q]
            return cand if _peels(ps, cand[::-1]) else None
        for v in left:
            if peeling_step_ok(ps, order[-1], v, left + [q]):
                got = rec(order + [v], [x for x in left if x != v])
                if got:
                    return got
        return None

    return rec([p], rest)


def _reverse_suffix(w: Walk, path: list[int], k: int) -> list[int]:
    """Flip edge path[k-1]path[k] to path[k-1]path[-1]."""
    w.move((path[k - 1], path[k]), (path[k - 1], path[-1]))
    return path[:k] + path[k:][::-1]


def _connect(w: Walk, cur: list[int], target: list[int], k: int, stats: dict) -> list[int]:
    while k < len(cur) and cur[k] == target[k]:
        k += 1
    if k >= len(cur) - 1:
        return cur
    ps = w.ps
    rest = cur[k:]
    f = connector(ps, rest, cur[k], target[k])
    if not _peels(ps, f):
        raise ConstructionError(f"longer-arc connector {f} does not peel; points={list(ps)}, "
                                f"from {cur} to {target}")
    # the second recursion starts from reversed(f), which must peel as well
    if not _peels(ps, f[::-1]):
        stats["searched"] += 1
        f = _search_connector(ps, rest, cur[k], target[k])
        if f is None:
            raise ConstructionError(f"no two-way peeling connector for {cur} -> {target}")
    cur = _connect(w, cur, cur[:k] + f, k + 1, stats)
    cur = _reverse_suffix(w, cur, k)
    return _connect(w, cur, target, k + 1, stats)


def peeling_connect(p: SpanningStructure | Sequence[int], q: SpanningStructure | Sequence[int],
                    u: int, ps: PointSet | None = None) -> MoveSequence:
    """Flips from path p to path q keeping the first vertex u fixed; inputs are peeling orders."""
    if isinstance(p, SpanningStructure):
        ps = p.point_set
    if ps is None:
        raise ValueError("point set required when passing vertex orders")
    po = _as_order(p, u)
    qo = _as_order(q, u)
    for o in (po, qo):
        if o[0] != u:
            raise ValueError(f"path does not start at {u}")
        if not is_peeling_sequence(ps, o):
            raise ValueError(f"{o} is not a peeling sequence")
    w = Walk(SpanningStructure.from_path(ps, po), OpKind.FLIP, Family.PATHS)
    stats = {"searched": 0}
    end = _connect(w, po, qo, 1, stats)
    if end != qo:
        raise ConstructionError("did not reach the target path")
    return w.sequence(connector_searches=stats["searched"], fixed=u)


def _as_order(x, u: int) -> list[int]:
    if isinstance(x, SpanningStructure):
        o = path_order(x)
        return o if o[0] == u else o[::-1]
    return list(x)

"""Slide sequences between double stars, stars and short-spined caterpillars.

The workhorse is ``_empty_onto``: inside a region whose tree is a double
star with hull-adjacent centres u and v, it slides every leaf of u over to v.
When the next leaf's triangle is occupied it builds a radial path on the
occupied triangle, straightens its hull boundary (``_straighten_hull``), walks the
leaf along that boundary and then undoes the scaffolding.
"""

from __future__ import annotations

import functools

from ..geometry import (PointSet, convex_hull, point_in_hull, points_in_triangle, radial_order,
                        sq_dist_to_line_scaled)
from ..reconfig import OpKind
from ..structures import (Family, SpanningStructure, StructureError, classify, is_well_separated,
                          make_star)
from .sequence import ConstructionError, MoveSequence, Walk, search_to


def _side_sign(ps: PointSet, u: int, v: int, pts) -> int:
    signs = {ps.orient(u, v, p) for p in pts if p not in (u, v)}
    if len(signs) != 1:
        raise ConstructionError(f"{u},{v} are not hull-adjacent on the region")
    return signs.pop()


def _hull_adjacent(ps: PointSet, subset, u: int, v: int) -> bool:
    rest = [p for p in subset if p not in (u, v)]
    return not rest or len({ps.orient(u, v, p) for p in rest}) == 1


def radial_path(ps: PointSet, subset, u: int, v: int) -> list[int]:
    """Hamiltonian path on subset from u to v, visiting points as a ray around v sweeps from u."""
    subset = sorted(set(subset))
    if u not in subset or v not in subset or u == v:
        raise ValueError("u and v must be distinct members of subset")
    if not _hull_adjacent(ps, subset, u, v):
        raise ValueError(f"{u} and {v} are not adjacent on the hull of the subset")
    rest = [p for p in subset if p not in (u, v)]
    if not rest:
        return [u, v]
    d = ps.orient(v, u, rest[0])
    return [u] + radial_order(v, u, rest, ps, d) + [v]


def _check_depth(depth: int, ps: PointSet) -> None:
    # each nesting level shrinks the region; four calls at most per level
    if depth > 4 * ps.n:
        raise ConstructionError("recursion deeper than the construction allows")


def _empty_onto(w: Walk, region: set[int], u: int, v: int, depth: int = 0) -> None:
    """Within region (tree there a double star on u, v): move all u-leaves of the region to v."""
    ps = w.ps
    _check_depth(depth, ps)
    if len(region) <= 2:
        return
    s = _side_sign(ps, u, v, region)
    while True:
        leaves = [x for x in w.leaves_of(u) if x in region and x != v]
        if not leaves:
            return
        x = radial_order(u, v, leaves, ps, s)[0]
        inside = points_in_triangle(u, x, v, ps)
        if not inside:
            w.move((u, x), (v, x))
            continue
        if any(p not in region for p in inside):
            raise ConstructionError(f"foreign point inside triangle {u},{x},{v}")
        tri = {u, x, v, *inside}
        # the nested radial path leaves x out, so it is strictly smaller than the region
        if len(tri) - 1 >= len(region):
            raise ConstructionError("region did not shrink")
        _whole_hull(w, tri, u, v, x, depth + 1)


def _whole_hull(w: Walk, tri: set[int], u: int, v: int, x: int, depth: int) -> None:
    """Triangle u, x, v spans the region; interior points hang off v. Move ux to vx."""
    ps = w.ps
    _check_depth(depth, ps)
    inner = sorted(tri - {u, v, x})
    if any(not w.has_edge(v, p) for p in inner):
        raise ConstructionError("interior of the triangle is not a fan at v")
    order = radial_order(v, u, inner, ps, ps.orient(v, u, inner[0]))
    mark = len(w.steps)
    fan_to_radial(w, u, v, order)
    path = [u] + order + [v]
    _straighten_hull(w, set(path), u, v, path, depth + 1)
    scaffold = w.steps[mark:]
    chain = _hull_chain(ps, set(path), u, v)
    for a, b in zip(chain, chain[1:]):
        w.move((a, x), (b, x))
    for st in reversed(scaffold):
        w.move(st.added, st.removed)


def fan_to_radial(w: Walk, u: int, v: int, order: list[int]) -> None:
    """Fan at v plus edge uv becomes the radial path u, order..., v."""
    w.move((u, v), (u, order[0]))
    for a, b in zip(order, order[1:]):
        w.move((v, a), (a, b))


def radial_to_fan(w: Walk, u: int, v: int, order: list[int]) -> None:
    """Exact inverse of ``fan_to_radial``."""
    for a, b in reversed(list(zip(order, order[1:]))):
        w.move((a, b), (v, a))
    w.move((u, order[0]), (u, v))


def _hull_chain(ps: PointSet, pts: set[int], u: int, v: int) -> list[int]:
    """Hull vertices of pts from u to v, going the way that avoids edge uv."""
    hull = convex_hull(ps, pts)
    i, j = hull.index(u), hull.index(v)
    h = len(hull)
    if (i + 1) % h == j:
        # walk backwards from u
        out = [hull[(i - k) % h] for k in range(h)]
    else:
        out = [hull[(i + k) % h] for k in range(h)]
    return out[:out.index(v) + 1]


def _straighten_hull(w: Walk, pts: set[int], u: int, v: int, path: list[int], depth: int) -> None:
    """Turn the radial path on pts into a caterpillar whose spine holds every hull edge but uv."""
    ps = w.ps
    _check_depth(depth, ps)
    chain = _hull_chain(ps, pts, u, v)
    pos = {p: i for i, p in enumerate(path)}
    for a, b in zip(chain, chain[1:]):
        i, j = pos[a], pos[b]
        if i > j:
            raise ConstructionError("path does not follow the hull")
        if j - i > 1:
            _pocket(w, path[i:j + 1], depth + 1)


def _pocket(w: Walk, q: list[int], depth: int) -> None:
    """Sub-path a..b between hull-consecutive a, b becomes a double star on ab."""
    ps = w.ps
    _check_depth(depth, ps)
    if len(q) <= 2:
        return
    a, b = q[0], q[-1]
    inner = q[1:-1]
    p = min(inner, key=lambda t: (sq_dist_to_line_scaled(ps, a, b, t), t))
    k = q.index(p)
    q1, q2 = q[:k + 1], q[k:]
    _pocket(w, q1, depth + 1)
    _empty_onto(w, set(q1), p, a, depth + 1)
    _pocket(w, q2, depth + 1)
    _empty_onto(w, set(q2), p, b, depth + 1)
    w.move((a, p), (a, b))


def straighten_hull(ps: PointSet, subset, u: int, v: int, p: list[int]) -> MoveSequence:
    """Slides from the radial path p to a caterpillar whose spine covers the hull of subset minus uv.

    For a proper subset the sequence lives on the subset's own point set;
    ``notes["indices"]`` maps its indices back.
    """
    subset = sorted(set(subset))
    if list(p) != radial_path(ps, subset, u, v):
        raise ValueError("p is not the radial path of the subset")
    if len(subset) != ps.n:
        sub = PointSet([ps[i] for i in subset])
        local = {g: i for i, g in enumerate(subset)}
        seq = straighten_hull(sub, range(sub.n), local[u], local[v], [local[x] for x in p])
        seq.notes["indices"] = subset
        return seq
    w = Walk(SpanningStructure.from_path(ps, p), OpKind.SLIDE, Family.CATERPILLARS)
    _straighten_hull(w, set(subset), u, v, list(p), 0)
    return w.sequence()


def _merge_double_star(w: Walk, region: set[int], u: int, v: int) -> None:
    """Merge across a hull edge: split the region by line uv and empty u onto v on each side."""
    ps = w.ps
    left = {p for p in region if p not in (u, v) and ps.orient(u, v, p) > 0}
    right = {p for p in region if p not in (u, v) and ps.orient(u, v, p) < 0}
    for side in (left, right):
        if side:
            _empty_onto(w, side | {u, v}, u, v)
    # u's region leaves are gone; anything left attached to u lies outside the region


def _is_star_key(ps: PointSet, key: int, center: int | None = None) -> bool:
    t = SpanningStructure.from_key(ps, key)
    deg = [t.degree(i) for i in range(ps.n)]
    c = max(range(ps.n), key=lambda i: deg[i])
    return deg[c] == ps.n - 1 and (center is None or c == center)


def _finish(w: Walk, center: int | None) -> None:
    if not _is_star_key(w.ps, w.key, center):
        search_to(w, lambda k: _is_star_key(w.ps, k, center))


def double_star_to_star(c: SpanningStructure, u: int, v: int, target: int | None = None) -> MoveSequence:
    ps = c.point_set
    target = v if target is None else target
    if target not in (u, v):
        raise ValueError("target must be one of the centres")
    src = u if target == v else v
    if not c.has_edge(u, v) or any(not (c.has_edge(u, x) or c.has_edge(v, x))
                                   for x in range(ps.n) if x not in (u, v)):
        raise StructureError(f"structure is not a double star on {u}, {v}")
    if not _hull_adjacent(ps, range(ps.n), u, v):
        raise ValueError(f"{u} and {v} are not adjacent on the convex hull")
    w = Walk(c, OpKind.SLIDE, Family.CATERPILLARS)
    try:
        _empty_onto(w, set(range(ps.n)), src, target)
    except ConstructionError:
        pass
    _finish(w, target)
    return w.sequence()


def star_to_star_general(ps: PointSet, u: int, v: int) -> MoveSequence:
    if u == v:
        raise ValueError("u and v must differ")
    w = Walk(make_star(ps, u), OpKind.SLIDE, Family.CATERPILLARS)
    try:
        _merge_double_star(w, set(range(ps.n)), u, v)
    except ConstructionError:
        pass
    _finish(w, v)
    return w.sequence()


def well_separated_to_star(c: SpanningStructure, spine_orientation) -> MoveSequence:
    if not is_well_separated(c, spine_orientation):
        raise StructureError("caterpillar is not well-separated for that orientation")
    spine = list(spine_orientation)
    w = Walk(c, OpKind.SLIDE, Family.CATERPILLARS)
    try:
        for a, b in zip(spine, spine[1:]):
            region = {a, b} | {x for x in w.adj[a] | w.adj[b] if w.degree(x) == 1}
            _merge_double_star(w, region, a, b)
            if w.degree(a) != 1:
                raise ConstructionError(f"spine vertex {a} kept leaves")
    except ConstructionError:
        pass
    _finish(w, None)
    return w.sequence()


# -- three-vertex spines -----------------------------------------------------------

def _group(w: Walk, a: int, b: int) -> set[int]:
    return {a, b} | {x for x in w.adj[a] | w.adj[b] if w.degree(x) == 1}


def _unsigned_angle_key(ps: PointSet, pivot: int, ref: int):
    ox, oy = ps[pivot]
    rx, ry = ps[ref].x - ox, ps[ref].y - oy

    def parts(i):
        x, y = ps[i].x - ox, ps[i].y - oy
        return rx * x + ry * y, abs(rx * y - ry * x)

    def cmp(i, j):
        d1, c1 = parts(i)
        d2, c2 = parts(j)
        lhs, rhs = d1 * c2, d2 * c1
        return -1 if lhs > rhs else (1 if lhs < rhs else 0)

    return functools.cmp_to_key(cmp)


def _obstruction_step(w: Walk, v1: int, v2: int, v3: int) -> None:
    """One obstruction-clearing round; each round removes at least one leaf from v1 or v3."""
    ps = w.ps
    hull12 = convex_hull(ps, _group(w, v1, v2))
    blockers = [x for x in w.leaves_of(v3) if point_in_hull(x, hull12, ps)]
    if not blockers:
        raise ConstructionError("no leaf of the third spine vertex obstructs")
    u = min(blockers, key=_unsigned_angle_key(ps, v3, v2))
    tri_pts = points_in_triangle(u, v2, v3, ps)
    v1_leaves = set(w.leaves_of(v1))
    ws = [p for p in tri_pts if p in v1_leaves]
    if not ws:
        _empty_onto(w, {u, v2, v3, *tri_pts}, v3, v2)
        return
    x = min(ws, key=_unsigned_angle_key(ps, v1, v2))
    inside = points_in_triangle(x, v1, v2, ps)
    _empty_onto(w, {x, v1, v2, *inside}, v1, v2)


def triple_star_to_star(c: SpanningStructure) -> MoveSequence:
    cls = classify(c)
    if cls.kind not in ("caterpillar", "path") or len(cls.spine) != 3:
        raise StructureError("caterpillar with a spine of exactly three vertices required")
    v1, v2, v3 = cls.spine
    w = Walk(c, OpKind.SLIDE, Family.CATERPILLARS)
    rounds: list[str] = []
    try:
        while w.degree(v1) > 1 and w.degree(v3) > 1:
            if len(rounds) > 4 * w.ps.n:
                raise ConstructionError("no progress")
            g12 = _group(w, v1, v2)
            g23 = _group(w, v2, v3)
            if w.attempt(_merge_double_star, g12, v1, v2):
                rounds.append("merge-first")
            elif w.attempt(_merge_double_star, g23, v3, v2):
                rounds.append("merge-last")
            elif w.attempt(_obstruction_step, v1, v2, v3):
                rounds.append("obstruction")
            # the argument is symmetric in the outer spine vertices
            elif w.attempt(_obstruction_step, v3, v2, v1):
                rounds.append("obstruction-mirrored")
            else:
                raise ConstructionError("no obstruction round applies")
        other = v3 if w.degree(v1) == 1 else v1
        if w.degree(other) > 1:
            _merge_double_star(w, set(range(w.ps.n)), other, v2)
    except ConstructionError:
        pass
    _finish(w, None)
    return w.sequence(rounds=rounds)

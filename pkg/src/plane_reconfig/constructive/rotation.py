"""Rotation sequences from an arbitrary caterpillar to a star."""

from __future__ import annotations

from ..geometry import convex_hull, point_in_hull
from ..reconfig import OpKind
from ..structures import Family, SpanningStructure, StructureError, classify
from .sequence import ConstructionError, MoveSequence, Walk
from .stars import _finish, _merge_double_star


def _spine(w: Walk) -> tuple[int, ...]:
    return classify(w.structure()).spine


def _shorten(w: Walk, spine: tuple[int, ...]) -> str:
    """Turn the last spine vertex into a leaf; returns which branch ran."""
    ps = w.ps
    vk1, vk = spine[-2], spine[-1]
    group = {vk1, vk} | {x for x in w.adj[vk1] | w.adj[vk] if w.degree(x) == 1}
    hull = convex_hull(ps, group)
    inside = [p for p in range(ps.n) if p not in group and point_in_hull(p, hull, ps)]
    if not inside and w.attempt(_merge_double_star, group, vk, vk1):
        return "disjoint"
    # phase 1: foreign leaves inside the hull move to spine vertices inside it
    inner_spine = [v for v in spine if point_in_hull(v, hull, ps)]
    inner_spine.sort(key=lambda v: v == vk)
    while True:
        movable = []
        for l in inside:
            if w.degree(l) != 1:
                continue
            (par,) = w.adj[l]
            if par in spine and not point_in_hull(par, hull, ps):
                movable.append((l, par))
        if not movable:
            break
        if not any(w.try_move((par, l), (t, l)) for l, par in movable for t in inner_spine):
            raise ConstructionError("no leaf inside the hull sees an inner spine vertex")
    # phase 2: empty the last spine vertex onto the other spine vertices, those inside first
    targets = [v for v in spine[:-1] if v in inside] + [v for v in spine[:-1][::-1] if v not in inside]
    while True:
        leaves = [x for x in w.leaves_of(vk) if x != vk1]
        if not leaves:
            break
        if not any(w.try_move((vk, l), (t, l)) for l in leaves for t in targets):
            raise ConstructionError(f"no leaf of {vk} can rotate away")
    return "phases"


def rotation_to_star(c: SpanningStructure) -> MoveSequence:
    if not classify(c).is_caterpillar:
        raise StructureError("structure is not a caterpillar")
    w = Walk(c, OpKind.ROTATION, Family.CATERPILLARS)
    branches = []
    try:
        while True:
            spine = _spine(w)
            if len(spine) <= 1:
                break
            if len(spine) == 2:
                u, v = spine
                _merge_double_star(w, set(range(w.ps.n)), u, v)
                break
            branches.append(_shorten(w, spine))
    except ConstructionError:
        pass
    _finish(w, None)
    return w.sequence(branches=branches)

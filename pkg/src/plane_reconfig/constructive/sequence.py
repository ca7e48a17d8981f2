"""Validated move sequences and the mutable walker the generators drive."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..geometry import Segment, seg
from ..reconfig import MoveStep, OpKind, classify_move, exchange_kinds
from ..structures import Family, SpanningStructure, backend_for, in_family, tables


class ConstructionError(RuntimeError):
    """A generator reached a state its construction does not cover."""


@dataclass
class MoveSequence:
    start: SpanningStructure
    steps: list[MoveStep]
    required_kind: OpKind
    family: Family
    notes: dict = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.steps)

    def structures(self) -> list[SpanningStructure]:
        out = [self.start]
        cur = self.start
        for st in self.steps:
            cur = cur.exchange(st.removed, st.added)
            out.append(cur)
        return out

    @property
    def end(self) -> SpanningStructure:
        return self.structures()[-1]

    def validate(self) -> None:
        """Re-check every step from scratch; raises ValueError on the first defect."""
        structs = self.structures()
        if not in_family(structs[0], self.family):
            raise ValueError("start structure is outside the declared family")
        for i, (a, b, st) in enumerate(zip(structs, structs[1:], self.steps)):
            b._validate()
            mv = classify_move(a, b)
            if mv is None or mv.removed != seg(*st.removed) or mv.added != seg(*st.added):
                raise ValueError(f"step {i} is not a single exchange")
            if self.required_kind not in mv.kinds:
                raise ValueError(f"step {i} ({st.removed} -> {st.added}) is not a {self.required_kind.label}")
            if not in_family(b, self.family):
                raise ValueError(f"step {i} leaves the {self.family.name.lower()} family")

    def then(self, other: "MoveSequence") -> "MoveSequence":
        if other.start != self.end:
            raise ValueError("sequences do not chain")
        return MoveSequence(self.start, self.steps + other.steps, self.required_kind, self.family,
                            {**self.notes, **other.notes})

    def reversed(self) -> "MoveSequence":
        return MoveSequence(self.end, [s.reversed() for s in reversed(self.steps)],
                            self.required_kind, self.family, dict(self.notes))


class Walk:
    """Current structure plus the steps taken; every move is checked on entry."""

    def __init__(self, start: SpanningStructure, required: OpKind, family: Family):
        self.start = start
        self.ps = start.point_set
        self.required = required
        self.family = family
        self.key = start.key
        self.steps: list[MoveStep] = []
        self.adj: list[set[int]] = [set(a) for a in start.adjacency]
        self.fallbacks = 0
        self._sa, self._sb, self._cross = tables(self.ps)
        self._family_ok = backend_for(self.ps.n).family_ok

    # -- queries
    def has_edge(self, a: int, b: int) -> bool:
        return b in self.adj[a]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def is_leaf(self, v: int) -> bool:
        return len(self.adj[v]) == 1

    def leaves_of(self, v: int) -> list[int]:
        return sorted(w for w in self.adj[v] if len(self.adj[w]) == 1)

    def edges(self) -> list[Segment]:
        return sorted(seg(a, b) for a in range(self.ps.n) for b in self.adj[a] if a < b)

    def structure(self) -> SpanningStructure:
        return SpanningStructure.from_key(self.ps, self.key)

    # -- moves
    def _side(self, a: int, b: int) -> set[int]:
        seen = {a}
        stack = [a]
        while stack:
            x = stack.pop()
            for y in self.adj[x]:
                if (x, y) in ((a, b), (b, a)) or y in seen:
                    continue
                seen.add(y)
                stack.append(y)
        return seen

    def move(self, removed: Segment, added: Segment) -> MoveStep:
        e = seg(*removed)
        f = seg(*added)
        idx = self.ps.segment_index
        if not self.has_edge(*e):
            raise ConstructionError(f"edge {e} is not present")
        if self.has_edge(*f):
            raise ConstructionError(f"edge {f} is already present")
        base = self.key & ~(1 << idx[e])
        if self._cross[idx[f]] & base:
            raise ConstructionError(f"adding {f} after removing {e} creates a crossing")
        side = self._side(*e)
        if (f[0] in side) == (f[1] in side):
            raise ConstructionError(f"exchanging {e} for {f} does not give a tree")
        common = [s for s in self.edges() if s != e]
        kinds = exchange_kinds(self.ps, e, f, common)
        if self.required not in kinds:
            raise ConstructionError(f"{e} -> {f} is not a {self.required.label}")
        new_key = base | (1 << idx[f])
        if not self._family_ok(self.ps.n, new_key, self._sa, self._sb, self.family.value):
            raise ConstructionError(f"{e} -> {f} leaves the {self.family.name.lower()} family")
        self.key = new_key
        self.adj[e[0]].discard(e[1])
        self.adj[e[1]].discard(e[0])
        self.adj[f[0]].add(f[1])
        self.adj[f[1]].add(f[0])
        step = MoveStep(e, f, kinds)
        self.steps.append(step)
        return step

    def try_move(self, removed: Segment, added: Segment) -> bool:
        try:
            self.move(removed, added)
        except ConstructionError:
            return False
        return True

    def undo_to(self, mark: int) -> None:
        """Replay the steps taken since `mark` backwards (they stay in the record)."""
        for st in list(reversed(self.steps[mark:])):
            self.move(st.added, st.removed)

    def rollback(self, mark: int) -> None:
        """Forget the steps after `mark` as if they had never been taken."""
        for st in reversed(self.steps[mark:]):
            e, f = st.added, st.removed
            idx = self.ps.segment_index
            self.key = (self.key & ~(1 << idx[e])) | (1 << idx[f])
            self.adj[e[0]].discard(e[1])
            self.adj[e[1]].discard(e[0])
            self.adj[f[0]].add(f[1])
            self.adj[f[1]].add(f[0])
        del self.steps[mark:]

    def attempt(self, fn, *args) -> bool:
        """Run a sub-construction; on ConstructionError roll back and report failure."""
        mark = len(self.steps)
        try:
            fn(self, *args)
        except ConstructionError:
            self.rollback(mark)
            return False
        return True

    def jump(self, path_keys: list[int]) -> None:
        """Follow a precomputed chain of keys (each one exchange apart)."""
        for key in path_keys:
            diff_gone = self.key & ~key
            diff_new = key & ~self.key
            segs = self.ps.segments
            self.move(segs[diff_gone.bit_length() - 1], segs[diff_new.bit_length() - 1])

    def sequence(self, **notes) -> MoveSequence:
        notes.setdefault("fallbacks", self.fallbacks)
        return MoveSequence(self.start, list(self.steps), self.required, self.family, notes)


def search_to(w: Walk, goal, limit: int = 2_000_000) -> None:
    """Breadth-first search in the walk's own move graph until `goal(key)` holds, then follow it.

    Used only where a construction reaches a state it does not cover; each
    call is counted in ``w.fallbacks``.
    """
    ps = w.ps
    if goal(w.key):
        return
    sa, sb, cross = tables(ps)
    nb = backend_for(ps.n).tree_neighbors
    parent = {w.key: None}
    frontier = [w.key]
    found = None
    while frontier and found is None:
        nxt = []
        for k in frontier:
            for k2 in nb(ps.n, k, sa, sb, cross, ps.empty_triangles, int(w.required), w.family.value):
                if k2 in parent:
                    continue
                parent[k2] = k
                if goal(k2):
                    found = k2
                    break
                nxt.append(k2)
            if found is not None:
                break
        if len(parent) > limit:
            raise ConstructionError("search limit exceeded")
        frontier = nxt
    if found is None:
        raise ConstructionError("target unreachable in the move graph")
    chain = []
    k = found
    while k != w.key:
        chain.append(k)
        k = parent[k]
    w.fallbacks += 1
    w.jump(chain[::-1])

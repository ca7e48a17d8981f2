"""Pure-Python hot loops. Same API as the compiled ``_kernels`` extension.

Structures are bitmasks over the lexicographic segment universe; segment i
joins seg_a[i] < seg_b[i]. ``cross[i]`` is the mask of segments properly
crossing segment i, ``empty_tri`` a flat n*n*n byte table.
"""

from collections import deque

FAMILY_ALL = 0
FAMILY_CATERPILLARS = 1
FAMILY_PATHS = 2

OP_FLIP = 0
OP_COMPATIBLE_FLIP = 1
OP_ROTATION = 2
OP_EMPTY_ROTATION = 3
OP_SLIDE = 4


def seg_idx(n, a, b):
    if a > b:
        a, b = b, a
    return a * n - a * (a + 1) // 2 + (b - a - 1)


def _degrees(n, mask, seg_a, seg_b):
    deg = [0] * n
    adj = [0] * n
    m = mask
    i = 0
    while m:
        if m & 1:
            a = seg_a[i]
            b = seg_b[i]
            deg[a] += 1
            deg[b] += 1
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        m >>= 1
        i += 1
    return deg, adj


def family_ok(n, mask, seg_a, seg_b, family):
    if family == FAMILY_ALL:
        return True
    deg, adj = _degrees(n, mask, seg_a, seg_b)
    if family == FAMILY_PATHS:
        return max(deg) <= 2
    for v in range(n):
        if deg[v] >= 2:
            inner = 0
            nb = adj[v]
            w = 0
            while nb:
                if nb & 1 and deg[w] >= 2:
                    inner += 1
                nb >>= 1
                w += 1
            if inner > 2:
                return False
    return True


def enumerate_trees(n, seg_a, seg_b, cross, family):
    m = len(seg_a)
    need = n - 1
    out = []
    deg = [0] * n
    path_only = family == FAMILY_PATHS

    def rec(i, mask, k, comp):
        if k == need:
            if family_ok(n, mask, seg_a, seg_b, family):
                out.append(mask)
            return
        if m - i < need - k:
            return
        a = seg_a[i]
        b = seg_b[i]
        if b == a + 1 and a > 0:
            # block of vertex a-1 is finished: its component needs a live vertex
            c = comp[a - 1]
            if not any(comp[w] == c for w in range(a, n)):
                return
        if (not cross[i] & mask) and comp[a] != comp[b] and not (
                path_only and (deg[a] >= 2 or deg[b] >= 2)):
            ca, cb = comp[a], comp[b]
            nc = [ca if x == cb else x for x in comp]
            deg[a] += 1
            deg[b] += 1
            rec(i + 1, mask | (1 << i), k + 1, nc)
            deg[a] -= 1
            deg[b] -= 1
        rec(i + 1, mask, k, comp)

    rec(0, 0, 0, list(range(n)))
    out.sort()
    return out


def _side(adj, start, blocked):
    """Vertex mask reachable from start without crossing vertex `blocked`'s edge to start."""
    seen = 1 << start
    stack = [start]
    while stack:
        v = stack.pop()
        nb = adj[v]
        if v == start:
            nb &= ~(1 << blocked)
        w = 0
        while nb:
            if nb & 1 and not (seen >> w) & 1:
                seen |= 1 << w
                stack.append(w)
            nb >>= 1
            w += 1
    return seen


def _op_ok(n, mask, e, f, seg_a, seg_b, cross, empty_tri, op):
    if op == OP_FLIP:
        return True
    if op == OP_COMPATIBLE_FLIP:
        return not (cross[e] >> f) & 1
    a, b = seg_a[e], seg_b[e]
    c, d = seg_a[f], seg_b[f]
    if a == c:
        s, x, y = a, b, d
    elif a == d:
        s, x, y = a, b, c
    elif b == c:
        s, x, y = b, a, d
    elif b == d:
        s, x, y = b, a, c
    else:
        return False
    if op == OP_ROTATION:
        return True
    if not empty_tri[s * n * n + x * n + y]:
        return False
    if op == OP_EMPTY_ROTATION:
        return True
    return bool((mask >> seg_idx(n, x, y)) & 1)


def tree_neighbors(n, mask, seg_a, seg_b, cross, empty_tri, op, family):
    """All structures one `op`-move away from mask, inside `family`."""
    m = len(seg_a)
    _, adj = _degrees(n, mask, seg_a, seg_b)
    out = []
    for e in range(m):
        if not (mask >> e) & 1:
            continue
        a = seg_a[e]
        b = seg_b[e]
        side = _side(adj, a, b)
        base = mask & ~(1 << e)
        for f in range(m):
            if (mask >> f) & 1:
                continue
            if ((side >> seg_a[f]) & 1) == ((side >> seg_b[f]) & 1):
                continue
            if cross[f] & base:
                continue
            if not _op_ok(n, mask, e, f, seg_a, seg_b, cross, empty_tri, op):
                continue
            new = base | (1 << f)
            if family_ok(n, new, seg_a, seg_b, family):
                out.append(new)
    return out


def graph_edges(n, masks, seg_a, seg_b, cross, empty_tri, op, family):
    """Undirected edge list (i < j) of the reconfiguration graph on sorted masks."""
    index = {mk: i for i, mk in enumerate(masks)}
    src = []
    dst = []
    for i, mk in enumerate(masks):
        for nb in tree_neighbors(n, mk, seg_a, seg_b, cross, empty_tri, op, family):
            j = index.get(nb)
            if j is not None and j > i:
                src.append(i)
                dst.append(j)
    return src, dst


def eccentricities(nv, indptr, indices):
    """BFS eccentricity of every vertex; -1 when the graph is disconnected."""
    ecc = [0] * nv
    for s in range(nv):
        dist = [-1] * nv
        dist[s] = 0
        q = deque([s])
        reached = 1
        far = 0
        while q:
            v = q.popleft()
            dv = dist[v]
            for k in range(indptr[v], indptr[v + 1]):
                w = indices[k]
                if dist[w] < 0:
                    dist[w] = dv + 1
                    far = dv + 1
                    reached += 1
                    q.append(w)
        if reached != nv:
            return [-1] * nv
        ecc[s] = far
    return ecc


def count_isolated(n, masks, seg_a, seg_b, cross, empty_tri, op, family):
    """Indices of masks with no `op`-neighbour inside `family`."""
    return [i for i, mk in enumerate(masks)
            if not tree_neighbors(n, mk, seg_a, seg_b, cross, empty_tri, op, family)]


# -- raw-coordinate scorer for the isolated-caterpillar search ------------------------

def _orient(xs, ys, a, b, c):
    v = (xs[b] - xs[a]) * (ys[c] - ys[a]) - (ys[b] - ys[a]) * (xs[c] - xs[a])
    return (v > 0) - (v < 0)


def _xcross(xs, ys, a, b, c, d):
    return (_orient(xs, ys, a, b, c) * _orient(xs, ys, a, b, d) < 0
            and _orient(xs, ys, c, d, a) * _orient(xs, ys, c, d, b) < 0)


def _cat_ok(adj):
    deg = [len(a) for a in adj]
    return all(sum(1 for w in adj[v] if deg[w] >= 2) <= 2 for v in range(len(adj)) if deg[v] >= 2)


def raw_slide_count(xs, ys, ea, eb):
    """Caterpillar-internal slides of the tree (ea[i], eb[i]) drawn on raw coordinates.

    -1 for a degenerate point set; 1000000 plus the number of crossing pairs for a
    non-plane drawing, so that search has a slope towards planarity.
    """
    n = len(xs)
    m = len(ea)
    for i in range(n):
        for j in range(i + 1, n):
            if xs[i] == xs[j] and ys[i] == ys[j]:
                return -1
            for k in range(j + 1, n):
                if _orient(xs, ys, i, j, k) == 0:
                    return -1
    crossings = sum(1 for i in range(m) for j in range(i + 1, m)
                    if len({ea[i], eb[i], ea[j], eb[j]}) == 4 and _xcross(xs, ys, ea[i], eb[i], ea[j], eb[j]))
    if crossings:
        return 1000000 + crossings
    adj = [set() for _ in range(n)]
    for a, b in zip(ea, eb):
        adj[a].add(b)
        adj[b].add(a)
    count = 0
    for y in range(n):
        nb = sorted(adj[y])
        for i, x in enumerate(nb):
            for z in nb[i + 1:]:
                o = _orient(xs, ys, x, y, z)
                if any(_orient(xs, ys, x, y, p) == o and _orient(xs, ys, y, z, p) == o
                       and _orient(xs, ys, z, x, p) == o for p in range(n) if p not in (x, y, z)):
                    continue
                if any(len({x, z, a, b}) == 4 and _xcross(xs, ys, x, z, a, b) for a, b in zip(ea, eb)):
                    continue
                for r0, r1 in ((x, y), (y, z)):
                    adj[r0].discard(r1)
                    adj[r1].discard(r0)
                    adj[x].add(z)
                    adj[z].add(x)
                    if _cat_ok(adj):
                        count += 1
                    adj[x].discard(z)
                    adj[z].discard(x)
                    adj[r0].add(r1)
                    adj[r1].add(r0)
    return count

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops; mirrors plane_reconfig._kernels_py exactly."""

from libc.stdlib cimport malloc, free
from libc.string cimport memcpy

ctypedef unsigned long long u64

cdef enum:
    MAXN = 10
    MAXSEG = 45

FAMILY_ALL = 0
FAMILY_CATERPILLARS = 1
FAMILY_PATHS = 2

OP_FLIP = 0
OP_COMPATIBLE_FLIP = 1
OP_ROTATION = 2
OP_EMPTY_ROTATION = 3
OP_SLIDE = 4


cdef struct Tables:
    int n
    int m
    int sa[MAXSEG]
    int sb[MAXSEG]
    u64 cross[MAXSEG]
    int sidx[MAXN][MAXN]
    unsigned char tri[MAXN * MAXN * MAXN]


cdef int _load(Tables* t, int n, seg_a, seg_b, cross, empty_tri) except -1:
    cdef int i, a, b
    if n > MAXN or n < 1:
        raise ValueError("compiled kernels support 1 <= n <= %d" % MAXN)
    t.n = n
    t.m = len(seg_a)
    for i in range(t.m):
        t.sa[i] = seg_a[i]
        t.sb[i] = seg_b[i]
        t.cross[i] = cross[i]
        t.sidx[t.sa[i]][t.sb[i]] = i
        t.sidx[t.sb[i]][t.sa[i]] = i
    if empty_tri is not None:
        for i in range(n * n * n):
            t.tri[i] = empty_tri[i]
    return 0


cdef inline void _adj(Tables* t, u64 mask, int* deg, u64* adj):
    cdef int i
    for i in range(t.n):
        deg[i] = 0
        adj[i] = 0
    for i in range(t.m):
        if (mask >> i) & 1:
            deg[t.sa[i]] += 1
            deg[t.sb[i]] += 1
            adj[t.sa[i]] |= (<u64>1) << t.sb[i]
            adj[t.sb[i]] |= (<u64>1) << t.sa[i]


cdef bint _family_ok(Tables* t, u64 mask, int family):
    cdef int deg[MAXN]
    cdef u64 adj[MAXN]
    cdef int v, w, inner
    if family == 0:
        return True
    _adj(t, mask, deg, adj)
    if family == 2:
        for v in range(t.n):
            if deg[v] > 2:
                return False
        return True
    for v in range(t.n):
        if deg[v] >= 2:
            inner = 0
            for w in range(t.n):
                if (adj[v] >> w) & 1 and deg[w] >= 2:
                    inner += 1
            if inner > 2:
                return False
    return True


def family_ok(int n, mask, seg_a, seg_b, int family):
    cdef Tables t
    _load(&t, n, seg_a, seg_b, [0] * len(seg_a), None)
    return _family_ok(&t, <u64>mask, family)


cdef struct EnumState:
    Tables* t
    int need
    int family
    int deg[MAXN]
    u64* out
    long count
    long cap


cdef int _rec(EnumState* st, int i, u64 mask, int k, int* comp) except -1:
    cdef Tables* t = st.t
    cdef int a, b, c, w, ca, cb
    cdef bint alive
    cdef int nc[MAXN]
    cdef u64* grown
    if k == st.need:
        if _family_ok(t, mask, st.family):
            if st.count == st.cap:
                grown = <u64*>malloc(2 * st.cap * sizeof(u64))
                if grown == NULL:
                    raise MemoryError()
                memcpy(grown, st.out, st.cap * sizeof(u64))
                free(st.out)
                st.out = grown
                st.cap *= 2
            st.out[st.count] = mask
            st.count += 1
        return 0
    if t.m - i < st.need - k:
        return 0
    a = t.sa[i]
    b = t.sb[i]
    if b == a + 1 and a > 0:
        c = comp[a - 1]
        alive = False
        for w in range(a, t.n):
            if comp[w] == c:
                alive = True
                break
        if not alive:
            return 0
    if (t.cross[i] & mask) == 0 and comp[a] != comp[b] and not (
            st.family == 2 and (st.deg[a] >= 2 or st.deg[b] >= 2)):
        ca = comp[a]
        cb = comp[b]
        for w in range(t.n):
            nc[w] = ca if comp[w] == cb else comp[w]
        st.deg[a] += 1
        st.deg[b] += 1
        _rec(st, i + 1, mask | ((<u64>1) << i), k + 1, nc)
        st.deg[a] -= 1
        st.deg[b] -= 1
    _rec(st, i + 1, mask, k, comp)
    return 0


def enumerate_trees(int n, seg_a, seg_b, cross, int family):
    cdef Tables t
    cdef EnumState st
    cdef int comp[MAXN]
    cdef int w
    cdef long i
    _load(&t, n, seg_a, seg_b, cross, None)
    st.t = &t
    st.need = n - 1
    st.family = family
    st.cap = 1024
    st.count = 0
    st.out = <u64*>malloc(st.cap * sizeof(u64))
    if st.out == NULL:
        raise MemoryError()
    for w in range(n):
        comp[w] = w
        st.deg[w] = 0
    try:
        _rec(&st, 0, 0, 0, comp)
        result = [st.out[i] for i in range(st.count)]
    finally:
        free(st.out)
    result.sort()
    return result


cdef inline u64 _side(Tables* t, u64* adj, int start, int blocked):
    cdef u64 seen = (<u64>1) << start
    cdef int stack[MAXN]
    cdef int top = 0
    cdef int v, w
    cdef u64 nb
    stack[top] = start
    top += 1
    while top > 0:
        top -= 1
        v = stack[top]
        nb = adj[v]
        if v == start:
            nb &= ~((<u64>1) << blocked)
        for w in range(t.n):
            if (nb >> w) & 1 and not (seen >> w) & 1:
                seen |= (<u64>1) << w
                stack[top] = w
                top += 1
    return seen


cdef inline bint _op_ok(Tables* t, u64 mask, int e, int f, int op):
    cdef int a, b, c, d, s, x, y, n
    if op == 0:
        return True
    if op == 1:
        return not ((t.cross[e] >> f) & 1)
    a = t.sa[e]
    b = t.sb[e]
    c = t.sa[f]
    d = t.sb[f]
    if a == c:
        s = a; x = b; y = d
    elif a == d:
        s = a; x = b; y = c
    elif b == c:
        s = b; x = a; y = d
    elif b == d:
        s = b; x = a; y = c
    else:
        return False
    if op == 2:
        return True
    n = t.n
    if not t.tri[s * n * n + x * n + y]:
        return False
    if op == 3:
        return True
    return (mask >> t.sidx[x][y]) & 1


cdef int _neighbors(Tables* t, u64 mask, int op, int family, u64* out):
    cdef int deg[MAXN]
    cdef u64 adj[MAXN]
    cdef int e, f, cnt = 0
    cdef u64 side, base, new
    _adj(t, mask, deg, adj)
    for e in range(t.m):
        if not (mask >> e) & 1:
            continue
        side = _side(t, adj, t.sa[e], t.sb[e])
        base = mask & ~((<u64>1) << e)
        for f in range(t.m):
            if (mask >> f) & 1:
                continue
            if ((side >> t.sa[f]) & 1) == ((side >> t.sb[f]) & 1):
                continue
            if t.cross[f] & base:
                continue
            if not _op_ok(t, mask, e, f, op):
                continue
            new = base | ((<u64>1) << f)
            if _family_ok(t, new, family):
                out[cnt] = new
                cnt += 1
    return cnt


def tree_neighbors(int n, mask, seg_a, seg_b, cross, empty_tri, int op, int family):
    cdef Tables t
    cdef u64 buf[MAXSEG * MAXSEG]
    cdef int cnt, i
    _load(&t, n, seg_a, seg_b, cross, empty_tri)
    cnt = _neighbors(&t, <u64>mask, op, family, buf)
    return [buf[i] for i in range(cnt)]


cdef long _find(u64* arr, long size, u64 key):
    cdef long lo = 0, hi = size - 1, mid
    while lo <= hi:
        mid = (lo + hi) >> 1
        if arr[mid] == key:
            return mid
        if arr[mid] < key:
            lo = mid + 1
        else:
            hi = mid - 1
    return -1


def graph_edges(int n, masks, seg_a, seg_b, cross, empty_tri, int op, int family):
    cdef Tables t
    cdef long nv = len(masks)
    cdef long i, j
    cdef int cnt, k
    cdef u64 buf[MAXSEG * MAXSEG]
    cdef u64* arr = <u64*>malloc((nv if nv > 0 else 1) * sizeof(u64))
    if arr == NULL:
        raise MemoryError()
    _load(&t, n, seg_a, seg_b, cross, empty_tri)
    src = []
    dst = []
    try:
        for i in range(nv):
            arr[i] = masks[i]
        for i in range(nv):
            cnt = _neighbors(&t, arr[i], op, family, buf)
            for k in range(cnt):
                j = _find(arr, nv, buf[k])
                if j > i:
                    src.append(i)
                    dst.append(j)
    finally:
        free(arr)
    return src, dst


def eccentricities(long nv, indptr, indices):
    cdef long* ip = <long*>malloc((nv + 1) * sizeof(long))
    cdef long ne = len(indices)
    cdef long* ix = <long*>malloc((ne if ne > 0 else 1) * sizeof(long))
    cdef long* dist = <long*>malloc((nv if nv > 0 else 1) * sizeof(long))
    cdef long* queue = <long*>malloc((nv if nv > 0 else 1) * sizeof(long))
    cdef long s, v, w, k, head, tail, far
    if ip == NULL or ix == NULL or dist == NULL or queue == NULL:
        raise MemoryError()
    ecc = [0] * nv
    try:
        for k in range(nv + 1):
            ip[k] = indptr[k]
        for k in range(ne):
            ix[k] = indices[k]
        for s in range(nv):
            for v in range(nv):
                dist[v] = -1
            dist[s] = 0
            queue[0] = s
            head = 0
            tail = 1
            far = 0
            while head < tail:
                v = queue[head]
                head += 1
                for k in range(ip[v], ip[v + 1]):
                    w = ix[k]
                    if dist[w] < 0:
                        dist[w] = dist[v] + 1
                        far = dist[w]
                        queue[tail] = w
                        tail += 1
            if tail != nv:
                return [-1] * nv
            ecc[s] = far
    finally:
        free(ip)
        free(ix)
        free(dist)
        free(queue)
    return ecc


def count_isolated(int n, masks, seg_a, seg_b, cross, empty_tri, int op, int family):
    cdef Tables t
    cdef u64 buf[MAXSEG * MAXSEG]
    _load(&t, n, seg_a, seg_b, cross, empty_tri)
    return [i for i, mk in enumerate(masks) if _neighbors(&t, <u64>mk, op, family, buf) == 0]


# -- raw-coordinate scorer for the isolated-caterpillar search ------------------------

cdef enum:
    RAWN = 32


cdef inline int _rorient(long long* xs, long long* ys, int a, int b, int c):
    cdef long long v = (xs[b] - xs[a]) * (ys[c] - ys[a]) - (ys[b] - ys[a]) * (xs[c] - xs[a])
    return (v > 0) - (v < 0)


cdef inline bint _rcross(long long* xs, long long* ys, int a, int b, int c, int d):
    return (_rorient(xs, ys, a, b, c) * _rorient(xs, ys, a, b, d) < 0
            and _rorient(xs, ys, c, d, a) * _rorient(xs, ys, c, d, b) < 0)


cdef bint _rcat_ok(int n, unsigned char* A, int* deg):
    cdef int v, w, inner
    for v in range(n):
        if deg[v] < 2:
            continue
        inner = 0
        for w in range(n):
            if A[v * RAWN + w] and deg[w] >= 2:
                inner += 1
        if inner > 2:
            return False
    return True


def raw_slide_count(xs_in, ys_in, ea_in, eb_in):
    cdef int n = len(xs_in)
    cdef int m = len(ea_in)
    cdef long long xs[RAWN]
    cdef long long ys[RAWN]
    cdef int ea[RAWN]
    cdef int eb[RAWN]
    cdef unsigned char A[RAWN * RAWN]
    cdef int deg[RAWN]
    cdef int nb[RAWN]
    cdef int i, j, k, p, x, y, z, a, b, c, d, o, cnt, r, r0, r1, count = 0
    cdef bint blocked
    if n > RAWN or m > RAWN:
        raise ValueError("raw_slide_count supports at most %d points" % RAWN)
    for i in range(n):
        xs[i] = xs_in[i]
        ys[i] = ys_in[i]
        deg[i] = 0
        for j in range(n):
            A[i * RAWN + j] = 0
    for i in range(m):
        ea[i] = ea_in[i]
        eb[i] = eb_in[i]
    for i in range(n):
        for j in range(i + 1, n):
            if xs[i] == xs[j] and ys[i] == ys[j]:
                return -1
            for k in range(j + 1, n):
                if _rorient(xs, ys, i, j, k) == 0:
                    return -1
    cnt = 0
    for i in range(m):
        for j in range(i + 1, m):
            a, b, c, d = ea[i], eb[i], ea[j], eb[j]
            if a != c and a != d and b != c and b != d and _rcross(xs, ys, a, b, c, d):
                cnt += 1
    if cnt:
        return 1000000 + cnt
    for i in range(m):
        A[ea[i] * RAWN + eb[i]] = 1
        A[eb[i] * RAWN + ea[i]] = 1
        deg[ea[i]] += 1
        deg[eb[i]] += 1
    for y in range(n):
        cnt = 0
        for j in range(n):
            if A[y * RAWN + j]:
                nb[cnt] = j
                cnt += 1
        for i in range(cnt):
            x = nb[i]
            for j in range(i + 1, cnt):
                z = nb[j]
                o = _rorient(xs, ys, x, y, z)
                blocked = False
                for p in range(n):
                    if p != x and p != y and p != z and _rorient(xs, ys, x, y, p) == o \
                            and _rorient(xs, ys, y, z, p) == o and _rorient(xs, ys, z, x, p) == o:
                        blocked = True
                        break
                if blocked:
                    continue
                for k in range(m):
                    a, b = ea[k], eb[k]
                    if a != x and a != z and b != x and b != z and _rcross(xs, ys, x, z, a, b):
                        blocked = True
                        break
                if blocked:
                    continue
                for r in range(2):
                    if r == 0:
                        r0, r1 = x, y
                    else:
                        r0, r1 = y, z
                    A[r0 * RAWN + r1] = 0
                    A[r1 * RAWN + r0] = 0
                    deg[r0] -= 1
                    deg[r1] -= 1
                    A[x * RAWN + z] = 1
                    A[z * RAWN + x] = 1
                    deg[x] += 1
                    deg[z] += 1
                    if _rcat_ok(n, A, deg):
                        count += 1
                    A[x * RAWN + z] = 0
                    A[z * RAWN + x] = 0
                    deg[x] -= 1
                    deg[z] -= 1
                    A[r0 * RAWN + r1] = 1
                    A[r1 * RAWN + r0] = 1
                    deg[r0] += 1
                    deg[r1] += 1
    return count


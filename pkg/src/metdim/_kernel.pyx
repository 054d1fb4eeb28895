# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Same surface and results as ``_pykernel``."""

from libc.stdint cimport uint64_t, uint8_t, int64_t
from libc.stdlib cimport malloc, free, qsort
from libc.string cimport memset, memcpy

UNREACHABLE = -1

VARIANT_METRIC = 0
VARIANT_EDGE = 1
VARIANT_MIXED = 2
VARIANT_STRONG = 3

BACKEND = "cython"

cdef enum:
    MAXN = 64
    UNR = 255


cdef inline int popcount(uint64_t x) noexcept nogil:
    return __builtin_popcountll(x)


cdef inline int lowbit(uint64_t x) noexcept nogil:
    return __builtin_ctzll(x)


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef int load_rows(object rows, int n, uint64_t *out) except -1:
    cdef int i
    if n < 0 or n > MAXN:
        raise ValueError("order must be in 0..64")
    for i in range(n):
        out[i] = <uint64_t>rows[i]
    return 0


cdef void c_rows_from_mask(int n, uint64_t mask, uint64_t *rows) noexcept nogil:
    cdef int i, j, k = 0
    for i in range(n):
        rows[i] = 0
    for j in range(1, n):
        for i in range(j):
            if (mask >> k) & 1:
                rows[i] |= (<uint64_t>1) << j
                rows[j] |= (<uint64_t>1) << i
            k += 1


cdef void c_bfs(const uint64_t *rows, int n, uint8_t *dist) noexcept nogil:
    """dist[s*n + v]; UNR where unreachable."""
    cdef int s, v, d
    cdef uint64_t frontier, seen, nxt, f
    memset(dist, UNR, n * n)
    for s in range(n):
        frontier = (<uint64_t>1) << s
        seen = frontier
        d = 0
        while frontier:
            nxt = 0
            f = frontier
            while f:
                v = lowbit(f)
                f &= f - 1
                dist[s * n + v] = <uint8_t>d
                nxt |= rows[v]
            frontier = nxt & ~seen
            seen |= frontier
            d += 1


cdef bint c_connected(const uint64_t *rows, int n) noexcept nogil:
    cdef uint64_t seen, frontier, nxt, f, full
    cdef int v
    if n <= 1:
        return True
    full = (~(<uint64_t>0)) if n == 64 else (((<uint64_t>1) << n) - 1)
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            v = lowbit(f)
            f &= f - 1
            nxt |= rows[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full


def rows_from_mask(int n, mask):
    cdef uint64_t rows[MAXN]
    cdef int i, j
    if n * (n - 1) // 2 <= 64:
        c_rows_from_mask(n, <uint64_t>mask, rows)
        return [rows[i] for i in range(n)]
    # wide masks stay Python ints
    out = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (mask >> k) & 1:
                out[i] |= (<object>1) << j
                out[j] |= (<object>1) << i
            k += 1
    return out


def mask_from_rows(rows, int n):
    cdef int i, j, k = 0
    cdef uint64_t r[MAXN]
    load_rows(rows, n, r)
    out = 0
    for j in range(1, n):
        for i in range(j):
            if (r[i] >> j) & 1:
                out |= (<object>1) << k
            k += 1
    return out


def bfs_rows(rows, int n):
    cdef uint64_t r[MAXN]
    cdef uint8_t dist[MAXN * MAXN]
    cdef int s, v
    load_rows(rows, n, r)
    c_bfs(r, n, dist)
    return [[UNREACHABLE if dist[s * n + v] == UNR else dist[s * n + v]
             for v in range(n)] for s in range(n)]


def connected_rows(rows, int n):
    cdef uint64_t r[MAXN]
    load_rows(rows, n, r)
    return c_connected(r, n)


# -- canonical labeling -------------------------------------------------------

cdef struct Canon:
    int n
    const uint64_t *rows
    int order[MAXN]        # vertices sorted by cell
    int cell_start[MAXN]   # first index into order for the cell at position p
    int cell_end[MAXN]
    int perm[MAXN]
    uint64_t cur[MAXN]
    uint64_t best[MAXN]
    int best_perm[MAXN]
    long updates


cdef int sig_cmp(const int *a, const int *b, int len) noexcept nogil:
    cdef int i
    for i in range(len):
        if a[i] != b[i]:
            return -1 if a[i] < b[i] else 1
    return 0


cdef void c_refine(const uint64_t *rows, int n, int *order, int *cell_of) noexcept nogil:
    """Equitable refinement of the degree partition.

    On return ``order`` lists vertices by cell and ``cell_of[v]`` is the cell
    index of ``v`` (cells numbered in order).
    """
    cdef int sig[MAXN][MAXN + 1]
    cdef uint64_t masks[MAXN]
    cdef int ncell = 0, newcell, i, j, v, c, key_len
    # initial cell = rank of degree
    for v in range(n):
        order[v] = v
        sig[v][0] = popcount(rows[v])
    key_len = 1
    while True:
        # insertion sort of order by sig
        for i in range(1, n):
            v = order[i]
            j = i - 1
            while j >= 0 and (sig_cmp(sig[order[j]], sig[v], key_len) > 0 or
                              (sig_cmp(sig[order[j]], sig[v], key_len) == 0 and order[j] > v)):
                order[j + 1] = order[j]
                j -= 1
            order[j + 1] = v
        newcell = 0
        for i in range(n):
            if i > 0 and sig_cmp(sig[order[i - 1]], sig[order[i]], key_len) != 0:
                newcell += 1
            cell_of[order[i]] = newcell
        newcell += 1
        if key_len > 1 and newcell == ncell:
            break
        ncell = newcell
        for c in range(ncell):
            masks[c] = 0
        for v in range(n):
            masks[cell_of[v]] |= (<uint64_t>1) << v
        for v in range(n):
            sig[v][0] = cell_of[v]
            for c in range(ncell):
                sig[v][c + 1] = popcount(rows[v] & masks[c])
        key_len = ncell + 1


cdef void canon_rec(Canon *st, int j, bint tied, uint64_t used) noexcept nogil:
    cdef int idx, v, i
    cdef uint64_t rc, row
    cdef bint child_tied
    cdef long before
    cdef int n = st.n
    for idx in range(st.cell_start[j], st.cell_end[j]):
        v = st.order[idx]
        if (used >> v) & 1:
            continue
        row = st.rows[v]
        rc = 0
        for i in range(j):
            rc = (rc << 1) | ((row >> st.perm[i]) & 1)
        child_tied = False
        if tied:
            if rc > st.best[j]:
                continue
            child_tied = rc == st.best[j]
        st.perm[j] = v
        st.cur[j] = rc
        if j == n - 1:
            if not child_tied:
                memcpy(st.best, st.cur, n * sizeof(uint64_t))
                memcpy(st.best_perm, st.perm, n * sizeof(int))
                st.updates += 1
                tied = True
            continue
        before = st.updates
        canon_rec(st, j + 1, child_tied, used | ((<uint64_t>1) << v))
        if st.updates != before:
            tied = True


cdef void c_canon(const uint64_t *rows, int n, int *perm_out) noexcept nogil:
    cdef Canon st
    cdef int cell_of[MAXN]
    cdef int i, s, p
    if n <= 1:
        for i in range(n):
            perm_out[i] = i
        return
    st.n = n
    st.rows = rows
    st.updates = 0
    c_refine(rows, n, st.order, cell_of)
    s = 0
    for i in range(1, n + 1):
        if i == n or cell_of[st.order[i]] != cell_of[st.order[i - 1]]:
            for p in range(s, i):
                st.cell_start[p] = s
                st.cell_end[p] = i
            s = i
    canon_rec(&st, 0, False, 0)
    memcpy(perm_out, st.best_perm, n * sizeof(int))


cdef uint64_t c_canon_mask(const uint64_t *rows, int n) noexcept nogil:
    """Canonical edge mask; only valid for n*(n-1)/2 <= 64."""
    cdef int perm[MAXN]
    cdef int i, j, k = 0
    cdef uint64_t rj, mask = 0
    c_canon(rows, n, perm)
    for j in range(1, n):
        rj = rows[perm[j]]
        for i in range(j):
            if (rj >> perm[i]) & 1:
                mask |= (<uint64_t>1) << k
            k += 1
    return mask


def refine_cells(rows, int n):
    cdef uint64_t r[MAXN]
    cdef int order[MAXN]
    cdef int cell_of[MAXN]
    load_rows(rows, n, r)
    if n == 0:
        return []
    c_refine(r, n, order, cell_of)
    cells = [[] for _ in range(cell_of[order[n - 1]] + 1)]
    for v in range(n):
        cells[cell_of[v]].append(v)
    return cells


def canon_perm(rows, int n):
    cdef uint64_t r[MAXN]
    cdef int perm[MAXN]
    load_rows(rows, n, r)
    c_canon(r, n, perm)
    return [perm[i] for i in range(n)]


def canon_mask(rows, int n):
    if n * (n - 1) // 2 > 64:
        raise ValueError("canonical mask needs n <= 11")
    cdef uint64_t r[MAXN]
    load_rows(rows, n, r)
    return c_canon_mask(r, n)


def scan_range(int n, lo, hi, bint dedup):
    cdef uint64_t rows[MAXN]
    cdef uint64_t mask, start = <uint64_t>lo, stop = <uint64_t>hi
    cdef int64_t connected = 0
    if n * (n - 1) // 2 > 63:
        raise ValueError("scan needs n <= 11")
    seen = set()
    out = []
    mask = start
    while mask < stop:
        c_rows_from_mask(n, mask, rows)
        if c_connected(rows, n):
            connected += 1
            if dedup:
                seen.add(c_canon_mask(rows, n))
            else:
                out.append(mask)
        mask += 1
    if dedup:
        out = sorted(seen)
    return connected, out


# -- resolver masks and exact search -----------------------------------------

cdef int cmp_u64_pop(const void *a, const void *b) noexcept nogil:
    cdef uint64_t x = (<const uint64_t *>a)[0]
    cdef uint64_t y = (<const uint64_t *>b)[0]
    cdef int px = popcount(x), py = popcount(y)
    if px != py:
        return -1 if px < py else 1
    if x != y:
        return -1 if x < y else 1
    return 0


cdef int64_t minimal_masks(uint64_t *m, int64_t cnt) noexcept nogil:
    """Sort, dedup and drop supersets in place; returns the new count."""
    cdef int64_t i, j, w = 0
    cdef bint dominated
    if cnt == 0:
        return 0
    qsort(m, cnt, sizeof(uint64_t), cmp_u64_pop)
    for i in range(cnt):
        if w > 0 and m[w - 1] == m[i]:
            continue
        dominated = False
        for j in range(w):
            if m[j] & m[i] == m[j]:
                dominated = True
                break
        if not dominated:
            m[w] = m[i]
            w += 1
    return w


cdef int64_t c_pair_masks(const uint64_t *rows, int n, int variant, uint64_t **out) except -2:
    cdef uint8_t dist[MAXN * MAXN]
    cdef int u, v, w, a, b, nitems, x, y
    cdef int64_t cnt = 0, cap
    cdef uint64_t m, nb
    cdef uint8_t *vecs
    cdef uint8_t *vx
    cdef uint8_t *vy
    cdef uint64_t *buf
    cdef int duv, da, db
    c_bfs(rows, n, dist)
    if variant == 3:
        cap = <int64_t>n * (n - 1) // 2 + 1
        buf = <uint64_t *>malloc(cap * sizeof(uint64_t))
        if buf == NULL:
            raise MemoryError()
        for u in range(n):
            for v in range(u + 1, n):
                duv = dist[u * n + v]
                m = 0
                for w in range(n):
                    if dist[v * n + w] == duv + dist[u * n + w] or dist[u * n + w] == duv + dist[v * n + w]:
                        m |= (<uint64_t>1) << w
                buf[cnt] = m
                cnt += 1
    else:
        nitems = 0
        if variant == 0 or variant == 2:
            nitems += n
        if variant == 1 or variant == 2:
            for a in range(n):
                nitems += popcount(rows[a] >> a >> 1)
        vecs = <uint8_t *>malloc((nitems + 1) * n)
        if vecs == NULL:
            raise MemoryError()
        x = 0
        if variant == 0 or variant == 2:
            memcpy(vecs, dist, n * n)
            x = n
        if variant == 1 or variant == 2:
            for a in range(n):
                nb = (rows[a] >> a >> 1) << a << 1
                while nb:
                    b = lowbit(nb)
                    nb &= nb - 1
                    for w in range(n):
                        da = dist[a * n + w]
                        db = dist[b * n + w]
                        vecs[x * n + w] = <uint8_t>(da if da < db else db)
                    x += 1
        cap = <int64_t>nitems * (nitems - 1) // 2 + 1
        buf = <uint64_t *>malloc(cap * sizeof(uint64_t))
        if buf == NULL:
            free(vecs)
            raise MemoryError()
        for x in range(nitems):
            vx = vecs + x * n
            for y in range(x + 1, nitems):
                vy = vecs + y * n
                m = 0
                for w in range(n):
                    if vx[w] != vy[w]:
                        m |= (<uint64_t>1) << w
                buf[cnt] = m
                cnt += 1
        free(vecs)
    cnt = minimal_masks(buf, cnt)
    out[0] = buf
    return cnt


cdef int c_hitting(const uint64_t *masks, int64_t cnt, int n, int lower, uint64_t *basis) noexcept nogil:
    cdef int k, i, top
    cdef int idx[MAXN + 1]
    cdef uint64_t acc[MAXN + 1]
    cdef int64_t t
    cdef bint ok
    for t in range(cnt):
        if masks[t] == 0:
            return -1
    if lower < 0:
        lower = 0
    for k in range(lower, n + 1):
        # combinations of size k in lexicographic order; acc[i] = union of idx[0..i-1]
        for i in range(k):
            idx[i] = i
        acc[0] = 0
        for i in range(k):
            acc[i + 1] = acc[i] | ((<uint64_t>1) << idx[i])
        while True:
            ok = True
            for t in range(cnt):
                if masks[t] & acc[k] == 0:
                    ok = False
                    break
            if ok:
                basis[0] = acc[k]
                return k
            # advance
            top = k - 1
            while top >= 0 and idx[top] == n - k + top:
                top -= 1
            if top < 0:
                break
            idx[top] += 1
            for i in range(top + 1, k):
                idx[i] = idx[i - 1] + 1
            for i in range(top, k):
                acc[i + 1] = acc[i] | ((<uint64_t>1) << idx[i])
    return -1


def pair_masks(rows, int n, int variant):
    cdef uint64_t r[MAXN]
    cdef uint64_t *buf = NULL
    cdef int64_t cnt, i
    load_rows(rows, n, r)
    cnt = c_pair_masks(r, n, variant, &buf)
    try:
        return [buf[i] for i in range(cnt)]
    finally:
        free(buf)


def min_hitting_set(masks, int n, int lower):
    cdef int64_t cnt = len(masks), i
    cdef uint64_t *buf = <uint64_t *>malloc((cnt + 1) * sizeof(uint64_t))
    cdef uint64_t basis = 0
    cdef int k
    if buf == NULL:
        raise MemoryError()
    try:
        for i in range(cnt):
            buf[i] = <uint64_t>masks[i]
        k = c_hitting(buf, cnt, n, lower, &basis)
    finally:
        free(buf)
    if k < 0:
        return -1, 0
    return k, basis


def solve_rows(rows, int n, int variant, int lower):
    cdef uint64_t r[MAXN]
    cdef uint64_t *buf = NULL
    cdef uint64_t basis = 0
    cdef int64_t cnt
    cdef int k
    load_rows(rows, n, r)
    cnt = c_pair_masks(r, n, variant, &buf)
    try:
        with nogil:
            k = c_hitting(buf, cnt, n, lower, &basis)
    finally:
        free(buf)
    if k < 0:
        return -1, 0
    return k, basis


# -- mutually maximally distant pairs and vertex cover ------------------------

def mmd_rows(rows, int n):
    cdef uint64_t r[MAXN]
    cdef uint8_t dist[MAXN * MAXN]
    cdef uint64_t out[MAXN]
    cdef uint64_t f
    cdef int u, v, w, duv
    cdef bint ok
    load_rows(rows, n, r)
    c_bfs(r, n, dist)
    for u in range(n):
        out[u] = 0
    for u in range(n):
        for v in range(u + 1, n):
            duv = dist[u * n + v]
            ok = True
            f = r[u]
            while f and ok:
                w = lowbit(f)
                f &= f - 1
                if dist[w * n + v] > duv:
                    ok = False
            f = r[v]
            while f and ok:
                w = lowbit(f)
                f &= f - 1
                if dist[u * n + w] > duv:
                    ok = False
            if ok:
                out[u] |= (<uint64_t>1) << v
                out[v] |= (<uint64_t>1) << u
    return [out[u] for u in range(n)]


cdef void vc_rec(const uint64_t *adj, uint64_t alive, int size, uint64_t chosen,
                 int *best, uint64_t *best_set) noexcept nogil:
    cdef int v, d, v_best = -1, d_best = 0, edges2 = 0, need
    cdef uint64_t f, nb
    if size >= best[0]:
        return
    f = alive
    while f:
        v = lowbit(f)
        f &= f - 1
        d = popcount(adj[v] & alive)
        edges2 += d
        if d > d_best:
            v_best = v
            d_best = d
    if d_best == 0:
        best[0] = size
        best_set[0] = chosen
        return
    need = (edges2 // 2 + d_best - 1) // d_best
    if size + need >= best[0]:
        return
    nb = adj[v_best] & alive
    vc_rec(adj, alive & ~((<uint64_t>1) << v_best), size + 1,
           chosen | ((<uint64_t>1) << v_best), best, best_set)
    vc_rec(adj, alive & ~nb & ~((<uint64_t>1) << v_best), size + popcount(nb),
           chosen | nb, best, best_set)


def vertex_cover_rows(rows, int n):
    cdef uint64_t r[MAXN]
    cdef int best = n + 1
    cdef uint64_t best_set = 0
    cdef uint64_t alive
    load_rows(rows, n, r)
    alive = (~(<uint64_t>0)) if n == 64 else (((<uint64_t>1) << n) - 1)
    vc_rec(r, alive, 0, 0, &best, &best_set)
    return best, best_set

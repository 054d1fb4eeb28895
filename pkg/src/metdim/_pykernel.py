"""Pure-Python kernels.

Mirrors the compiled ``_kernel`` extension function for function. Graphs are
passed as a sequence of ``n`` adjacency rows (ints used as bitsets); vertex
subsets are ints as well.
"""

from itertools import combinations

UNREACHABLE = -1

VARIANT_METRIC = 0
VARIANT_EDGE = 1
VARIANT_MIXED = 2
VARIANT_STRONG = 3

BACKEND = "python"


def _bits(x):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def pair_index(n):
    """(i, j) vertex pairs in graph6 bit order: (0,1), (0,2), (1,2), (0,3), ..."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def rows_from_mask(n, mask):
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if mask >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return rows


def mask_from_rows(rows, n):
    mask = 0
    k = 0
    for j in range(1, n):
        for i in range(j):
            if rows[i] >> j & 1:
                mask |= 1 << k
            k += 1
    return mask


def bfs_rows(rows, n):
    out = []
    for s in range(n):
        dist = [UNREACHABLE] * n
        frontier = seen = 1 << s
        d = 0
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                dist[v] = d
                nxt |= rows[v]
            frontier = nxt & ~seen
            seen |= frontier
            d += 1
        out.append(dist)
    return out


def connected_rows(rows, n):
    if n <= 1:
        return True
    seen = frontier = 1
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= rows[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << n) - 1


# -- canonical labeling -------------------------------------------------------

def refine_cells(rows, n):
    """Ordered equitable partition, starting from the degree partition."""
    degs = [bin(r).count("1") for r in rows]
    keys = sorted(set(degs))
    cell = [keys.index(d) for d in degs]
    ncell = len(keys)
    while True:
        masks = [0] * ncell
        for v in range(n):
            masks[cell[v]] |= 1 << v
        sig = [
            (cell[v],) + tuple(bin(rows[v] & m).count("1") for m in masks)
            for v in range(n)
        ]
        keys = sorted(set(sig))
        if len(keys) == ncell:
            break
        rank = {s: i for i, s in enumerate(keys)}
        cell = [rank[s] for s in sig]
        ncell = len(keys)
    cells = [[] for _ in range(ncell)]
    for v in range(n):
        cells[cell[v]].append(v)
    return cells


def canon_perm(rows, n):
    """Vertex order giving the lexicographically least graph6 bitstring.

    ``perm[p]`` is the original vertex placed at position ``p``. The minimum
    is taken over orders compatible with ``refine_cells``.
    """
    if n <= 1:
        return list(range(n))
    cells = refine_cells(rows, n)
    pos_cell = []
    for ci, c in enumerate(cells):
        pos_cell.extend([ci] * len(c))
    perm = [0] * n
    cur = [0] * n
    best = [0] * n
    best_perm = []
    state = {"have": False, "updates": 0}

    def rec(j, tied, used):
        for v in cells[pos_cell[j]]:
            if used >> v & 1:
                continue
            row = rows[v]
            rc = 0
            for i in range(j):
                rc = (rc << 1) | (row >> perm[i] & 1)
            child_tied = False
            if tied:
                if rc > best[j]:
                    continue
                child_tied = rc == best[j]
            perm[j] = v
            cur[j] = rc
            if j == n - 1:
                if not child_tied:
                    best[:] = cur
                    best_perm[:] = perm
                    state["have"] = True
                    state["updates"] += 1
                    tied = True
                continue
            before = state["updates"]
            rec(j + 1, child_tied, used | (1 << v))
            if state["updates"] != before:
                tied = True

    # nothing to compare against until the first leaf
    rec(0, False, 0)
    return best_perm


def canon_mask(rows, n):
    perm = canon_perm(rows, n)
    mask = 0
    k = 0
    for j in range(1, n):
        rj = rows[perm[j]]
        for i in range(j):
            if rj >> perm[i] & 1:
                mask |= 1 << k
            k += 1
    return mask


def scan_range(n, lo, hi, dedup):
    """Scan edge masks ``lo <= mask < hi`` of order ``n``.

    Returns ``(connected_count, items)``; ``items`` is the sorted list of
    distinct canonical masks when ``dedup`` is set, else the connected masks.
    """
    connected = 0
    seen = set()
    out = []
    for mask in range(lo, hi):
        rows = rows_from_mask(n, mask)
        if not connected_rows(rows, n):
            continue
        connected += 1
        if dedup:
            seen.add(canon_mask(rows, n))
        else:
            out.append(mask)
    if dedup:
        out = sorted(seen)
    return connected, out


# -- resolver masks and exact search -----------------------------------------

def pair_masks(rows, n, variant):
    """For every pair of items, the set of vertices resolving it.

    A vertex set resolves all items (in the variant's sense) iff it meets
    every returned mask. Duplicates and supersets are dropped.
    """
    dist = bfs_rows(rows, n)
    if variant == VARIANT_STRONG:
        raw = []
        for u in range(n):
            du = dist[u]
            for v in range(u + 1, n):
                dv = dist[v]
                duv = du[v]
                m = 0
                for w in range(n):
                    if dv[w] == duv + du[w] or du[w] == duv + dv[w]:
                        m |= 1 << w
                raw.append(m)
    else:
        vecs = []
        if variant in (VARIANT_METRIC, VARIANT_MIXED):
            vecs.extend(dist)
        if variant in (VARIANT_EDGE, VARIANT_MIXED):
            for a in range(n):
                for b in _bits(rows[a] >> (a + 1) << (a + 1)):
                    da, db = dist[a], dist[b]
                    vecs.append([min(da[w], db[w]) for w in range(n)])
        raw = []
        for x in range(len(vecs)):
            vx = vecs[x]
            for y in range(x + 1, len(vecs)):
                vy = vecs[y]
                m = 0
                for w in range(n):
                    if vx[w] != vy[w]:
                        m |= 1 << w
                raw.append(m)
    return _minimal_masks(raw)


def _minimal_masks(raw):
    uniq = sorted(set(raw), key=lambda m: (bin(m).count("1"), m))
    kept = []
    for m in uniq:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


def min_hitting_set(masks, n, lower):
    """Smallest vertex set meeting every mask, cardinality >= ``lower``.

    Cardinalities ascend and subsets of each size are visited in
    lexicographic order; returns ``(size, subset_mask)`` or ``(-1, 0)``.
    """
    if 0 in masks:
        return -1, 0
    for k in range(max(lower, 0), n + 1):
        for combo in combinations(range(n), k):
            s = 0
            for v in combo:
                s |= 1 << v
            for m in masks:
                if not m & s:
                    break
            else:
                return k, s
    return -1, 0


def solve_rows(rows, n, variant, lower):
    return min_hitting_set(pair_masks(rows, n, variant), n, lower)


# -- mutually maximally distant pairs and vertex cover ------------------------

def mmd_rows(rows, n):
    dist = bfs_rows(rows, n)
    out = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            duv = dist[u][v]
            if all(dist[w][v] <= duv for w in _bits(rows[u])) and all(
                dist[u][w] <= duv for w in _bits(rows[v])
            ):
                out[u] |= 1 << v
                out[v] |= 1 << u
    return out


def vertex_cover_rows(rows, n):
    """Exact minimum vertex cover by branch and bound. Returns (size, mask)."""
    best = [n + 1, 0]

    def rec(alive, adj, size, chosen):
        if size >= best[0]:
            return
        v_best, d_best = -1, 0
        edges2 = 0
        for v in _bits(alive):
            d = bin(adj[v] & alive).count("1")
            edges2 += d
            if d > d_best:
                v_best, d_best = v, d
        if d_best == 0:
            best[0], best[1] = size, chosen
            return
        # each cover vertex covers at most d_best edges
        need = -(-(edges2 // 2) // d_best)
        if size + need >= best[0]:
            return
        nb = adj[v_best] & alive
        rec(alive & ~(1 << v_best), adj, size + 1, chosen | (1 << v_best))
        rec(alive & ~nb & ~(1 << v_best), adj, size + bin(nb).count("1"), chosen | nb)

    rec((1 << n) - 1, list(rows), 0, 0)
    return best[0], best[1]

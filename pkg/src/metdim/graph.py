"""Graph representation, hop distances, degree statistics, canonical codes
and graph6 serialization.

Vertices are ``0..n-1``. Adjacency rows are ints used as bitsets, so a graph
and any vertex subset fit in one machine word for ``n <= 64``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from ._backend import kernel

MAX_ORDER = 64

#: Distance between vertices in different components.
INF = math.inf


class Graph6Error(ValueError):
    """Malformed or oversized graph6 text."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_ORDER:
            raise ValueError(f"order {self.n} outside 0..{MAX_ORDER}")
        if len(self.adj) != self.n:
            raise ValueError("need one adjacency row per vertex")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {i} names a vertex outside the graph")
            if row >> i & 1:
                raise ValueError(f"loop at vertex {i}")
            for j in _bits(row):
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"asymmetric adjacency between {i} and {j}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "Graph":
        """Graph whose edge ``(i, j)`` is bit ``j*(j-1)/2 + i`` of ``mask``."""
        return cls(n, tuple(kernel.rows_from_mask(n, mask)))

    @property
    def mask(self) -> int:
        return kernel.mask_from_rows(self.adj, self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list["Edge"]:
        """Edges sorted by ``(u, v)`` with ``u < v``."""
        return [Edge(u, v) for u in range(self.n) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def size(self) -> int:
        return sum(r.bit_count() for r in self.adj) // 2

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph in which new vertex ``p`` is old vertex ``perm[p]``."""
        pos = {v: p for p, v in enumerate(perm)}
        return Graph.from_edges(self.n, ((pos[e.u], pos[e.v]) for e in self.edges()))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={[(e.u, e.v) for e in self.edges()]})"


@dataclass(frozen=True, order=True)
class Edge:
    u: int
    v: int

    def __post_init__(self):
        if self.u >= self.v:
            raise ValueError("edge endpoints must satisfy u < v")

    @classmethod
    def of(cls, a: int, b: int) -> "Edge":
        return cls(min(a, b), max(a, b))


@dataclass(frozen=True)
class DistMatrix:
    """All-pairs hop counts; ``INF`` marks unreachable pairs."""

    n: int
    d: tuple[tuple[float, ...], ...]

    def __call__(self, u: int, v: int):
        return self.d[u][v]

    @property
    def diameter(self):
        return max((max(r) for r in self.d), default=0)


@dataclass(frozen=True)
class DegreeStats:
    max_degree: int
    min_degree: int
    leaf_count: int
    is_tree: bool


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def bfs_distances(g: Graph) -> DistMatrix:
    raw = kernel.bfs_rows(g.adj, g.n)
    return DistMatrix(
        g.n, tuple(tuple(INF if x == kernel.UNREACHABLE else x for x in row) for row in raw)
    )


def is_connected(g: Graph) -> bool:
    return g.n >= 1 and kernel.connected_rows(g.adj, g.n)


def edge_vertex_distance(dm: DistMatrix, e: Edge, w: int):
    """Distance from edge ``uv`` to vertex ``w``: the nearer endpoint."""
    return min(dm.d[e.u][w], dm.d[e.v][w])


def degree_stats(g: Graph) -> DegreeStats:
    degs = [r.bit_count() for r in g.adj]
    return DegreeStats(
        max_degree=max(degs, default=0),
        min_degree=min(degs, default=0),
        leaf_count=sum(1 for d in degs if d == 1),
        is_tree=is_connected(g) and g.size == g.n - 1,
    )


def is_path(g: Graph) -> bool:
    """True for ``P_n`` (including ``P_1``)."""
    if not is_connected(g):
        return False
    degs = sorted(r.bit_count() for r in g.adj)
    if g.n <= 2:
        return True
    return g.size == g.n - 1 and degs[-1] <= 2


# -- canonical form -----------------------------------------------------------

def canonical_labeling(g: Graph) -> list[int]:
    """Order of the original vertices giving the canonical form."""
    return kernel.canon_perm(g.adj, g.n)


def canonical_form(g: Graph) -> Graph:
    return g.relabel(canonical_labeling(g))


def canonical_code(g: Graph) -> bytes:
    """graph6 bytes of the canonical form; equal iff the graphs are isomorphic.

    The canonical form has the lexicographically least graph6 bitstring among
    vertex orders compatible with the equitable refinement of the degree
    partition.
    """
    return graph6_encode(canonical_form(g)).encode("ascii")


# -- graph6 -------------------------------------------------------------------

def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise Graph6Error(f"order {n} too large for graph6")


def graph6_encode(g: Graph) -> str:
    """Header-less graph6 text for ``g``."""
    out = [_encode_order(g.n)]
    acc = nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def graph6_decode(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii")
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string")
    vals = [ord(c) - 63 for c in s]
    if any(not 0 <= x <= 63 for x in vals):
        raise Graph6Error(f"character outside graph6 range in {text!r}")
    if vals[0] != 63:
        n, body = vals[0], vals[1:]
    elif len(vals) >= 4 and vals[1] != 63:
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    else:
        raise Graph6Error("orders above 258047 are not supported")
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds the {MAX_ORDER}-vertex limit")
    nbits = n * (n - 1) // 2
    if len(body) != -(-nbits // 6):
        raise Graph6Error(f"expected {-(-nbits // 6)} data bytes for order {n}, got {len(body)}")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if nbits % 6 and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6Error("nonzero padding bits")
    return Graph(n, tuple(rows))

"""Resolving-set checkers and exact solvers for the metric, edge, mixed and
strong metric dimensions.

The checkers compare metric vectors directly. The solver reduces each
variant to a hitting-set problem: for every pair of items it records the
vertices that tell them apart, and a vertex set resolves everything iff it
meets every such mask. Subsets are tried by ascending size, lexicographically
within a size, so the reported basis is deterministic.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Sequence, Union

from ._backend import kernel
from .checks import Check
from .graph import (
    DistMatrix,
    Edge,
    Graph,
    bfs_distances,
    degree_stats,
    edge_vertex_distance,
    is_connected,
    is_path,
)

DEFAULT_SOLVER_CAP = 16


class Variant(str, enum.Enum):
    METRIC = "metric"
    EDGE = "edge"
    MIXED = "mixed"
    STRONG = "strong"

    @property
    def code(self) -> int:
        return _VARIANT_CODES[self]

    @property
    def symbol(self) -> str:
        return {"metric": "beta", "edge": "beta_E", "mixed": "beta_M", "strong": "beta_S"}[self.value]


_VARIANT_CODES = {
    Variant.METRIC: kernel.VARIANT_METRIC,
    Variant.EDGE: kernel.VARIANT_EDGE,
    Variant.MIXED: kernel.VARIANT_MIXED,
    Variant.STRONG: kernel.VARIANT_STRONG,
}


class SolverError(ValueError):
    pass


class DisconnectedGraphError(SolverError):
    pass


class SolverCapError(SolverError):
    pass


@dataclass(frozen=True, order=True)
class Vertex:
    index: int


Item = Union[Vertex, Edge]


def vlabel(v: int) -> str:
    """1-based ``v<i>`` label used in reports."""
    return f"v{v + 1}"


def parse_vlabel(s: str) -> int:
    if not s.startswith("v"):
        raise ValueError(f"bad vertex label {s!r}")
    return int(s[1:]) - 1


@dataclass(frozen=True)
class MmdGraph:
    """Mutually maximally distant pairs, as edges of an auxiliary graph."""

    n: int
    pairs: tuple[tuple[int, int], ...]

    @property
    def rows(self) -> tuple[int, ...]:
        rows = [0] * self.n
        for u, v in self.pairs:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return tuple(rows)

    def __contains__(self, pair) -> bool:
        u, v = pair
        return (min(u, v), max(u, v)) in self.pairs


@dataclass(frozen=True)
class Certificate:
    variant: Variant
    value: int
    basis: tuple[int, ...]
    lower_bound: int | None = None
    lower_bound_witness: MmdGraph | None = field(default=None, compare=True)

    def to_dict(self, include_basis: bool = True) -> dict:
        out = {"invariant": self.variant.value, "value": self.value}
        if include_basis:
            out["basis"] = [vlabel(v) for v in self.basis]
        if self.lower_bound is not None:
            out["lower_bound"] = self.lower_bound
        if self.lower_bound_witness is not None:
            out["order"] = self.lower_bound_witness.n
            out["mmd_pairs"] = [[vlabel(u), vlabel(v)] for u, v in self.lower_bound_witness.pairs]
        return out

    @classmethod
    def from_dict(cls, d: Mapping) -> "Certificate":
        witness = None
        if "mmd_pairs" in d:
            witness = MmdGraph(
                d["order"], tuple((parse_vlabel(a), parse_vlabel(b)) for a, b in d["mmd_pairs"])
            )
        return cls(
            Variant(d["invariant"]),
            d["value"],
            tuple(parse_vlabel(v) for v in d.get("basis", [])),
            d.get("lower_bound"),
            witness,
        )


def solver_cap() -> int:
    raw = os.environ.get("METDIM_SOLVER_CAP")
    return int(raw) if raw else DEFAULT_SOLVER_CAP


# -- vectors and checkers -----------------------------------------------------

def metric_vector(dm: DistMatrix, landmarks: Sequence[int], item: Item) -> tuple:
    """Distances from ``item`` to each landmark, in landmark order."""
    if isinstance(item, Edge):
        return tuple(edge_vertex_distance(dm, item, w) for w in landmarks)
    return tuple(dm.d[item.index][w] for w in landmarks)


def _all_distinct(vectors: Iterable[tuple]) -> bool:
    seen = set()
    for vec in vectors:
        if vec in seen:
            return False
        seen.add(vec)
    return True


def is_resolving_set(dm: DistMatrix, S: Iterable[int]) -> bool:
    S = list(S)
    return _all_distinct(metric_vector(dm, S, Vertex(v)) for v in range(dm.n))


def is_edge_resolving_set(dm: DistMatrix, edges: Sequence[Edge], S: Iterable[int]) -> bool:
    S = list(S)
    return _all_distinct(metric_vector(dm, S, e) for e in edges)


def is_mixed_resolving_set(dm: DistMatrix, edges: Sequence[Edge], S: Iterable[int]) -> bool:
    S = list(S)
    items = [Vertex(v) for v in range(dm.n)] + list(edges)
    return _all_distinct(metric_vector(dm, S, it) for it in items)


def is_strong_resolving_set(dm: DistMatrix, S: Iterable[int]) -> bool:
    # w strongly resolves u, v when one of them lies on a shortest path from
    # the other to w; only pairs outside S need resolving
    S = set(S)
    d = dm.d
    outside = [v for v in range(dm.n) if v not in S]
    for u, v in combinations(outside, 2):
        duv = d[u][v]
        if not any(d[v][w] == duv + d[u][w] or d[u][w] == duv + d[v][w] for w in S):
            return False
    return True


def check_basis(g: Graph, variant: Variant, S: Iterable[int], dm: DistMatrix | None = None) -> bool:
    """Run the checker for ``variant`` on ``S``."""
    dm = dm or bfs_distances(g)
    variant = Variant(variant)
    if variant is Variant.METRIC:
        return is_resolving_set(dm, S)
    if variant is Variant.EDGE:
        return is_edge_resolving_set(dm, g.edges(), S)
    if variant is Variant.MIXED:
        return is_mixed_resolving_set(dm, g.edges(), S)
    return is_strong_resolving_set(dm, S)


# -- mutually maximally distant pairs ----------------------------------------

def mmd_pairs(dm: DistMatrix, g: Graph) -> MmdGraph:
    d = dm.d
    pairs = []
    for u, v in combinations(range(g.n), 2):
        duv = d[u][v]
        if all(d[w][v] <= duv for w in g.neighbors(u)) and all(
            d[u][w] <= duv for w in g.neighbors(v)
        ):
            pairs.append((u, v))
    return MmdGraph(g.n, tuple(pairs))


def strong_lower_bound(mmd: MmdGraph) -> int:
    """Minimum vertex cover of the MMD graph.

    Every strong resolving set contains an endpoint of each MMD pair.
    """
    size, _ = kernel.vertex_cover_rows(mmd.rows, mmd.n)
    return size


# -- exact solver -------------------------------------------------------------

def _ceil_log2(x: int) -> int:
    return (x - 1).bit_length() if x > 0 else 0


def edge_lower_bound(g: Graph) -> int:
    """Degree bounds on the edge metric dimension: ceil(log2 max_deg) and
    1 + ceil(log2 min_deg)."""
    st = degree_stats(g)
    return max(1, _ceil_log2(st.max_degree), 1 + _ceil_log2(st.min_degree))


def _require_solvable(g: Graph, variant: Variant, cap: int | None) -> None:
    cap = solver_cap() if cap is None else cap
    if g.n > cap:
        raise SolverCapError(f"order {g.n} exceeds solver cap {cap}")
    if not is_connected(g):
        raise DisconnectedGraphError("graph is not connected")
    if variant in (Variant.EDGE, Variant.MIXED) and g.size == 0:
        raise SolverError(f"{variant.value} dimension needs at least one edge")


def solve(
    g: Graph,
    variant: Variant | str,
    *,
    cap: int | None = None,
    metric_value: int | None = None,
) -> Certificate:
    """Exact minimum-cardinality basis for ``variant``.

    ``metric_value``, when already known, seeds the strong search (a strong
    resolving set is also a resolving set).
    """
    variant = Variant(variant)
    _require_solvable(g, variant, cap)
    lb = witness = None
    if variant is Variant.METRIC:
        lower = 1
    elif variant is Variant.EDGE:
        lower = edge_lower_bound(g)
    elif variant is Variant.MIXED:
        lower = max(2, edge_lower_bound(g))
    else:
        witness = mmd_pairs(bfs_distances(g), g)
        lb = strong_lower_bound(witness)
        lower = max(1, lb, metric_value or 0)
    value, mask = kernel.solve_rows(g.adj, g.n, variant.code, min(lower, g.n))
    if value < 0:
        raise SolverError(f"no {variant.value} resolving set found")
    basis = tuple(v for v in range(g.n) if mask >> v & 1)
    return Certificate(variant, value, basis, lb, witness)


def solve_all(g: Graph, *, cap: int | None = None) -> dict[Variant, Certificate]:
    out = {Variant.METRIC: solve(g, Variant.METRIC, cap=cap)}
    out[Variant.EDGE] = solve(g, Variant.EDGE, cap=cap)
    out[Variant.MIXED] = solve(g, Variant.MIXED, cap=cap)
    out[Variant.STRONG] = solve(
        g, Variant.STRONG, cap=cap, metric_value=out[Variant.METRIC].value
    )
    return out


def reference_solve(g: Graph, variant: Variant | str) -> tuple[int, tuple[int, ...]]:
    """Naive exact solver: every subset by size, checked with the vector
    checkers. No lower bounds, no mask reduction."""
    variant = Variant(variant)
    dm = bfs_distances(g)
    for k in range(1, g.n + 1):
        for S in combinations(range(g.n), k):
            if check_basis(g, variant, S, dm):
                return k, S
    raise SolverError("no resolving set")


# -- bound properties ---------------------------------------------------------

BOUND_ANCHORS = {
    "strong_ge_metric": "beta_S(G) >= beta(G)",
    "mixed_ge_max": "beta_M(G) >= max(beta(G), beta_E(G))",
    "edge_range": "1 <= beta_E(G) <= n-1",
    "mixed_range": "2 <= beta_M(G) <= n",
    "mixed_two_iff_path": "beta_M(G) = 2 iff G is a path",
    "edge_ge_log_maxdeg": "beta_E(G) >= ceil(log2 Delta(G))",
    "edge_ge_log_mindeg": "beta_E(G) >= 1 + ceil(log2 delta(G))",
    "tree_mixed_leaves": "tree T: beta_M(T) = l(T)",
    "strong_ge_mmd_cover": "beta_S(G) >= min vertex cover of MMD pairs",
    "basis_valid": "reported basis passes its checker",
}


def bound_suite(g: Graph, certs: Mapping[Variant, Certificate]) -> list[Check]:
    """Evaluate the bound properties on one graph (order >= 2)."""
    b = certs[Variant.METRIC].value
    be = certs[Variant.EDGE].value
    bm = certs[Variant.MIXED].value
    bs = certs[Variant.STRONG]
    n = g.n
    st = degree_stats(g)
    path = is_path(g)
    dm = bfs_distances(g)

    def chk(name, ok, detail):
        return Check(name, bool(ok), detail, BOUND_ANCHORS[name])

    out = [
        chk("strong_ge_metric", bs.value >= b, f"beta_S={bs.value}, beta={b}"),
        chk("mixed_ge_max", bm >= max(b, be), f"beta_M={bm}, beta={b}, beta_E={be}"),
        chk("edge_range", 1 <= be <= n - 1, f"beta_E={be}, n={n}"),
        chk("mixed_range", 2 <= bm <= n, f"beta_M={bm}, n={n}"),
        chk("mixed_two_iff_path", (bm == 2) == path, f"beta_M={bm}, path={path}"),
        chk(
            "edge_ge_log_maxdeg",
            be >= _ceil_log2(st.max_degree),
            f"beta_E={be}, max_degree={st.max_degree}",
        ),
        chk(
            "edge_ge_log_mindeg",
            be >= 1 + _ceil_log2(st.min_degree),
            f"beta_E={be}, min_degree={st.min_degree}",
        ),
    ]
    if st.is_tree:
        out.append(chk("tree_mixed_leaves", bm == st.leaf_count, f"beta_M={bm}, leaves={st.leaf_count}"))
    if bs.lower_bound is not None:
        out.append(
            chk("strong_ge_mmd_cover", bs.value >= bs.lower_bound, f"beta_S={bs.value}, cover={bs.lower_bound}")
        )
    bad = [
        v.value
        for v, c in certs.items()
        if len(c.basis) != c.value or not check_basis(g, v, c.basis, dm)
    ]
    out.append(chk("basis_valid", not bad, f"failing: {bad}" if bad else "all four"))
    return out

"""Verification suites: each returns a list of named checks."""

from __future__ import annotations

from collections import Counter

from .checks import Check
from .enumeration import DiffSpec, bracket_theorems, enumerate_connected, max_diff
from .families import (
    SMALL_STRONG_MIXED,
    complete_bipartite,
    cycle_expected,
    cycle_graph,
    hprime,
    hprime_coords,
    hprime_expected,
    hprime_items,
    hprime_landmarks,
    kbip_expected,
    path_expected,
    path_graph,
    tprime,
    tprime_edge_coords,
    tprime_edges,
    tprime_expected,
    tprime_landmarks,
)
from .graph import Edge, bfs_distances, graph6_encode, is_path
from .metrics import BOUND_ANCHORS, Variant, Vertex, bound_suite, metric_vector, solve, solve_all

SUITES = ("table1", "bounds", "formulas", "families", "brackets")
DEFAULT_MAX_N = {"table1": 6, "bounds": 6, "formulas": 40, "families": 12, "brackets": 7}


def run_suite(name: str, max_n: int | None = None, **kwargs) -> list[Check]:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    max_n = DEFAULT_MAX_N[name] if max_n is None else max_n
    return globals()[f"suite_{name}"](max_n, **kwargs)


def suite_table1(max_n: int = 6, **search_kw) -> list[Check]:
    out = []
    for n in range(3, min(max_n, 6) + 1):
        s_exp, m_exp, d_exp = SMALL_STRONG_MIXED[n]
        r = max_diff(DiffSpec(Variant.STRONG, Variant.MIXED, n), **search_kw)
        g = hprime(n)
        s = solve(g, Variant.STRONG).value
        m = solve(g, Variant.MIXED).value
        out.append(Check(
            f"table1 n={n}",
            (r.value, s, m) == (d_exp, s_exp, m_exp),
            f"(beta_S-beta_M)({n})={r.value} [want {d_exp}], beta_S(H'_{n})={s} [want {s_exp}], "
            f"beta_M(H'_{n})={m} [want {m_exp}]",
            f"n={n}: (beta_S - beta_M)(n) = {d_exp}, beta_S(H'_n) = {s_exp}, beta_M(H'_n) = {m_exp}",
        ))
    return out


def suite_bounds(max_n: int = 6, labeled: bool = False) -> list[Check]:
    """Bound properties over every connected graph of order 2..max_n."""
    evaluated: Counter = Counter()
    failures: dict[str, list[str]] = {}
    paths = mixed_two = graphs = 0
    for n in range(2, max_n + 1):
        for g in enumerate_connected(n, dedup=not labeled, cap=max(max_n, 7)):
            graphs += 1
            certs = solve_all(g)
            for c in bound_suite(g, certs):
                evaluated[c.name] += 1
                if not c.passed:
                    failures.setdefault(c.name, []).append(f"{graph6_encode(g)} ({c.detail})")
            paths += is_path(g)
            mixed_two += certs[Variant.MIXED].value == 2
    scope = "labeled graphs" if labeled else "isomorphism classes"
    out = []
    for name, claim in BOUND_ANCHORS.items():
        bad = failures.get(name, [])
        out.append(Check(
            f"bounds {name}",
            not bad,
            f"{evaluated[name]} evaluations over {graphs} {scope}, {len(bad)} violations"
            + (f"; first: {bad[:3]}" if bad else ""),
            claim,
        ))
    out.append(Check(
        "bounds census size",
        graphs > 0,
        f"{graphs} connected {scope} of order 2..{max_n}; beta_M = 2 on {mixed_two}, paths {paths}",
        "every connected graph of the scanned orders was checked",
    ))
    return out


def suite_formulas(max_n: int = 40) -> list[Check]:
    """Closed-form coordinates against BFS, and their pairwise distinctness."""
    out = []
    mismatches = []
    dup_orders = []
    for n in range(7, max_n + 1):
        g = hprime(n)
        dm = bfs_distances(g)
        land = hprime_landmarks(n)
        seen = set()
        dup = False
        for it in hprime_items(n):
            z = Vertex(it.index - 1) if isinstance(it, Vertex) else Edge(it.u - 1, it.v - 1)
            got = metric_vector(dm, land, z)
            want = hprime_coords(n, it)
            if got != want:
                mismatches.append(f"n={n} {_item_label(it)}: formula {want}, bfs {got}")
            dup |= got in seen
            seen.add(got)
        if dup:
            dup_orders.append(n)
    out.append(Check(
        f"hprime coordinates 7..{max_n}",
        not mismatches,
        f"{len(mismatches)} mismatches" + (f": {mismatches}" if mismatches else ""),
        "closed-form r(item, {v2, v_m, v_{m+3}}) on H'_n equals the BFS vector",
    ))
    out.append(Check(
        f"hprime distinct vectors 7..{max_n}",
        not dup_orders,
        f"orders with repeated vectors: {dup_orders}" if dup_orders else "all distinct",
        "vectors of all vertices and edges of H'_n w.r.t. {v2, v_m, v_{m+3}} are distinct",
    ))
    t_bad = []
    t_dup = []
    for n in range(4, max_n + 1):
        dm = bfs_distances(tprime(n))
        land = tprime_landmarks(n)
        vecs = []
        for a, b in tprime_edges(n):
            got = metric_vector(dm, land, Edge(a - 1, b - 1))
            want = tprime_edge_coords(n, Edge(a, b))
            if got != want:
                t_bad.append(f"n={n} v{a}v{b}: formula {want}, bfs {got}")
            vecs.append(got)
        if len(set(vecs)) != len(vecs):
            t_dup.append(n)
    out.append(Check(
        f"tprime edge coordinates 4..{max_n}",
        not t_bad,
        f"{len(t_bad)} mismatches" + (f": {t_bad}" if t_bad else ""),
        "r(v_i v_{i+1}) = (i-1, n-m-i), r(v_i v_{n-m+i}) = (i-1, n+1-m-i) w.r.t. {v1, v_{n-m+1}}",
    ))
    out.append(Check(
        f"tprime distinct edge vectors 4..{max_n}",
        not t_dup,
        f"orders with repeated vectors: {t_dup}" if t_dup else "all distinct",
        "edge vectors of T'_n w.r.t. {v1, v_{n-m+1}} are distinct",
    ))
    return out


def _item_label(it) -> str:
    return f"v{it.index}" if isinstance(it, Vertex) else f"v{it.u}v{it.v}"


def _expect_checks(label, g, expectations) -> list[Check]:
    out = []
    for e in expectations:
        got = solve(g, e.variant).value
        rel = "==" if e.exact else ">="
        out.append(Check(
            f"{label} {e.variant.value}",
            e.holds(got),
            f"{e.variant.symbol}={got}, expected {rel} {e.value}",
            e.claim,
        ))
    return out


def suite_families(max_n: int = 12) -> list[Check]:
    out = []
    for n in range(4, max_n + 1):
        out += _expect_checks(f"T'_{n}", tprime(n), tprime_expected(n))
    for n in range(3, max_n + 1):
        out += _expect_checks(f"H'_{n}", hprime(n), hprime_expected(n))
    for n in range(3, 11):
        out += _expect_checks(f"P_{n}", path_graph(n), path_expected(n))
        out += _expect_checks(f"C_{n}", cycle_graph(n), cycle_expected(n))
    for r in range(2, 5):
        for t in range(r, 5):
            out += _expect_checks(f"K_{r},{t}", complete_bipartite(r, t), kbip_expected(r, t))
    return out


def suite_brackets(max_n: int = 7, **search_kw) -> list[Check]:
    out = []
    for n in range(4, max_n + 1):
        out += bracket_theorems(n, **search_kw)
        r = max_diff(DiffSpec(Variant.MIXED, Variant.EDGE, n), **search_kw)
        c = solve_all(tprime(n))
        d = c[Variant.MIXED].value - c[Variant.EDGE].value
        out.append(Check(
            f"tprime witness n={n}",
            d == n // 2 - 1 and d <= r.value,
            f"beta_M(T'_{n}) - beta_E(T'_{n}) = {d}, search max {r.value}",
            "T'_n attains floor(n/2) - 1, at most the exact extremum",
        ))
    return out

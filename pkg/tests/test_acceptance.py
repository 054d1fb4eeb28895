"""Acceptance criteria 1-9. Each test prints one PASS/FAIL line."""

import json
import time

import pytest

from metdim.cli import main
from metdim.enumeration import DiffSpec, enumerate_connected, max_diff
from metdim.families import complete_bipartite, cycle_graph, hprime, path_graph, tprime
from metdim.graph import graph6_decode
from metdim.metrics import Variant, bound_suite, reference_solve, solve, solve_all
from metdim.verify import suite_bounds, suite_formulas


def report(num, ok, detail):
    print(f"\n{'PASS' if ok else 'FAIL'} criterion {num}: {detail}")
    assert ok, detail


def _cli_json(argv, capsys):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_criterion_1_small_order_table(capsys):
    got = []
    t0 = time.perf_counter()
    for n in range(3, 7):
        code, out = _cli_json(["search", "--order", str(n), "--diff", "strong-mixed", "--jobs", "1"], capsys)
        assert code == 0
        got.append(json.loads(out)["payload"]["value"])
    dt = time.perf_counter() - t0
    with capsys.disabled():
        report(1, got == [-1, -1, 0, 0] and dt < 120, f"(S-M)(3..6) = {got}, want [-1, -1, 0, 0], {dt:.2f}s")


def test_criterion_2_order_three(capsys):
    code, out = _cli_json(["search", "--order", "3", "--diff", "mixed-edge"], capsys)
    p = json.loads(out)["payload"]
    names = {graph6_decode(w).size for w in p["witnesses"]}
    ok = code == 0 and p["value"] == 1 and names == {2, 3}
    with capsys.disabled():
        report(2, ok, f"(M-E)(3) = {p['value']}, argmax {p['witnesses']} (P3 and C3 required)")


def test_criterion_3_mixed_edge_bracket(capsys):
    vals = {n: max_diff(DiffSpec(Variant.MIXED, Variant.EDGE, n)).value for n in range(4, 8)}
    bracket = all(n // 2 - 1 <= v <= n - 2 for n, v in vals.items())
    fam = {}
    for n in range(4, 13):
        g = tprime(n)
        fam[n] = (solve(g, Variant.MIXED).value, solve(g, Variant.EDGE).value)
    fam_ok = all(m == n // 2 + 1 and e == 2 for n, (m, e) in fam.items())
    with capsys.disabled():
        report(3, bracket and fam_ok,
               f"(M-E)(4..7) = {list(vals.values())} within [n/2-1, n-2]; T'_4..12 (M, E) = {list(fam.values())}")


def test_criterion_4_strong_mixed_bracket(capsys):
    v7 = max_diff(DiffSpec(Variant.STRONG, Variant.MIXED, 7)).value
    fam = {}
    for n in range(7, 13):
        g = hprime(n)
        fam[n] = (solve(g, Variant.MIXED).value, solve(g, Variant.STRONG).value)
    fam_ok = all(m == 3 and s >= (n - 1) // 2 + 1 for n, (m, s) in fam.items())
    with capsys.disabled():
        report(4, 1 <= v7 <= 3 and fam_ok,
               f"(S-M)(7) = {v7} in [1, 3]; H'_7..12 (M, S) = {list(fam.values())}")


def test_criterion_5_closed_forms(capsys):
    t0 = time.perf_counter()
    checks = suite_formulas(40)
    dt = time.perf_counter() - t0
    bad = [c for c in checks if not c.passed]
    detail = f"{len(checks) - len(bad)}/{len(checks)} checks, {dt:.2f}s"
    if bad:
        detail += "; " + " | ".join(f"{c.name}: {c.detail[:300]}" for c in bad)
    with capsys.disabled():
        report(5, not bad and dt < 10, detail)


def test_criterion_6_bounds(capsys):
    classes = suite_bounds(6)
    labeled = suite_bounds(6, labeled=True)
    bad = [c for c in classes + labeled if not c.passed]
    census = [c.detail for c in classes + labeled if c.name == "bounds census size"]
    with capsys.disabled():
        report(6, not bad, f"{len(classes) + len(labeled) - len(bad)} checks pass; {census}")


def test_criterion_7_known_values(capsys):
    bad = []
    for n in range(3, 11):
        p, c = solve_all(path_graph(n)), solve_all(cycle_graph(n))
        got = (p[Variant.EDGE].value, p[Variant.MIXED].value, p[Variant.STRONG].value,
               c[Variant.EDGE].value, c[Variant.MIXED].value)
        if got != (1, 2, 1, 2, 3):
            bad.append(f"n={n}: {got}")
    for r in range(2, 5):
        for t in range(2, 5):
            g = complete_bipartite(r, t)
            if solve(g, Variant.EDGE).value != r + t - 2:
                bad.append(f"K{r},{t} edge")
            if r >= 3 and t >= 3 and solve(g, Variant.MIXED).value != r + t - 2:
                bad.append(f"K{r},{t} mixed")
    with capsys.disabled():
        report(7, not bad, "paths, cycles 3..10 and K_{r,t} match" if not bad else str(bad))


def test_criterion_8_oracle_equivalence(capsys):
    classes = list(enumerate_connected(6))
    bad = []
    for g in classes:
        for v in Variant:
            if solve(g, v).value != reference_solve(g, v)[0]:
                bad.append((g.mask, v.value))
    with capsys.disabled():
        report(8, len(classes) == 112 and not bad,
               f"{len(classes)} classes x 4 invariants, {len(bad)} disagreements")


@pytest.mark.parametrize("argv", [
    ["search", "--order", "6", "--diff", "strong-mixed"],
    ["search", "--order", "5", "--diff", "mixed-edge", "--no-dedup"],
    ["search", "--order", "6", "--diff", "edge-mixed", "--mode", "min"],
])
def test_criterion_9_determinism(argv, capsys):
    outs = []
    for jobs in ("1", "2", "3"):
        code, out = _cli_json(argv + ["--jobs", jobs, "--chunk", "4096"], capsys)
        assert code == 0
        outs.append(out.encode())
    with capsys.disabled():
        report(9, len(set(outs)) == 1, f"{' '.join(argv)}: jobs 1/2/3 byte-identical={len(set(outs)) == 1}")

import itertools
import json
from math import comb

import pytest

import metdim.enumeration as en
from metdim.enumeration import (
    DiffSearchReport,
    DiffSpec,
    EnumerationCapError,
    count_connected,
    enumerate_connected,
    max_diff,
    min_diff,
)
from metdim.graph import canonical_code, graph6_decode, graph6_encode, is_connected
from metdim.metrics import Variant, solve


def connected_recurrence(n):
    """Labeled connected graphs via the classic root-component recurrence."""
    c = [0, 1]
    for k in range(2, n + 1):
        total = 2 ** comb(k, 2)
        total -= sum(comb(k - 1, j - 1) * c[j] * 2 ** comb(k - j, 2) for j in range(1, k))
        c.append(total)
    return c[n]


def connected_bruteforce(n):
    pairs = list(itertools.combinations(range(n), 2))
    count = 0
    for bits in range(1 << len(pairs)):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        comps = n
        for k, (a, b) in enumerate(pairs):
            if bits >> k & 1:
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
                    comps -= 1
        count += comps == 1
    return count


# -- census ------------------------------------------------------------------

@pytest.mark.parametrize("n", range(1, 7))
def test_labeled_counts_match_oracles(n):
    got = count_connected(n)
    assert got == connected_recurrence(n)
    if n <= 5:
        assert got == connected_bruteforce(n)


def test_known_counts():
    assert [count_connected(n) for n in range(1, 7)] == [1, 1, 4, 38, 728, 26704]
    assert [count_connected(n, dedup=True) for n in range(1, 7)] == [1, 1, 2, 6, 21, 112]


def test_order_three_classes():
    got = {graph6_encode(g) for g in enumerate_connected(3)}
    assert got == {"BW", "Bw"}


def test_enumerated_graphs_are_connected(labeled_upto5):
    for graphs in labeled_upto5.values():
        assert all(is_connected(g) for g in graphs)


def test_dedup_is_one_per_labeled_class(labeled_upto5, classes_upto6):
    for n, graphs in labeled_upto5.items():
        codes = {canonical_code(g) for g in graphs}
        reps = [canonical_code(g) for g in classes_upto6[n]]
        assert len(reps) == len(set(reps)) == len(codes)
        assert set(reps) == codes


def test_caps():
    with pytest.raises(EnumerationCapError):
        list(enumerate_connected(0))
    with pytest.raises(EnumerationCapError):
        list(enumerate_connected(9))
    with pytest.raises(EnumerationCapError):
        list(enumerate_connected(8, dedup=False))
    with pytest.raises(EnumerationCapError):
        list(enumerate_connected(7, cap=6))
    with pytest.raises(EnumerationCapError):
        max_diff(DiffSpec(Variant.STRONG, Variant.MIXED, 7), cap=6)


# -- spec --------------------------------------------------------------------

def test_diffspec():
    s = DiffSpec.parse("strong-mixed", 5)
    assert (s.first, s.second, s.n, s.label) == (Variant.STRONG, Variant.MIXED, 5, "strong-mixed")
    assert s.swapped().label == "mixed-strong"
    for bad in ["strong-strong", "strong", "foo-mixed"]:
        with pytest.raises(ValueError):
            DiffSpec.parse(bad, 5)


# -- searches ----------------------------------------------------------------

@pytest.mark.parametrize("diff,n,want", [
    ("mixed-edge", 3, 1),
    ("strong-mixed", 3, -1),
    ("strong-mixed", 4, -1),
    ("strong-mixed", 5, 0),
    ("strong-mixed", 6, 0),
    ("edge-mixed", 6, 0),
])
def test_max_diff_examples(diff, n, want):
    assert max_diff(DiffSpec.parse(diff, n)).value == want


def test_min_diff_examples():
    # both order-3 graphs have beta_M - beta_E = 1
    r = min_diff(DiffSpec.parse("mixed-edge", 3))
    assert r.value == 1 and r.mode == "min"
    assert min_diff(DiffSpec.parse("strong-mixed", 3)).value == -1


@pytest.mark.parametrize("diff,n", [("mixed-edge", 3), ("mixed-edge", 5), ("strong-metric", 5)])
def test_min_is_negated_swapped_max(diff, n):
    spec = DiffSpec.parse(diff, n)
    assert min_diff(spec).value == -max_diff(spec.swapped()).value


@pytest.mark.parametrize("diff", ["strong-mixed", "mixed-edge", "metric-edge"])
@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_labeled_and_dedup_agree(diff, n):
    spec = DiffSpec.parse(diff, n)
    a = max_diff(spec, dedup=True)
    b = max_diff(spec, dedup=False)
    assert (a.value, a.witnesses, a.connected) == (b.value, b.witnesses, b.connected)
    assert sum(b.histogram.values()) == b.connected
    assert sum(a.histogram.values()) == a.classes


@pytest.mark.parametrize("diff,n", [("strong-mixed", 6), ("mixed-edge", 6), ("mixed-edge", 5)])
def test_argmax_audit(diff, n):
    spec = DiffSpec.parse(diff, n)
    r = max_diff(spec)
    assert r.witnesses == sorted(set(r.witnesses))
    for w in r.witnesses:
        g = graph6_decode(w)
        assert solve(g, spec.first).value - solve(g, spec.second).value == r.value
    # every class is at most the max
    for g in enumerate_connected(n):
        assert solve(g, spec.first).value - solve(g, spec.second).value <= r.value


def test_report_round_trip():
    r = max_diff(DiffSpec.parse("strong-mixed", 5))
    d = r.to_dict()
    assert DiffSearchReport.from_dict(json.loads(json.dumps(d))).to_dict() == d
    assert d["counts"] == {"labeled_scanned": 1024, "connected": 728, "classes": 21}


def test_order_one_and_two():
    assert max_diff(DiffSpec.parse("strong-metric", 1)).value == 0
    assert max_diff(DiffSpec.parse("mixed-edge", 2)).value == 1


# -- parallelism and checkpoints ---------------------------------------------

@pytest.mark.parametrize("dedup", [True, False])
def test_jobs_do_not_change_result(dedup):
    spec = DiffSpec.parse("strong-mixed", 5)
    a = max_diff(spec, dedup=dedup, jobs=1, chunk=100)
    b = max_diff(spec, dedup=dedup, jobs=2, chunk=100)
    assert a.to_dict() == b.to_dict()


class Boom(RuntimeError):
    pass


@pytest.mark.parametrize("dedup,target", [(True, "_scan_chunk"), (True, "_solve_classes"),
                                          (False, "_solve_labeled_chunk")])
def test_checkpoint_resume(tmp_path, monkeypatch, dedup, target):
    spec = DiffSpec.parse("mixed-edge", 6)
    fresh = max_diff(spec, dedup=dedup, chunk=2048)
    ck = tmp_path / "state.json"
    real = getattr(en, target)
    calls = {"n": 0}

    def flaky(args):
        calls["n"] += 1
        if calls["n"] == 2:
            raise Boom
        return real(args)

    monkeypatch.setattr(en, target, flaky)
    with pytest.raises(Boom):
        max_diff(spec, dedup=dedup, chunk=2048, checkpoint=ck)
    state = json.loads(ck.read_text())
    assert state["format"] == "metdim-checkpoint" and state["version"] == 1
    assert 0 < state["next_mask"] <= 1 << 15
    monkeypatch.setattr(en, target, real)
    resumed = max_diff(spec, dedup=dedup, chunk=2048, checkpoint=ck)
    assert resumed.to_dict() == fresh.to_dict()


def test_checkpoint_mismatch_rejected(tmp_path):
    ck = tmp_path / "state.json"
    max_diff(DiffSpec.parse("strong-mixed", 4), checkpoint=ck)
    with pytest.raises(ValueError):
        max_diff(DiffSpec.parse("mixed-edge", 4), checkpoint=ck)
    ck.write_text(json.dumps({"format": "other"}))
    with pytest.raises(ValueError):
        max_diff(DiffSpec.parse("strong-mixed", 4), checkpoint=ck)

"""Exhaustive search over connected graphs of a fixed small order.

Every labeled graph on ``n`` vertices is an edge mask; the scan walks all
``2**(n(n-1)/2)`` masks and keeps the connected ones. With ``dedup`` the scan
keeps one canonical representative per isomorphism class and only those are
solved. The maximum of an isomorphism invariant over labeled graphs equals
the maximum over classes, so dedup changes cost, never the extremum.
"""

from __future__ import annotations

import json
import logging
import os
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator

from ._backend import kernel
from .checks import Check
from .graph import Graph, graph6_encode
from .metrics import Variant, solve

log = logging.getLogger(__name__)

DEFAULT_ENUM_CAP = 7
HARD_ENUM_CAP = 8
DEFAULT_CHUNK = 1 << 16
CHECKPOINT_FORMAT = "metdim-checkpoint"
CHECKPOINT_VERSION = 1


class EnumerationCapError(ValueError):
    pass


@dataclass(frozen=True)
class DiffSpec:
    first: Variant
    second: Variant
    n: int

    def __post_init__(self):
        object.__setattr__(self, "first", Variant(self.first))
        object.__setattr__(self, "second", Variant(self.second))
        if self.first is self.second:
            raise ValueError("the two invariants must differ")
        if self.n < 1:
            raise ValueError("order must be positive")

    @classmethod
    def parse(cls, diff: str, n: int) -> "DiffSpec":
        """``"strong-mixed"`` means beta_S - beta_M."""
        a, sep, b = diff.partition("-")
        if not sep:
            raise ValueError(f"bad difference {diff!r}; expected e.g. strong-mixed")
        return cls(Variant(a), Variant(b), n)

    @property
    def label(self) -> str:
        return f"{self.first.value}-{self.second.value}"

    def swapped(self) -> "DiffSpec":
        return DiffSpec(self.second, self.first, self.n)

    def to_dict(self) -> dict:
        return {"first": self.first.value, "second": self.second.value, "order": self.n}


@dataclass
class DiffSearchReport:
    """Extremum of ``first - second`` over connected graphs of order ``n``.

    ``mode`` is ``"max"`` or ``"min"``; ``witnesses`` are canonical graph6
    strings of the graphs attaining ``value``, sorted.
    """

    spec: DiffSpec
    mode: str
    value: int
    witnesses: list[str]
    labeled_scanned: int
    connected: int
    classes: int | None
    dedup: bool
    histogram: dict[int, int] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "spec": self.spec.to_dict(),
            "mode": self.mode,
            "value": self.value,
            "witnesses": list(self.witnesses),
            "counts": {
                "labeled_scanned": self.labeled_scanned,
                "connected": self.connected,
                "classes": self.classes,
            },
            "dedup": self.dedup,
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "DiffSearchReport":
        s = d["spec"]
        c = d["counts"]
        return cls(
            DiffSpec(Variant(s["first"]), Variant(s["second"]), s["order"]),
            d["mode"],
            d["value"],
            list(d["witnesses"]),
            c["labeled_scanned"],
            c["connected"],
            c["classes"],
            d["dedup"],
            {int(k): v for k, v in d.get("histogram", {}).items()},
            list(d.get("notes", [])),
        )


def _check_order(n: int, dedup: bool, cap: int | None) -> None:
    cap = DEFAULT_ENUM_CAP if cap is None else cap
    if n < 1:
        raise EnumerationCapError("order must be positive")
    if n > HARD_ENUM_CAP:
        raise EnumerationCapError(f"order {n} above the hard enumeration limit {HARD_ENUM_CAP}")
    if n == HARD_ENUM_CAP:
        if not dedup:
            raise EnumerationCapError("order 8 without dedup is refused")
        warnings.warn("order 8 enumeration is experimental and slow", RuntimeWarning, stacklevel=3)
    elif n > cap:
        raise EnumerationCapError(f"order {n} above enumeration cap {cap}")


def mask_count(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


def enumerate_connected(n: int, dedup: bool = True, *, cap: int | None = None) -> Iterator[Graph]:
    """Connected graphs of order ``n``: every labeled one, or one canonical
    representative per isomorphism class (in canonical-mask order)."""
    _check_order(n, dedup, cap)
    _, items = kernel.scan_range(n, 0, mask_count(n), dedup)
    for mask in items:
        yield Graph.from_mask(n, mask)


def count_connected(n: int, dedup: bool = False, *, cap: int | None = None) -> int:
    _check_order(n, dedup, cap)
    connected, items = kernel.scan_range(n, 0, mask_count(n), dedup)
    return len(items) if dedup else connected


# -- difference search --------------------------------------------------------

def _diff_value(g: Graph, first: Variant, second: Variant) -> int:
    vals = {}
    for v in (first, second):
        if v is not Variant.STRONG:
            vals[v] = solve(g, v).value
    if Variant.STRONG in (first, second):
        vals[Variant.STRONG] = solve(g, Variant.STRONG, metric_value=vals.get(Variant.METRIC)).value
    return vals[first] - vals[second]


def _scan_chunk(args):
    n, lo, hi, dedup = args
    return kernel.scan_range(n, lo, hi, dedup)


def _solve_labeled_chunk(args):
    """Diff for every connected labeled graph in ``[lo, hi)``.

    Returns (connected, max, argmax canonical masks, histogram).
    """
    n, lo, hi, first, second = args
    connected, masks = kernel.scan_range(n, lo, hi, False)
    best = None
    arg = set()
    hist: dict[int, int] = {}
    for mask in masks:
        g = Graph.from_mask(n, mask)
        d = _diff_value(g, first, second)
        hist[d] = hist.get(d, 0) + 1
        if best is None or d > best:
            best, arg = d, set()
        if d == best:
            arg.add(kernel.canon_mask(g.adj, n))
    return connected, best, sorted(arg), hist


def _solve_classes(args):
    n, masks, first, second = args
    return [_diff_value(Graph.from_mask(n, m), first, second) for m in masks]


class _Checkpoint:
    def __init__(self, path, spec: DiffSpec, dedup: bool):
        self.path = Path(path) if path else None
        self.spec = spec
        self.dedup = dedup

    def load(self) -> dict | None:
        if self.path is None or not self.path.exists():
            return None
        state = json.loads(self.path.read_text())
        if state.get("format") != CHECKPOINT_FORMAT or state.get("version") != CHECKPOINT_VERSION:
            raise ValueError(f"{self.path} is not a version {CHECKPOINT_VERSION} checkpoint")
        if state["spec"] != self.spec.to_dict() or state["dedup"] != self.dedup:
            raise ValueError(f"{self.path} belongs to a different search")
        return state

    def save(self, state: dict) -> None:
        if self.path is None:
            return
        state = dict(state, format=CHECKPOINT_FORMAT, version=CHECKPOINT_VERSION,
                     spec=self.spec.to_dict(), dedup=self.dedup)
        tmp = self.path.with_suffix(self.path.suffix + ".tmp")
        tmp.write_text(json.dumps(state, sort_keys=True))
        os.replace(tmp, self.path)


def _map(fn, tasks, jobs):
    if jobs <= 1 or len(tasks) <= 1:
        return map(fn, tasks)
    pool = ProcessPoolExecutor(max_workers=jobs)
    return _ordered(pool, fn, tasks)


def _ordered(pool, fn, tasks):
    with pool:
        yield from pool.map(fn, tasks)


def max_diff(
    spec: DiffSpec,
    *,
    dedup: bool = True,
    jobs: int = 1,
    cap: int | None = None,
    checkpoint: str | os.PathLike | None = None,
    chunk: int = DEFAULT_CHUNK,
) -> DiffSearchReport:
    """Exact maximum of ``first(G) - second(G)`` over connected graphs of
    order ``spec.n``.

    The mask space is cut into contiguous ranges of ``chunk`` masks; ranges
    are processed by up to ``jobs`` workers and merged in range order, so
    the report does not depend on ``jobs``. With ``checkpoint`` the merged
    state is written after every range and a rerun resumes from it.
    """
    n = spec.n
    _check_order(n, dedup, cap)
    total = mask_count(n)
    ck = _Checkpoint(checkpoint, spec, dedup)
    state = ck.load() or {"next_mask": 0, "connected": 0}
    ranges = [(lo, min(lo + chunk, total)) for lo in range(state["next_mask"], total, chunk)]
    if state["next_mask"]:
        log.info("resuming %s n=%d at mask %d", spec.label, n, state["next_mask"])

    if dedup:
        classes = set(state.get("classes", []))
        tasks = [(n, lo, hi, True) for lo, hi in ranges]
        for (lo, hi), (connected, found) in zip(ranges, _map(_scan_chunk, tasks, jobs)):
            state["connected"] += connected
            classes.update(found)
            state["next_mask"] = hi
            state["classes"] = sorted(classes)
            ck.save(state)
        ordered = sorted(classes)
        solved = {int(k): v for k, v in state.get("solved", {}).items()}
        todo = [m for m in ordered if m not in solved]
        batches = [todo[i:i + 64] for i in range(0, len(todo), 64)]
        tasks = [(n, b, spec.first, spec.second) for b in batches]
        for batch, diffs in zip(batches, _map(_solve_classes, tasks, jobs)):
            solved.update(zip(batch, diffs))
            state["solved"] = {str(k): v for k, v in sorted(solved.items())}
            ck.save(state)
        hist: dict[int, int] = {}
        for m in ordered:
            hist[solved[m]] = hist.get(solved[m], 0) + 1
        best = max(solved[m] for m in ordered)
        arg = [m for m in ordered if solved[m] == best]
        nclasses = len(ordered)
    else:
        best = state.get("max")
        arg = set(state.get("argmax", []))
        hist = {int(k): v for k, v in state.get("histogram", {}).items()}
        tasks = [(n, lo, hi, spec.first, spec.second) for lo, hi in ranges]
        for (lo, hi), part in zip(ranges, _map(_solve_labeled_chunk, tasks, jobs)):
            connected, pmax, parg, phist = part
            state["connected"] += connected
            for k, v in phist.items():
                hist[k] = hist.get(k, 0) + v
            if pmax is not None:
                if best is None or pmax > best:
                    best, arg = pmax, set()
                if pmax == best:
                    arg.update(parg)
            state.update(next_mask=hi, max=best, argmax=sorted(arg),
                         histogram={str(k): v for k, v in sorted(hist.items())})
            ck.save(state)
        nclasses = None
    witnesses = sorted(graph6_encode(Graph.from_mask(n, m)) for m in arg)
    return DiffSearchReport(
        spec, "max", best, witnesses, total, state["connected"], nclasses, dedup, hist
    )


def min_diff(spec: DiffSpec, **kwargs) -> DiffSearchReport:
    """Minimum of ``first - second``, as the negated maximum of the swapped
    difference."""
    swapped = max_diff(spec.swapped(), **kwargs)
    hist = {-k: v for k, v in swapped.histogram.items()}
    return DiffSearchReport(
        spec,
        "min",
        -swapped.value,
        swapped.witnesses,
        swapped.labeled_scanned,
        swapped.connected,
        swapped.classes,
        swapped.dedup,
        hist,
        [f"min({spec.label}) = -max({spec.swapped().label}) = -({swapped.value})"],
    )


def bracket_theorems(n: int, **kwargs) -> list[Check]:
    """Exact extremal differences at order ``n`` against the known intervals.

    ``(mixed - edge)(n)`` is checked for ``n >= 4`` and
    ``(strong - mixed)(n)`` for ``n >= 7``.
    """
    out = []
    if n >= 4:
        r = max_diff(DiffSpec(Variant.MIXED, Variant.EDGE, n), **kwargs)
        lo, hi = n // 2 - 1, n - 2
        out.append(Check(
            f"mixed-edge bracket n={n}",
            lo <= r.value <= hi,
            f"exact (beta_M - beta_E)({n}) = {r.value} (computed); interval [{lo}, {hi}]",
            "floor(n/2) - 1 <= (beta_M - beta_E)(n) <= n - 2 for n >= 4",
        ))
    if n >= 7:
        r = max_diff(DiffSpec(Variant.STRONG, Variant.MIXED, n), **kwargs)
        lo, hi = (n - 1) // 2 - 2, n - 4
        out.append(Check(
            f"strong-mixed bracket n={n}",
            lo <= r.value <= hi,
            f"exact (beta_S - beta_M)({n}) = {r.value} (computed); interval [{lo}, {hi}]",
            "floor((n-1)/2) - 2 <= (beta_S - beta_M)(n) <= n - 4 for n >= 7",
        ))
    return out

"""Named graph families and the closed-form coordinates known for them.

Generators return 0-based graphs. The coordinate formulas take 1-based
``Vertex``/``Edge`` items (``v1..vn``) so they read like the indexed case
tables they encode.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .graph import Edge, Graph
from .metrics import Variant, Vertex

KINDS = ("path", "cycle", "kbip", "tprime", "hprime")


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    n: int = 0
    r: int = 0
    t: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise FamilyError(f"unknown family {self.kind!r}; expected one of {', '.join(KINDS)}")
        lo = {"path": 1, "cycle": 3, "tprime": 4, "hprime": 3}
        if self.kind == "kbip":
            if self.r < 1 or self.t < 1:
                raise FamilyError("kbip needs r, t >= 1")
        elif self.n < lo[self.kind]:
            raise FamilyError(f"{self.kind} needs n >= {lo[self.kind]}")

    @property
    def order(self) -> int:
        return self.r + self.t if self.kind == "kbip" else self.n

    @property
    def m(self) -> int:
        return self.order // 2

    def __str__(self):
        if self.kind == "kbip":
            return f"kbip:{self.r},{self.t}"
        return f"{self.kind}:{self.n}"


def parse_family(text: str) -> FamilySpec:
    """Parse ``path:9``, ``cycle:5``, ``kbip:3,4``, ``tprime:8``, ``hprime:11``."""
    kind, sep, arg = text.strip().partition(":")
    if not sep or not arg:
        raise FamilyError(f"bad family spec {text!r}")
    try:
        if kind == "kbip":
            r, t = (int(x) for x in arg.split(","))
            return FamilySpec(kind, r=r, t=t)
        return FamilySpec(kind, n=int(arg))
    except ValueError as exc:
        if isinstance(exc, FamilyError):
            raise
        raise FamilyError(f"bad family spec {text!r}") from None


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)] + [(n - 1, 0)])


def complete_bipartite(r: int, t: int) -> Graph:
    return Graph.from_edges(r + t, ((i, r + j) for i in range(r) for j in range(t)))


def tprime_edges(n: int) -> list[tuple[int, int]]:
    """1-based edges: path v1..v_{n-m}+1 plus spurs v_i v_{n-m+i}, 2 <= i <= m."""
    m = n // 2
    return [(i, i + 1) for i in range(1, n - m + 1)] + [(i, n - m + i) for i in range(2, m + 1)]


def tprime(n: int) -> Graph:
    if n < 4:
        raise FamilyError("tprime needs n >= 4")
    return Graph.from_edges(n, ((a - 1, b - 1) for a, b in tprime_edges(n)))


# small cases read off the drawings, 1-based
_HPRIME_SMALL = {
    3: [(1, 2), (2, 3)],
    4: [(4, 1), (4, 2), (4, 3)],
    5: [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)],
    6: [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (6, 5)],
}


def hprime_edges(n: int) -> list[tuple[int, int]]:
    """1-based edges: path v1..v_{n-1} closed by v_{n-1}v1, apex v_n on v1, v3."""
    if n in _HPRIME_SMALL:
        return list(_HPRIME_SMALL[n])
    if n < 3:
        raise FamilyError("hprime needs n >= 3")
    return [(i, i + 1) for i in range(1, n - 1)] + [(1, n), (3, n), (n - 1, 1)]


def hprime(n: int) -> Graph:
    return Graph.from_edges(n, ((a - 1, b - 1) for a, b in hprime_edges(n)))


def make_family(spec: FamilySpec | str) -> Graph:
    if isinstance(spec, str):
        spec = parse_family(spec)
    if spec.kind == "path":
        return path_graph(spec.n)
    if spec.kind == "cycle":
        return cycle_graph(spec.n)
    if spec.kind == "kbip":
        return complete_bipartite(spec.r, spec.t)
    if spec.kind == "tprime":
        return tprime(spec.n)
    return hprime(spec.n)


# -- expected values ----------------------------------------------------------

@dataclass(frozen=True)
class Expectation:
    variant: Variant
    value: int
    exact: bool  # False: ``value`` is a lower bound
    claim: str

    def holds(self, actual: int) -> bool:
        return actual == self.value if self.exact else actual >= self.value

    def to_dict(self) -> dict:
        return {
            "invariant": self.variant.value,
            "relation": "==" if self.exact else ">=",
            "value": self.value,
            "claim": self.claim,
        }


ExpectedInvariants = list[Expectation]

# (n, beta_S(H'_n), beta_M(H'_n), (beta_S - beta_M)(n))
SMALL_STRONG_MIXED = {3: (1, 2, -1), 4: (2, 3, -1), 5: (3, 3, 0), 6: (3, 3, 0)}


def tprime_expected(n: int) -> ExpectedInvariants:
    if n < 4:
        raise FamilyError("tprime needs n >= 4")
    m = n // 2
    return [
        Expectation(Variant.MIXED, m + 1, True, "beta_M(T'_n) = l(T'_n) = floor(n/2) + 1"),
        Expectation(Variant.EDGE, 2, True, "beta_E(T'_n) = 2"),
    ]


def hprime_expected(n: int) -> ExpectedInvariants:
    if n < 3:
        raise FamilyError("hprime needs n >= 3")
    if n <= 6:
        s, mx, _ = SMALL_STRONG_MIXED[n]
        return [
            Expectation(Variant.STRONG, s, True, f"beta_S(H'_{n}) = {s} (small-order table)"),
            Expectation(Variant.MIXED, mx, True, f"beta_M(H'_{n}) = {mx} (small-order table)"),
        ]
    return [
        Expectation(Variant.MIXED, 3, True, "beta_M(H'_n) = 3 for n >= 7"),
        Expectation(
            Variant.STRONG, (n - 1) // 2 + 1, False, "beta_S(H'_n) >= floor((n-1)/2) + 1 for n >= 7"
        ),
    ]


def path_expected(n: int) -> ExpectedInvariants:
    if n < 2:
        return []
    return [
        Expectation(Variant.EDGE, 1, True, "beta_E(P_n) = 1"),
        Expectation(Variant.MIXED, 2, True, "beta_M(P_n) = 2"),
        Expectation(Variant.STRONG, 1, True, "beta_S(P_n) = 1"),
    ]


def cycle_expected(n: int) -> ExpectedInvariants:
    return [
        Expectation(Variant.EDGE, 2, True, "beta_E(C_n) = 2"),
        Expectation(Variant.MIXED, 3, True, "beta_M(C_n) = 3"),
    ]


def kbip_expected(r: int, t: int) -> ExpectedInvariants:
    out = []
    if (r, t) != (1, 1):
        out.append(Expectation(Variant.EDGE, r + t - 2, True, "beta_E(K_{r,t}) = r+t-2, K_{r,t} != K_{1,1}"))
    if r >= 3 and t >= 3:
        out.append(Expectation(Variant.MIXED, r + t - 2, True, "beta_M(K_{r,t}) = r+t-2 for r, t >= 3"))
    return out


def expected_for(spec: FamilySpec | str) -> ExpectedInvariants:
    if isinstance(spec, str):
        spec = parse_family(spec)
    if spec.kind == "path":
        return path_expected(spec.n)
    if spec.kind == "cycle":
        return cycle_expected(spec.n)
    if spec.kind == "kbip":
        return kbip_expected(spec.r, spec.t)
    if spec.kind == "tprime":
        return tprime_expected(spec.n)
    return hprime_expected(spec.n)


# -- closed-form coordinates --------------------------------------------------

def tprime_landmarks(n: int) -> list[int]:
    """Edge basis {v1, v_{n-m+1}}, 0-based."""
    return [0, n - n // 2]


def hprime_landmarks(n: int) -> list[int]:
    """Mixed basis {v2, v_m, v_{m+3}}, 0-based."""
    m = n // 2
    return [1, m - 1, m + 2]


def tprime_edge_coords(n: int, e: Edge) -> tuple[int, int]:
    """Distances of 1-based edge ``e`` of T'_n to (v1, v_{n-m+1})."""
    m = n // 2
    i, j = e.u, e.v
    if j == i + 1 and 1 <= i <= n - m:
        return (i - 1, n - m - i)
    if j == n - m + i and 2 <= i <= m:
        return (i - 1, n + 1 - m - i)
    raise FamilyError(f"v{i}v{j} is not an edge of T'_{n}")


Case = tuple[Callable[[int], bool], Callable[[int], tuple[int, int, int]]]


def _even_vertex_cases(m: int) -> list[Case]:
    return [
        (lambda i: i == 1, lambda i: (1, m - 1, m - 3)),
        (lambda i: 2 <= i <= 3, lambda i: (i - 2, m - i, m - 4 + i)),
        (lambda i: 4 <= i <= m, lambda i: (i - 2, m - i, m + 3 - i)),
        (lambda i: m + 1 <= i <= m + 2, lambda i: (m - 1, i - m, m + 3 - i)),
        (lambda i: m + 3 <= i <= 2 * m - 1, lambda i: (2 * m + 1 - i, i - m, i - m - 3)),
        (lambda i: i == 2 * m, lambda i: (2, m - 2, m - 2)),
    ]


def _even_path_edge_cases(m: int) -> list[Case]:
    # edge v_i v_{i+1}
    return [
        (lambda i: 1 <= i <= 2, lambda i: (0, m - 1 - i, m - 4 + i)),
        (lambda i: 3 <= i <= m - 1, lambda i: (i - 2, m - 1 - i, m + 2 - i)),
        (lambda i: i == m, lambda i: (m - 2, 0, 2)),
        (lambda i: m + 1 <= i <= m + 2, lambda i: (2 * m - i, i - m, m + 2 - i)),
        (lambda i: m + 3 <= i <= 2 * m - 2, lambda i: (2 * m - i, i - m, i - m - 3)),
    ]


def _even_chords(m: int) -> dict[tuple[int, int], tuple[int, int, int]]:
    return {
        (1, 2 * m - 1): (1, m - 1, m - 4),
        (1, 2 * m): (1, m - 2, m - 3),
        (3, 2 * m): (1, m - 3, m - 2),
    }


def _odd_vertex_cases(m: int) -> list[Case]:
    return [
        (lambda i: 1 <= i <= 2, lambda i: (2 - i, m - 1, m - 3 + i)),
        (lambda i: 3 <= i <= m, lambda i: (i - 2, m - i, m + 3 - i)),
        (lambda i: m + 1 <= i <= m + 2, lambda i: (i - 2, i - m, m + 3 - i)),
        (lambda i: m + 3 <= i <= 2 * m, lambda i: (2 * m + 2 - i, i - m, i - m - 3)),
        (lambda i: i == 2 * m + 1, lambda i: (2, m - 2, m - 1)),
    ]


def _odd_path_edge_cases(m: int) -> list[Case]:
    return [
        (lambda i: i == 1, lambda i: (0, m - 2, m - 2)),
        (lambda i: i == 2, lambda i: (0, m - 3, m - 1)),
        (lambda i: 3 <= i <= m - 1, lambda i: (i - 2, m - 1 - i, m + 2 - i)),
        (lambda i: i == m, lambda i: (m - 2, 0, 2)),
        (lambda i: m + 1 <= i <= m + 2, lambda i: (m - 1, i - m, m + 2 - i)),
        (lambda i: m + 3 <= i <= 2 * m - 1, lambda i: (2 * m + 1 - i, i - m, i - m - 3)),
    ]


def _odd_chords(m: int) -> dict[tuple[int, int], tuple[int, int, int]]:
    return {
        (1, 2 * m): (1, m - 1, m - 3),
        (1, 2 * m + 1): (1, m - 2, m - 2),
        (3, 2 * m + 1): (1, m - 3, m - 1),
    }


def _first_case(cases: list[Case], i: int):
    for pred, formula in cases:
        if pred(i):
            return formula(i)
    return None


def hprime_coords(n: int, item) -> tuple[int, int, int]:
    """Closed-form distances of a 1-based item of H'_n (n >= 7) to the mixed
    basis (v2, v_m, v_{m+3})."""
    if n < 7:
        raise FamilyError("closed-form coordinates need n >= 7")
    m = n // 2
    even = n % 2 == 0
    if isinstance(item, Vertex):
        i = item.index
        if not 1 <= i <= n:
            raise FamilyError(f"v{i} is not a vertex of H'_{n}")
        out = _first_case(_even_vertex_cases(m) if even else _odd_vertex_cases(m), i)
    elif isinstance(item, Edge):
        chords = _even_chords(m) if even else _odd_chords(m)
        if (item.u, item.v) in chords:
            out = chords[(item.u, item.v)]
        elif item.v == item.u + 1 and 1 <= item.u <= n - 2:
            cases = _even_path_edge_cases(m) if even else _odd_path_edge_cases(m)
            out = _first_case(cases, item.u)
        else:
            out = None
        if out is None:
            raise FamilyError(f"v{item.u}v{item.v} is not an edge of H'_{n}")
    else:
        raise TypeError(f"expected Vertex or Edge, got {type(item).__name__}")
    if out is None:
        raise FamilyError(f"no closed-form case covers {item} for n={n}")
    return out


def hprime_items(n: int) -> list:
    """All 1-based vertices and edges of H'_n."""
    return [Vertex(i) for i in range(1, n + 1)] + [Edge.of(a, b) for a, b in hprime_edges(n)]

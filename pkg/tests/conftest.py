import random

import pytest

from metdim._backend import available
from metdim.enumeration import enumerate_connected
from metdim.graph import Graph

KERNELS = available()


@pytest.fixture(params=sorted(KERNELS))
def kern(request):
    return KERNELS[request.param]


@pytest.fixture(scope="session")
def classes_upto6():
    """One representative per isomorphism class, orders 1..6."""
    return {n: list(enumerate_connected(n, dedup=True)) for n in range(1, 7)}


@pytest.fixture(scope="session")
def labeled_upto5():
    return {n: list(enumerate_connected(n, dedup=False)) for n in range(1, 6)}


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def random_connected(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    # random spanning tree plus extra edges
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    edges |= {(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p}
    return Graph.from_edges(n, edges)

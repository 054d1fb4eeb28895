"""Compiled and pure-Python kernels must agree function for function."""

import os
import random
import subprocess
import sys

import pytest

from metdim import _pykernel
from metdim._backend import available

from conftest import random_connected, random_graph

KERNELS = available()
needs_both = pytest.mark.skipif(len(KERNELS) < 2, reason="compiled kernel not built")


def _rows(g):
    return list(g.adj)


@needs_both
@pytest.mark.parametrize("seed", range(4))
def test_kernels_agree_on_random_graphs(seed):
    cy, py = KERNELS["cython"], KERNELS["python"]
    rng = random.Random(seed)
    for _ in range(150):
        n = rng.randint(1, 9)
        g = random_graph(rng, n, rng.random())
        rows = _rows(g)
        assert cy.mask_from_rows(rows, n) == py.mask_from_rows(rows, n)
        assert cy.rows_from_mask(n, g.mask) == py.rows_from_mask(n, g.mask)
        assert cy.bfs_rows(rows, n) == py.bfs_rows(rows, n)
        assert cy.connected_rows(rows, n) == py.connected_rows(rows, n)
        assert cy.refine_cells(rows, n) == py.refine_cells(rows, n)
        assert cy.canon_perm(rows, n) == py.canon_perm(rows, n)
        assert cy.canon_mask(rows, n) == py.canon_mask(rows, n)
        assert cy.mmd_rows(rows, n) == py.mmd_rows(rows, n)
        assert cy.vertex_cover_rows(rows, n) == py.vertex_cover_rows(rows, n)


@needs_both
@pytest.mark.parametrize("variant", range(4))
def test_solvers_agree(variant):
    cy, py = KERNELS["cython"], KERNELS["python"]
    rng = random.Random(10 + variant)
    for _ in range(120):
        n = rng.randint(1, 9)
        rows = _rows(random_connected(rng, n, rng.random() * 0.5))
        assert sorted(cy.pair_masks(rows, n, variant)) == sorted(py.pair_masks(rows, n, variant))
        assert cy.solve_rows(rows, n, variant, 1) == py.solve_rows(rows, n, variant, 1)


@needs_both
def test_wide_masks_agree():
    cy, py = KERNELS["cython"], KERNELS["python"]
    rng = random.Random(7)
    for n in (12, 20, 40, 64):
        rows = _rows(random_graph(rng, n, 0.3))
        m = py.mask_from_rows(rows, n)
        assert cy.mask_from_rows(rows, n) == m
        assert cy.rows_from_mask(n, m) == rows


@needs_both
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
@pytest.mark.parametrize("dedup", [False, True])
def test_scan_agrees(n, dedup):
    cy, py = KERNELS["cython"], KERNELS["python"]
    hi = 1 << (n * (n - 1) // 2)
    assert cy.scan_range(n, 0, hi, dedup) == py.scan_range(n, 0, hi, dedup)
    mid = hi // 3
    assert cy.scan_range(n, mid, hi, dedup) == py.scan_range(n, mid, hi, dedup)


def test_hitting_set_examples(kern):
    assert kern.min_hitting_set([0b011, 0b110], 3, 1) == (1, 0b010)
    assert kern.min_hitting_set([0b001, 0b100], 3, 1) == (2, 0b101)
    assert kern.min_hitting_set([], 3, 1) == (1, 0b001)
    assert kern.min_hitting_set([0], 3, 1)[0] == -1


def test_vertex_cover_examples(kern):
    # triangle needs 2, a 4-path needs 2, empty graph needs 0
    tri = [0b110, 0b101, 0b011]
    assert kern.vertex_cover_rows(tri, 3)[0] == 2
    p4 = [0b0010, 0b0101, 0b1010, 0b0100]
    assert kern.vertex_cover_rows(p4, 4)[0] == 2
    assert kern.vertex_cover_rows([0, 0, 0], 3) == (0, 0)


def test_pure_python_selected_by_env():
    env = dict(os.environ, METDIM_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "import metdim; print(metdim.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    ).stdout.strip()
    assert out == "python"


def test_pure_python_search_end_to_end():
    env = dict(os.environ, METDIM_PURE_PYTHON="1")
    r = subprocess.run(
        [sys.executable, "-m", "metdim", "search", "--order", "5", "--diff", "strong-mixed", "--jobs", "1"],
        env=env, capture_output=True, text=True,
    )
    assert r.returncode == 0, r.stderr
    assert '"value": 0' in r.stdout


def test_pykernel_constants():
    assert _pykernel.BACKEND == "python"
    assert _pykernel.pair_index(4) == [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]

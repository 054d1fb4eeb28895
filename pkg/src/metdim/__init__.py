"""Exact metric, edge, mixed and strong metric dimension, with exhaustive
extremal-difference search over small connected graphs."""

from ._backend import BACKEND
from .enumeration import DiffSearchReport, DiffSpec, enumerate_connected, max_diff, min_diff
from .families import FamilySpec, make_family, parse_family
from .graph import (
    DistMatrix,
    Edge,
    Graph,
    bfs_distances,
    canonical_code,
    degree_stats,
    edge_vertex_distance,
    graph6_decode,
    graph6_encode,
    is_connected,
)
from .metrics import Certificate, Variant, Vertex, solve, solve_all

__all__ = [
    "BACKEND",
    "Certificate",
    "DiffSearchReport",
    "DiffSpec",
    "DistMatrix",
    "Edge",
    "FamilySpec",
    "Graph",
    "Variant",
    "Vertex",
    "bfs_distances",
    "canonical_code",
    "degree_stats",
    "edge_vertex_distance",
    "enumerate_connected",
    "graph6_decode",
    "graph6_encode",
    "is_connected",
    "make_family",
    "max_diff",
    "min_diff",
    "parse_family",
    "solve",
    "solve_all",
]

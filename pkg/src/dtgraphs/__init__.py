"""Doubly threshold graphs: recognition with certificates, weight synthesis
and closed-form metrics."""
from ._backend import BACKEND
from .graph import DistanceDecomposition, Graph, bfs_layers, build_graph, read_edge_list, write_edge_list
from .recognition import (
    Certificate, PMaxPartition, build_2sat, compute_w_set, is_p_admissible, is_threshold,
    is_unit_interval, p_max_partition, recognize, vicinal_preorder,
)
from .twosat import TwoSatInstance, evaluate, solve
from .weights import WeightAssignment, edge_exists, realize, synthesize, verify_dt

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "Certificate", "DistanceDecomposition", "Graph", "PMaxPartition", "TwoSatInstance",
    "WeightAssignment", "bfs_layers", "build_2sat", "build_graph", "compute_w_set", "edge_exists",
    "evaluate", "is_p_admissible", "is_threshold", "is_unit_interval", "p_max_partition",
    "read_edge_list", "realize", "recognize", "solve", "synthesize", "verify_dt",
    "vicinal_preorder", "write_edge_list",
]

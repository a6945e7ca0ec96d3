"""Kernelization for Partial Vertex Cover via expansions and additive expansions."""
from .graph import (
    BipartiteView,
    Graph,
    GraphParseError,
    bipartite_view,
    delete_vertices,
    edges_after_delete,
    parse_graph,
    serialize_graph,
)
from .kernel import (
    ADDITIVE,
    EXPANSION,
    KernelOutcome,
    PvcInstance,
    kernel_bound,
    kernelize,
    lift_solution,
)
from .oracle import solve_pvc_exact
from .vclp import HalfIntegralSolution, solve_vclp, verify_half_integral

__all__ = [
    "ADDITIVE",
    "EXPANSION",
    "BipartiteView",
    "Graph",
    "GraphParseError",
    "HalfIntegralSolution",
    "KernelOutcome",
    "PvcInstance",
    "bipartite_view",
    "delete_vertices",
    "edges_after_delete",
    "kernel_bound",
    "kernelize",
    "lift_solution",
    "parse_graph",
    "serialize_graph",
    "solve_pvc_exact",
    "solve_vclp",
    "verify_half_integral",
]

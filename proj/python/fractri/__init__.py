"""Exact fractional triangle decompositions of dense graphs."""

from ._fractri import (
    DegenerateMinDegree,
    EdgeInNoTriangle,
    Graph,
    GuardrailExceeded,
    InvalidInput,
    StrandedEdge,
    decompose,
    generate,
    lp_feasible,
    read_edge_list,
    verify,
    write_edge_list,
)

__all__ = [
    "DegenerateMinDegree",
    "EdgeInNoTriangle",
    "Graph",
    "GuardrailExceeded",
    "InvalidInput",
    "StrandedEdge",
    "decompose",
    "generate",
    "lp_feasible",
    "read_edge_list",
    "verify",
    "write_edge_list",
]

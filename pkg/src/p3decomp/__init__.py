"""Directed P3-decompositions: decide, construct, or refute with a certificate."""

from .digraph import (Arc, Digraph, Partition3, arc_count_between, cut_degrees,
                      new_digraph, partition_slack, structural_predicates)
from .linegraph import (LineGraph, P3Policy, build_line_graph, component_analysis,
                        line_graph_connected, split_transform)
from .matching import (UGraph, bipartite_max_matching, fractional_pm, gallai_edmonds,
                       hall_violator, max_matching, tutte_witness)
from .decomposition import (Certificate, P3Decomposition, check_bipartite,
                            check_fractional, check_tournament, decompose,
                            kotzig_undirected, verify_certificate, verify_decomposition)
from .euler import euler_tour, is_eulerian, line_hamilton_cycle
from .generators import generate

__version__ = "0.1.0"

__all__ = [
    "Arc", "Digraph", "Partition3", "arc_count_between", "cut_degrees", "new_digraph",
    "partition_slack", "structural_predicates",
    "LineGraph", "P3Policy", "build_line_graph", "component_analysis",
    "line_graph_connected", "split_transform",
    "UGraph", "bipartite_max_matching", "fractional_pm", "gallai_edmonds", "hall_violator",
    "max_matching", "tutte_witness",
    "Certificate", "P3Decomposition", "check_bipartite", "check_fractional",
    "check_tournament", "decompose", "kotzig_undirected", "verify_certificate",
    "verify_decomposition",
    "euler_tour", "is_eulerian", "line_hamilton_cycle", "generate",
]

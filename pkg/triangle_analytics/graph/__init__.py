"""
Graph storage, encodings and projections.
"""

from triangle_analytics.graph.matrix import AdjacencyMatrix, build_matrix
from triangle_analytics.graph.ordering import DegreeOrdering, induced_high_degree_subgraph, reorder_by_degree
from triangle_analytics.graph.structures import Graph, Triangle, normalize_pairs, validate

__all__ = [
    "AdjacencyMatrix",
    "DegreeOrdering",
    "Graph",
    "Triangle",
    "build_matrix",
    "induced_high_degree_subgraph",
    "normalize_pairs",
    "reorder_by_degree",
    "validate",
]

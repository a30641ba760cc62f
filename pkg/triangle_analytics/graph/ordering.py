"""
Degree ordering and degree-based projections of a Graph.
"""

from __future__ import annotations

from typing import Tuple

import attr
import numpy as np

from triangle_analytics.exceptions import UsageError
from triangle_analytics.graph.structures import OFFSET_DTYPE, Graph


@attr.s(frozen=True, slots=True, eq=False)
class DegreeOrdering:
    """
    Injective numbering of the vertices by non-increasing degree.

    ``eta[v]`` is the rank of vertex ``v``; ``inv[rank]`` gives the vertex back.
    Equal degrees are ranked by ascending vertex id.
    """

    eta: np.ndarray = attr.ib()
    inv: np.ndarray = attr.ib()

    @classmethod
    def from_graph(cls, graph: Graph) -> "DegreeOrdering":
        n = graph.n
        ids = np.arange(n, dtype=np.int64)
        inv = np.lexsort((ids, -graph.degrees()))
        eta = np.empty(n, dtype=np.int64)
        eta[inv] = ids
        return cls(eta, inv.astype(np.int64))

    @property
    def nbytes(self) -> int:
        return self.eta.nbytes + self.inv.nbytes

    def restore(self, graph: Graph) -> Graph:
        """Map a graph labelled by rank back to the original vertex ids."""
        first, second = graph.edge_arrays()
        first, second = self.inv[first], self.inv[second]
        return Graph.from_pairs(graph.n, np.minimum(first, second), np.maximum(first, second))


def reorder_by_degree(graph: Graph) -> Tuple[Graph, DegreeOrdering]:
    """
    Relabel ``graph`` so that vertex ids follow non-increasing degree.

    Returns the relabelled graph, with every neighbor list sorted under the new
    labels, and the ordering mapping old and new ids.
    """
    ordering = DegreeOrdering.from_graph(graph)
    n = graph.n
    degrees = graph.degrees()
    sources = np.repeat(ordering.eta, degrees)
    targets = ordering.eta[graph.neighbors.astype(np.int64)]
    order = np.lexsort((targets, sources))
    offsets = np.zeros(n + 1, dtype=OFFSET_DTYPE)
    np.cumsum(degrees[ordering.inv], out=offsets[1:])
    return Graph(offsets, targets[order]), ordering


def induced_high_degree_subgraph(graph: Graph, k: int) -> Tuple[Graph, np.ndarray]:
    """
    Subgraph induced by the vertices of degree larger than ``k``.

    Returns the subgraph, relabelled ``0 .. n'-1`` in increasing original id,
    and the array mapping every subgraph vertex to its original id.
    """
    if k < 0:
        raise UsageError(f"degree threshold must be non-negative, got {k}")
    keep = graph.degrees() > k
    vertex_map = np.flatnonzero(keep).astype(np.int64)
    new_id = np.full(graph.n, -1, dtype=np.int64)
    new_id[vertex_map] = np.arange(len(vertex_map), dtype=np.int64)
    first, second = graph.edge_arrays()
    retained = keep[first] & keep[second]
    return Graph.from_pairs(len(vertex_map), new_id[first[retained]], new_id[second[retained]]), vertex_map

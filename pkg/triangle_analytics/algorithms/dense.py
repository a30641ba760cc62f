"""
Elementary listing algorithms: direct triple testing, vertex-iterator and
edge-iterator, with their single-vertex and single-edge building blocks.

Every function returns a lazy stream of canonical :class:`Triangle` values.
``list_direct`` is the brute-force reference the other algorithms are checked
against.
"""

from __future__ import annotations

from typing import Iterator, Optional

from triangle_analytics.graph.matrix import AdjacencyMatrix
from triangle_analytics.graph.structures import Graph, Triangle
from triangle_analytics.helpers.probes import RunProbe
from triangle_analytics.helpers.space import representation_ready

TriangleStream = Iterator[Triangle]


def list_direct(a: AdjacencyMatrix) -> TriangleStream:
    """Test every triple ``i < j < k`` against the matrix."""
    representation_ready()
    n = a.n
    for i in range(n):
        for j in range(i + 1, n):
            if not a.has_edge(i, j):
                continue
            for k in range(j + 1, n):
                if a.has_edge(i, k) and a.has_edge(j, k):
                    yield Triangle(i, j, k)


def list_vertex_triangles(g: Graph, a: AdjacencyMatrix, v: int) -> TriangleStream:
    """Every triangle containing ``v``: each pair of N(v) is tested in the matrix."""
    nb = g.neighbor_list
    lo, hi = g.offset_list[v], g.offset_list[v + 1]
    for i in range(lo, hi):
        u = nb[i]
        for j in range(i + 1, hi):
            w = nb[j]
            if a.has_edge(u, w):
                yield Triangle.of(v, u, w)


def vertex_iterator(g: Graph, a: AdjacencyMatrix, probe: Optional[RunProbe] = None) -> TriangleStream:
    """
    Run :func:`list_vertex_triangles` on every vertex.

    Each triangle is found once per vertex; only the emission from its middle
    vertex is kept.
    """
    representation_ready()
    for v in range(g.n):
        for triangle in list_vertex_triangles(g, a, v):
            if probe is not None:
                probe.emissions += 1
            if triangle.b == v:
                yield triangle


def list_edge_triangles(g: Graph, u: int, v: int) -> TriangleStream:
    """
    Every triangle containing the edge ``(u, v)``, by merging N(u) and N(v).

    The edge itself is not checked; on a non-edge this reports the common
    neighbors all the same.
    """
    for w in g.common_neighbors(u, v):
        yield Triangle.of(u, v, w)


def edge_iterator(g: Graph, probe: Optional[RunProbe] = None) -> TriangleStream:
    """Run the edge merge on every edge ``u < v``, keeping third vertices ``w > v``."""
    representation_ready()
    for u, v in g.edges():
        for w in g.common_neighbors(u, v):
            if probe is not None:
                probe.emissions += 1
            if w > v:
                yield Triangle(u, v, w)

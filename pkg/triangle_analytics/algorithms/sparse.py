"""
Listing algorithms running in O(m^(3/2)) time.

- ``tree_listing``: repeatedly list the triangles touching a covering forest,
  then remove the forest edges from the matrix.
- ``ayz_listing``: low-degree vertices through the matrix, the high-degree core
  through the edge-iterator.
- ``forward`` / ``compact_forward``: intersect neighbor sets restricted to
  vertices of smaller rank in the non-increasing degree order.
- ``new_listing`` / ``new_listing_constant_space``: high-degree vertices
  through a marks array (or binary search), low-degree edges through merging.

All streams report triangles in original vertex ids, in canonical form, each
exactly once.
"""

from __future__ import annotations

import logging
from bisect import bisect_left
from collections import deque
from math import isqrt
from typing import Iterator, List, Optional, Tuple

import attr

from triangle_analytics.algorithms.dense import TriangleStream, edge_iterator, list_vertex_triangles
from triangle_analytics.exceptions import ConsistencyError, UsageError
from triangle_analytics.graph.matrix import AdjacencyMatrix
from triangle_analytics.graph.ordering import DegreeOrdering, induced_high_degree_subgraph, reorder_by_degree
from triangle_analytics.graph.structures import Graph, Triangle
from triangle_analytics.helpers.probes import RunProbe
from triangle_analytics.helpers.space import representation_ready

logger = logging.getLogger(__name__)

NO_FATHER = -1


def forward_set_bound(m: int) -> int:
    """``ceil(sqrt(2m))``: no forward set may grow beyond it."""
    return isqrt(2 * m - 1) + 1 if m else 0


def tree_round_bound(m: int) -> int:
    """Maximum number of tree-listing rounds on ``m`` edges."""
    return 2 * (isqrt(m - 1) + 1 if m else 0) + 1


def _check_threshold(k: int) -> None:
    if k < 0:
        raise UsageError(f"degree threshold must be non-negative, got {k}")


@attr.s(frozen=True, slots=True)
class CoveringForest:
    """
    Breadth-first spanning forest of the edges still set in a matrix.

    ``father[v]`` is ``NO_FATHER`` for roots; ``component[v]`` numbers the
    connected components.
    """
    father: List[int] = attr.ib()
    component: List[int] = attr.ib()

    @classmethod
    def build(cls, g: Graph, a: AdjacencyMatrix) -> "CoveringForest":
        n = g.n
        off, nb = g.offset_list, g.neighbor_list
        father = [NO_FATHER] * n
        component = [-1] * n
        next_component = 0
        for root in range(n):
            if component[root] != -1:
                continue
            component[root] = next_component
            queue = deque([root])
            while queue:
                x = queue.popleft()
                for i in range(off[x], off[x + 1]):
                    w = nb[i]
                    if component[w] == -1 and a.has_edge(x, w):
                        component[w] = next_component
                        father[w] = x
                        queue.append(w)
            next_component += 1
        return cls(father, component)

    def is_tree_edge(self, u: int, v: int) -> bool:
        return self.father[u] == v or self.father[v] == u

    def tree_edges(self) -> Iterator[Tuple[int, int]]:
        for v, f in enumerate(self.father):
            if f != NO_FATHER:
                yield v, f


def tree_listing(g: Graph, a: AdjacencyMatrix, probe: Optional[RunProbe] = None) -> TriangleStream:
    """
    List triangles by peeling covering forests off the matrix.

    Each round builds a covering forest of the remaining edges, checks
    ``{u, v, father(u)}`` and ``{u, v, father(v)}`` for every remaining
    non-tree edge ``(u, v)``, then clears the forest edges in ``a``.
    ``a`` is consumed: it holds no edge once the stream is exhausted.
    """
    representation_ready()
    remaining = g.m
    seen = set()
    while remaining > 0:
        if probe is not None:
            probe.rounds += 1
        forest = CoveringForest.build(g, a)
        father = forest.father
        for u, v in g.edges():
            if not a.has_edge(u, v) or forest.is_tree_edge(u, v):
                continue
            for x in (father[u], father[v]):
                if x == NO_FATHER or x == u or x == v:
                    continue
                if a.has_edge(x, u) and a.has_edge(x, v):
                    if probe is not None:
                        probe.emissions += 1
                    triangle = Triangle.of(u, v, x)
                    if triangle not in seen:
                        seen.add(triangle)
                        yield triangle
        for v, f in forest.tree_edges():
            a.clear_edge(v, f)
            remaining -= 1


def ayz_listing(g: Graph, a: AdjacencyMatrix, k: int, probe: Optional[RunProbe] = None) -> TriangleStream:
    """
    Split at degree ``k``.

    Triangles with a vertex of degree at most ``k`` are listed from their
    smallest such vertex through the matrix; the rest by the edge-iterator on
    the subgraph induced by the vertices of degree above ``k``.
    """
    _check_threshold(k)
    representation_ready()
    off = g.offset_list

    def is_low(x: int) -> bool:
        return off[x + 1] - off[x] <= k

    for v in range(g.n):
        if not is_low(v):
            continue
        for triangle in list_vertex_triangles(g, a, v):
            if probe is not None:
                probe.emissions += 1
            if all(x >= v or not is_low(x) for x in triangle):
                yield triangle

    core, vertex_map = induced_high_degree_subgraph(g, k)
    back = vertex_map.tolist()
    for triangle in edge_iterator(core, probe):
        # vertex_map is increasing, so the mapped triple stays canonical
        yield Triangle(back[triangle.a], back[triangle.b], back[triangle.c])


def forward(g: Graph, probe: Optional[RunProbe] = None) -> TriangleStream:
    """
    Process vertices in degree order, keeping for every vertex the set of its
    already processed neighbors and intersecting the two sets of each edge.

    Raises:
        ConsistencyError: when a set outgrows ``ceil(sqrt(2m))``.
    """
    representation_ready()
    ordering = DegreeOrdering.from_graph(g)
    eta = ordering.eta.tolist()
    inv = ordering.inv.tolist()
    off, nb = g.offset_list, g.neighbor_list
    bound = forward_set_bound(g.m)
    sets: List[List[int]] = [[] for _ in range(g.n)]
    largest = 0

    for rank, v in enumerate(inv):
        set_v = sets[v]
        for i in range(off[v], off[v + 1]):
            u = nb[i]
            if eta[u] <= rank:
                continue
            set_u = sets[u]
            p = q = 0
            while p < len(set_u) and q < len(set_v):
                x, y = set_u[p], set_v[q]
                if x < y:
                    p += 1
                elif x > y:
                    q += 1
                else:
                    if probe is not None:
                        probe.emissions += 1
                    yield Triangle.of(v, u, inv[x])
                    p += 1
                    q += 1
            set_u.append(rank)
            if len(set_u) > largest:
                largest = len(set_u)
                if probe is not None:
                    probe.max_forward_set = largest
                if largest > bound:
                    raise ConsistencyError(
                        f"forward set of vertex {u} reached {largest} > ceil(sqrt(2m)) = {bound}"
                    )


def compact_forward(
    g: Graph,
    probe: Optional[RunProbe] = None,
    relabelled: Optional[Tuple[Graph, DegreeOrdering]] = None,
) -> TriangleStream:
    """
    Forward without per-vertex sets.

    The graph is relabelled by degree order; for every edge ``v < u`` the
    prefixes of N(v) and N(u) below ``v`` are merged in place. Triangles are
    mapped back to original ids on output.

    ``relabelled`` is ``reorder_by_degree(g)`` built together with the graph
    representation. Without it the relabelled copy is built here and counts
    as working space, O(m) rather than O(n).
    """
    if relabelled is None:
        representation_ready()
        h, ordering = reorder_by_degree(g)
    else:
        h, ordering = relabelled
        representation_ready(retained_bytes=ordering.nbytes)
    inv = ordering.inv.tolist()
    off, nb = h.offset_list, h.neighbor_list

    for v in range(h.n):
        v_start, v_end = off[v], off[v + 1]
        for s in range(bisect_left(nb, v + 1, v_start, v_end), v_end):
            u = nb[s]
            i, i_end = off[u], off[u + 1]
            j = v_start
            while i < i_end and j < v_end:
                x, y = nb[i], nb[j]
                if x >= v or y >= v:
                    break
                if x < y:
                    i += 1
                elif x > y:
                    j += 1
                else:
                    if probe is not None:
                        probe.emissions += 1
                    yield Triangle.of(inv[v], inv[u], inv[x])
                    i += 1
                    j += 1


def new_vertex_listing(g: Graph, v: int, marks: List[bool]) -> Iterator[Tuple[int, int, int]]:
    """
    Every triangle containing ``v``, as raw ``(v, u, w)`` triples.

    Neighbors of ``v`` are marked, then every neighbor's list is scanned for
    marked vertices, so each triangle is reported once per orientation.
    ``marks`` must be all false on entry and is all false again on exit, even
    when the stream is closed early.
    """
    off, nb = g.offset_list, g.neighbor_list
    lo, hi = off[v], off[v + 1]
    for i in range(lo, hi):
        marks[nb[i]] = True
    try:
        for i in range(lo, hi):
            u = nb[i]
            for j in range(off[u], off[u + 1]):
                w = nb[j]
                if marks[w]:
                    yield v, u, w
    finally:
        for i in range(lo, hi):
            marks[nb[i]] = False


def _low_edge_triangles(g: Graph, k: int, probe: Optional[RunProbe]) -> TriangleStream:
    """Edges with both ends of degree at most ``k``; third vertex high or above ``v``."""
    off = g.offset_list
    for u, v in g.edges():
        if off[u + 1] - off[u] > k or off[v + 1] - off[v] > k:
            continue
        for w in g.common_neighbors(u, v):
            if probe is not None:
                probe.emissions += 1
            if off[w + 1] - off[w] > k or w > v:
                yield Triangle.of(u, v, w)


def new_listing(g: Graph, k: int, probe: Optional[RunProbe] = None) -> TriangleStream:
    """
    Split at degree ``k``: vertices of degree above ``k`` through
    :func:`new_vertex_listing` with one shared marks array, edges between
    vertices of degree at most ``k`` through merging.

    On the high-degree path a raw ``(v, u, w)`` is kept when ``u`` is high and
    either ``w`` is high with ``v > u > w``, or ``w`` is low with ``v > u``.
    """
    _check_threshold(k)
    representation_ready()
    off = g.offset_list
    marks = [False] * g.n
    for v in range(g.n):
        if off[v + 1] - off[v] <= k:
            continue
        for _, u, w in new_vertex_listing(g, v, marks):
            if probe is not None:
                probe.emissions += 1
            if u >= v or off[u + 1] - off[u] <= k:
                continue
            if off[w + 1] - off[w] <= k or u > w:
                yield Triangle.of(v, u, w)
    yield from _low_edge_triangles(g, k, probe)


def new_listing_constant_space(g: Graph, k: int, probe: Optional[RunProbe] = None) -> TriangleStream:
    """
    :func:`new_listing` with the marks array replaced by a binary search for
    ``w`` in N(v).
    """
    _check_threshold(k)
    representation_ready()
    off, nb = g.offset_list, g.neighbor_list
    for v in range(g.n):
        v_start, v_end = off[v], off[v + 1]
        if v_end - v_start <= k:
            continue
        for s in range(v_start, v_end):
            u = nb[s]
            if u >= v:
                break
            if off[u + 1] - off[u] <= k:
                continue
            for t in range(off[u], off[u + 1]):
                w = nb[t]
                if off[w + 1] - off[w] > k and w >= u:
                    continue
                idx = bisect_left(nb, w, v_start, v_end)
                if idx < v_end and nb[idx] == w:
                    if probe is not None:
                        probe.emissions += 1
                    yield Triangle.of(v, u, w)
    yield from _low_edge_triangles(g, k, probe)

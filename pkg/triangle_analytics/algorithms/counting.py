"""
Finding, counting and pseudo-listing.

``matrix_count`` reads the diagonal of A³ off packed rows: for every edge
``(v, u)`` the popcount of ``row(v) & row(u)`` is ``(A²)_uv``, and
``(A³)_vv`` sums those over the neighbors of ``v``.
"""

from __future__ import annotations

import logging
from typing import Callable, Iterable, Optional, Tuple

import attr
import numpy as np

from triangle_analytics.algorithms.sparse import compact_forward
from triangle_analytics.exceptions import ConsistencyError, UsageError
from triangle_analytics.graph.matrix import POPCOUNT, AdjacencyMatrix, build_matrix
from triangle_analytics.graph.ordering import induced_high_degree_subgraph
from triangle_analytics.graph.structures import Graph, Triangle
from triangle_analytics.helpers.space import representation_ready

logger = logging.getLogger(__name__)

DEFAULT_BLOCK_ROWS = 256
# upper bound on the temporary row-intersection buffer
MAX_INTERSECTION_BYTES = 1 << 24


@attr.s(frozen=True, slots=True)
class TriangleReport:
    """
    Total triangle count and, optionally, the number of triangles at each vertex.

    Invariants: ``sum(per_vertex) == 3 * total``.
    """
    total: int = attr.ib()
    per_vertex: Optional[Tuple[int, ...]] = attr.ib(default=None)

    @classmethod
    def from_counts(cls, counts) -> "TriangleReport":
        """Build from per-vertex counts, deriving the total."""
        per_vertex = tuple(int(c) for c in counts)
        summed = sum(per_vertex)
        if summed % 3:
            raise ConsistencyError(f"per-vertex counts sum to {summed}, not a multiple of 3")
        return cls(summed // 3, per_vertex)


def cube_diagonal(a: AdjacencyMatrix, block_rows: int = DEFAULT_BLOCK_ROWS) -> np.ndarray:
    """
    Diagonal of A³ as an int64 array.

    Rows are unpacked ``block_rows`` at a time to enumerate the edges; the row
    intersections are then popcounted in chunks bounded by
    ``MAX_INTERSECTION_BYTES``.
    """
    if block_rows < 1:
        raise UsageError(f"block_rows must be positive, got {block_rows}")
    n = a.n
    diagonal = np.zeros(n, dtype=np.int64)
    if n == 0:
        return diagonal
    chunk = max(1, MAX_INTERSECTION_BYTES // max(1, a.row_bytes))
    for start in range(0, n, block_rows):
        block = np.unpackbits(a.bits[start:start + block_rows], axis=1, count=n)
        rows, cols = np.nonzero(block)
        rows += start
        for lo in range(0, len(rows), chunk):
            r, c = rows[lo:lo + chunk], cols[lo:lo + chunk]
            shared = POPCOUNT[a.bits[r] & a.bits[c]].sum(axis=1, dtype=np.int64)
            np.add.at(diagonal, r, shared)
    return diagonal


def matrix_count(a: AdjacencyMatrix, block_rows: int = DEFAULT_BLOCK_ROWS) -> TriangleReport:
    """
    Count through the diagonal of A³: ``T[v] = (A³)_vv / 2``, ``N = trace / 6``.

    Raises:
        ConsistencyError: when the diagonal is not even or the trace not a
            multiple of 6, which no valid matrix produces.
    """
    representation_ready()
    diagonal = cube_diagonal(a, block_rows)
    trace = int(diagonal.sum())
    if trace % 6 or np.any(diagonal % 2):
        raise ConsistencyError(f"A^3 diagonal is not consistent with a simple graph (trace={trace})")
    return TriangleReport(trace // 6, tuple((diagonal // 2).tolist()))


def ayz_pseudo_listing(
    g: Graph,
    a: AdjacencyMatrix,
    k: int,
    block_rows: int = DEFAULT_BLOCK_ROWS,
) -> TriangleReport:
    """
    Per-vertex counts, splitting at degree ``k``.

    Each vertex ``v`` of degree at most ``k`` tests the pairs of its neighbors
    in the matrix. A found triangle ``{v, u, w}`` credits ``v``, and credits a
    neighbor of degree above ``k`` only once: always when both neighbors are
    high, and only from the smaller low vertex otherwise. Vertices of degree
    above ``k`` get their remaining counts from :func:`matrix_count` on the
    subgraph they induce.
    """
    if k < 0:
        raise UsageError(f"degree threshold must be non-negative, got {k}")
    representation_ready()
    off, nb = g.offset_list, g.neighbor_list
    counts = np.zeros(g.n, dtype=np.int64)

    for v in range(g.n):
        lo, hi = off[v], off[v + 1]
        if hi - lo > k:
            continue
        for i in range(lo, hi):
            u = nb[i]
            u_high = off[u + 1] - off[u] > k
            for j in range(i + 1, hi):
                w = nb[j]
                if not a.has_edge(u, w):
                    continue
                counts[v] += 1
                w_high = off[w + 1] - off[w] > k
                if u_high and w_high:
                    counts[u] += 1
                    counts[w] += 1
                elif u_high and w > v:
                    counts[u] += 1
                elif w_high and u > v:
                    counts[w] += 1

    core, vertex_map = induced_high_degree_subgraph(g, k)
    if core.m:
        core_report = matrix_count(build_matrix(core), block_rows)
        counts[vertex_map] += np.asarray(core_report.per_vertex, dtype=np.int64)
    return TriangleReport.from_counts(counts)


def fold_stream(
    stream: Iterable[Triangle],
    counts: Optional[np.ndarray] = None,
    sink: Optional[Callable[[Triangle], None]] = None,
) -> int:
    """
    Consume a triangle stream and return its length.

    ``counts``, when given, is incremented once per triangle at each of its
    vertices; ``sink`` receives every triangle.
    """
    total = 0
    for triangle in stream:
        total += 1
        if counts is not None:
            counts[triangle.a] += 1
            counts[triangle.b] += 1
            counts[triangle.c] += 1
        if sink is not None:
            sink(triangle)
    return total


def count_from_stream(stream: Iterable[Triangle], n: int) -> TriangleReport:
    """Fold a stream emitting each triangle once into a full report."""
    counts = np.zeros(n, dtype=np.int64)
    total = fold_stream(stream, counts)
    return TriangleReport(total, tuple(counts.tolist()))


def find_any(g: Graph) -> Optional[Triangle]:
    """Some triangle of ``g``, or None; stops at the first one found."""
    stream = compact_forward(g)
    try:
        return next(stream, None)
    finally:
        stream.close()

"""
Packed adjacency-matrix view of a Graph.

Rows are stored as ``numpy.packbits`` bytes (most significant bit first), one
bit per vertex pair. The matrix is the only mutable structure of the package:
tree-listing removes edges by clearing bits, leaving the adjacency arrays
untouched, so a matrix must stay confined to one algorithm run while it is
being cleared.
"""

from __future__ import annotations

import numpy as np

from triangle_analytics.exceptions import CapacityError
from triangle_analytics.graph.structures import Graph

# popcount of every byte value
POPCOUNT = np.array([bin(value).count("1") for value in range(256)], dtype=np.uint8)


class AdjacencyMatrix:
    """Symmetric n x n boolean matrix with a zero diagonal."""

    __slots__ = ("n", "bits")

    def __init__(self, n: int, bits: np.ndarray):
        self.n = n
        self.bits = bits

    @property
    def row_bytes(self) -> int:
        return self.bits.shape[1] if self.bits.ndim == 2 else 0

    def has_edge(self, i: int, j: int) -> bool:
        return bool((int(self.bits[i, j >> 3]) >> (7 - (j & 7))) & 1)

    def clear_edge(self, i: int, j: int) -> None:
        """Zero ``A[i][j]`` and ``A[j][i]``."""
        self.bits[i, j >> 3] &= np.uint8(0xFF ^ (0x80 >> (j & 7)))
        self.bits[j, i >> 3] &= np.uint8(0xFF ^ (0x80 >> (i & 7)))

    def row(self, i: int) -> np.ndarray:
        """Row ``i`` unpacked to an ``n``-long 0/1 array."""
        return np.unpackbits(self.bits[i], count=self.n)

    def edge_count(self) -> int:
        """Number of undirected edges still present."""
        return int(POPCOUNT[self.bits].sum(dtype=np.int64)) // 2

    def copy(self) -> "AdjacencyMatrix":
        return AdjacencyMatrix(self.n, self.bits.copy())

    def __repr__(self):
        return f"<AdjacencyMatrix: n={self.n}>"


def build_matrix(graph: Graph) -> AdjacencyMatrix:
    """
    Build the adjacency matrix of ``graph``.

    Raises:
        CapacityError: when the n²-bit allocation fails.
    """
    n = graph.n
    try:
        bits = np.zeros((n, (n + 7) // 8), dtype=np.uint8)
    except (MemoryError, ValueError) as exc:
        raise CapacityError(f"cannot allocate a {n}x{n} adjacency matrix") from exc
    rows = np.repeat(np.arange(n, dtype=np.int64), graph.degrees())
    cols = graph.neighbors.astype(np.int64)
    np.bitwise_or.at(bits, (rows, cols >> 3), (0x80 >> (cols & 7)).astype(np.uint8))
    return AdjacencyMatrix(n, bits)

"""
Sorted adjacency-array storage for undirected simple graphs.

A Graph keeps the concatenated, per-vertex sorted neighbor lists (``neighbors``,
length 2m) and the start index of every vertex in them (``offsets``, length n+1).
The numpy arrays back file IO and vectorised statistics; plain-list mirrors of
both are built once at construction and back the scalar loops of the listing
algorithms. Both belong to the graph storage, not to any algorithm.
"""

from __future__ import annotations

from bisect import bisect_left
from typing import Iterator, List, NamedTuple, Tuple

import attr
import numpy as np

from triangle_analytics.exceptions import GraphFormatError

MAX_VERTEX_ID = 2**32 - 1

OFFSET_DTYPE = np.int64
NEIGHBOR_DTYPE = np.uint32


class Triangle(NamedTuple):
    """A triangle in canonical form ``a < b < c``."""

    a: int
    b: int
    c: int

    @classmethod
    def of(cls, x: int, y: int, z: int) -> "Triangle":
        """Build the canonical triangle of three distinct vertices given in any order."""
        if x > y:
            x, y = y, x
        if y > z:
            y, z = z, y
        if x > y:
            x, y = y, x
        return cls(x, y, z)

    def __str__(self) -> str:
        return f"{self.a} {self.b} {self.c}"


@attr.s(frozen=True, slots=True, eq=False, repr=False)
class Graph:
    """
    Immutable undirected simple graph on vertices ``0 .. n-1``.

    Invariants (checked by :func:`validate`):
      - neighbors of every vertex are strictly increasing, with no self-loop;
      - ``u in N(v)`` iff ``v in N(u)``;
      - ``offsets[0] == 0`` and ``offsets[n] == 2m``.
    """

    offsets: np.ndarray = attr.ib()
    neighbors: np.ndarray = attr.ib()
    offset_list: List[int] = attr.ib(init=False)
    neighbor_list: List[int] = attr.ib(init=False)

    def __attrs_post_init__(self):
        object.__setattr__(self, "offsets", np.ascontiguousarray(self.offsets, dtype=OFFSET_DTYPE))
        object.__setattr__(self, "neighbors", np.ascontiguousarray(self.neighbors, dtype=NEIGHBOR_DTYPE))
        object.__setattr__(self, "offset_list", self.offsets.tolist())
        object.__setattr__(self, "neighbor_list", self.neighbors.tolist())

    @classmethod
    def empty(cls, n: int) -> "Graph":
        """Return the graph with ``n`` vertices and no edge."""
        return cls(np.zeros(n + 1, dtype=OFFSET_DTYPE), np.zeros(0, dtype=NEIGHBOR_DTYPE))

    @classmethod
    def from_pairs(cls, n: int, first: np.ndarray, second: np.ndarray) -> "Graph":
        """
        Build a graph from unique undirected pairs.

        ``first[i] < second[i]`` and no pair repeats; see :func:`normalize_pairs`
        for arbitrary input.
        """
        first = np.asarray(first, dtype=np.int64)
        second = np.asarray(second, dtype=np.int64)
        sources = np.concatenate([first, second])
        targets = np.concatenate([second, first])
        order = np.lexsort((targets, sources))
        counts = np.bincount(sources, minlength=n)
        offsets = np.zeros(n + 1, dtype=OFFSET_DTYPE)
        np.cumsum(counts, out=offsets[1:])
        return cls(offsets, targets[order])

    @property
    def n(self) -> int:
        return len(self.offset_list) - 1

    @property
    def m(self) -> int:
        return len(self.neighbor_list) // 2

    def degree(self, v: int) -> int:
        return self.offset_list[v + 1] - self.offset_list[v]

    def degrees(self) -> np.ndarray:
        """Degrees of all vertices as an int64 array."""
        return np.diff(self.offsets)

    def max_degree(self) -> int:
        return int(self.degrees().max()) if self.n else 0

    def neighbors_of(self, v: int) -> List[int]:
        """Sorted copy of N(v)."""
        return self.neighbor_list[self.offset_list[v]:self.offset_list[v + 1]]

    def has_edge(self, u: int, v: int) -> bool:
        """Binary search for ``v`` in N(u)."""
        lo, hi = self.offset_list[u], self.offset_list[u + 1]
        i = bisect_left(self.neighbor_list, v, lo, hi)
        return i < hi and self.neighbor_list[i] == v

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Every undirected edge once, as ``(u, v)`` with ``u < v``, in lexicographic order."""
        off, nb = self.offset_list, self.neighbor_list
        for u in range(self.n):
            for i in range(off[u], off[u + 1]):
                if nb[i] > u:
                    yield u, nb[i]

    def edge_arrays(self) -> Tuple[np.ndarray, np.ndarray]:
        """All undirected edges as two int64 arrays ``(u, v)`` with ``u < v``."""
        sources = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees())
        targets = self.neighbors.astype(np.int64)
        keep = sources < targets
        return sources[keep], targets[keep]

    def common_neighbors(self, u: int, v: int) -> Iterator[int]:
        """Linear merge of the sorted lists N(u) and N(v)."""
        off, nb = self.offset_list, self.neighbor_list
        i, i_end = off[u], off[u + 1]
        j, j_end = off[v], off[v + 1]
        while i < i_end and j < j_end:
            x, y = nb[i], nb[j]
            if x < y:
                i += 1
            elif x > y:
                j += 1
            else:
                yield x
                i += 1
                j += 1

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            np.array_equal(self.offsets, other.offsets)
            and np.array_equal(self.neighbors, other.neighbors)
        )

    def __hash__(self):
        return hash((self.n, self.m, self.neighbors.tobytes()))

    def __repr__(self):
        return f"<Graph: n={self.n} m={self.m}>"


def normalize_pairs(sources, targets) -> Tuple[np.ndarray, np.ndarray, int, int]:
    """
    Turn raw endpoint arrays into unique undirected pairs ``(u < v)``.

    Returns ``(first, second, loops, duplicates)`` where ``loops`` and
    ``duplicates`` count the dropped self-loops and repeated edges (in either
    direction).
    """
    sources = np.asarray(sources, dtype=np.int64)
    targets = np.asarray(targets, dtype=np.int64)
    not_loop = sources != targets
    loops = int(len(sources) - np.count_nonzero(not_loop))
    low = np.minimum(sources, targets)[not_loop]
    high = np.maximum(sources, targets)[not_loop]
    if len(low) == 0:
        return low, high, loops, 0
    pairs = np.unique(np.stack([low, high], axis=1), axis=0)
    duplicates = len(low) - len(pairs)
    return pairs[:, 0], pairs[:, 1], loops, duplicates


def validate(graph: Graph) -> Graph:
    """
    Check every storage invariant of ``graph`` and return it.

    Raises:
        GraphFormatError: on the first broken invariant.
    """
    offsets, neighbors = graph.offsets, graph.neighbors.astype(np.int64)
    n = len(offsets) - 1
    if n < 0 or offsets[0] != 0:
        raise GraphFormatError("offsets must start at 0")
    if offsets[-1] != len(neighbors) or len(neighbors) % 2:
        raise GraphFormatError("offsets[n] must equal the (even) neighbor count 2m")
    degrees = np.diff(offsets)
    if np.any(degrees < 0):
        raise GraphFormatError("offsets must be non-decreasing")
    if len(neighbors) == 0:
        return graph
    if neighbors.max() >= n:
        raise GraphFormatError("neighbor id out of range")
    owners = np.repeat(np.arange(n, dtype=np.int64), degrees)
    if np.any(owners == neighbors):
        raise GraphFormatError("self-loop in adjacency")
    same_owner = owners[1:] == owners[:-1]
    if np.any(np.diff(neighbors)[same_owner] <= 0):
        raise GraphFormatError("neighbor lists must be strictly increasing")
    forward = np.sort(owners * n + neighbors)
    backward = np.sort(neighbors * n + owners)
    if not np.array_equal(forward, backward):
        raise GraphFormatError("adjacency is not symmetric")
    return graph

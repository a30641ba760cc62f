"""
Registry of the algorithms reachable by name from the command and the tuning service.
"""

from __future__ import annotations

from typing import Callable, Dict, Optional, Tuple, Union

import attr

from triangle_analytics.algorithms import counting, dense, sparse
from triangle_analytics.algorithms.counting import DEFAULT_BLOCK_ROWS, TriangleReport
from triangle_analytics.algorithms.dense import TriangleStream
from triangle_analytics.exceptions import UsageError
from triangle_analytics.graph.matrix import AdjacencyMatrix
from triangle_analytics.graph.ordering import DegreeOrdering
from triangle_analytics.graph.structures import Graph
from triangle_analytics.helpers.probes import RunProbe

LISTING = "listing"
COUNTING = "counting"

Outcome = Union[TriangleStream, TriangleReport]


@attr.s(frozen=True, slots=True)
class AlgorithmEntry:
    """
    One named algorithm.

    ``kind`` is ``listing`` (yields triangles) or ``counting`` (returns a
    TriangleReport). ``consumes_matrix`` marks algorithms that clear the
    matrix they are given, so callers must hand them a private copy.
    ``needs_relabelling`` marks algorithms that take the degree-relabelled
    graph from the caller; they build it themselves when it is not given.
    """
    name: str = attr.ib()
    kind: str = attr.ib()
    needs_matrix: bool = attr.ib()
    takes_k: bool = attr.ib()
    time_class: str = attr.ib()
    space_class: str = attr.ib()
    _impl: Callable[..., Outcome] = attr.ib(repr=False)
    consumes_matrix: bool = attr.ib(default=False)
    needs_relabelling: bool = attr.ib(default=False)

    @property
    def is_listing(self) -> bool:
        return self.kind == LISTING

    def run(
        self,
        g: Graph,
        a: Optional[AdjacencyMatrix] = None,
        k: Optional[int] = None,
        probe: Optional[RunProbe] = None,
        block_rows: int = DEFAULT_BLOCK_ROWS,
        relabelled: Optional[Tuple[Graph, DegreeOrdering]] = None,
    ) -> Outcome:
        """
        Start the algorithm: a triangle stream for listing entries, a report
        for counting entries.
        """
        if self.needs_matrix and a is None:
            raise UsageError(f"algorithm {self.name} needs an adjacency matrix")
        if self.takes_k and k is None:
            raise UsageError(f"algorithm {self.name} needs a degree threshold K")
        return self._impl(g=g, a=a, k=k, probe=probe, block_rows=block_rows, relabelled=relabelled)


def _entries() -> Tuple[AlgorithmEntry, ...]:
    return (
        AlgorithmEntry(
            "direct", LISTING, True, False, "n^3", "1",
            lambda g, a, k, probe, block_rows, relabelled: dense.list_direct(a),
        ),
        AlgorithmEntry(
            "vertex-iterator", LISTING, True, False, "sum d(v)^2", "1",
            lambda g, a, k, probe, block_rows, relabelled: dense.vertex_iterator(g, a, probe),
        ),
        AlgorithmEntry(
            "edge-iterator", LISTING, False, False, "m d_max", "1",
            lambda g, a, k, probe, block_rows, relabelled: dense.edge_iterator(g, probe),
        ),
        AlgorithmEntry(
            "tree-listing", LISTING, True, False, "m^(3/2)", "n + output",
            lambda g, a, k, probe, block_rows, relabelled: sparse.tree_listing(g, a, probe),
            consumes_matrix=True,
        ),
        AlgorithmEntry(
            "ayz-listing", LISTING, True, True, "m^(3/2)", "n + m",
            lambda g, a, k, probe, block_rows, relabelled: sparse.ayz_listing(g, a, k, probe),
        ),
        AlgorithmEntry(
            "forward", LISTING, False, False, "m^(3/2)", "m",
            lambda g, a, k, probe, block_rows, relabelled: sparse.forward(g, probe),
        ),
        AlgorithmEntry(
            "compact-forward", LISTING, False, False, "m^(3/2)", "n",
            lambda g, a, k, probe, block_rows, relabelled: sparse.compact_forward(g, probe, relabelled),
            needs_relabelling=True,
        ),
        AlgorithmEntry(
            "new-listing", LISTING, False, True, "m^(3/2)", "n",
            lambda g, a, k, probe, block_rows, relabelled: sparse.new_listing(g, k, probe),
        ),
        AlgorithmEntry(
            "new-listing-constant-space", LISTING, False, True, "m^(3/2) sqrt(log n)", "1",
            lambda g, a, k, probe, block_rows, relabelled: sparse.new_listing_constant_space(g, k, probe),
        ),
        AlgorithmEntry(
            "matrix", COUNTING, True, False, "n^omega", "n^2",
            lambda g, a, k, probe, block_rows, relabelled: counting.matrix_count(a, block_rows),
        ),
        AlgorithmEntry(
            "ayz-pseudo-listing", COUNTING, True, True, "m^(2 omega/(omega+1))", "n^2",
            lambda g, a, k, probe, block_rows, relabelled: counting.ayz_pseudo_listing(g, a, k, block_rows),
        ),
    )


ALGORITHMS: Dict[str, AlgorithmEntry] = {entry.name: entry for entry in _entries()}


def get_algorithm(name: str) -> AlgorithmEntry:
    try:
        return ALGORITHMS[name]
    except KeyError:
        raise UsageError(
            f"unknown algorithm {name!r}; expected one of {', '.join(sorted(ALGORITHMS))}"
        ) from None

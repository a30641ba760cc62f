"""
Timing sweeps: one K-parameterized algorithm over a ladder of thresholds, or
several algorithms on the same graph.

Every run of a sweep must report the same triangle total; the timings are
only published once that holds.
"""

from __future__ import annotations

import logging
from typing import Iterable, List, Optional, Sequence, Tuple

import attr
import numpy as np
from django.conf import settings

from triangle_analytics.algorithms.catalog import AlgorithmEntry, get_algorithm
from triangle_analytics.algorithms.counting import fold_stream
from triangle_analytics.exceptions import ConsistencyError, UsageError
from triangle_analytics.graph.matrix import AdjacencyMatrix, build_matrix
from triangle_analytics.graph.structures import Graph
from triangle_analytics.helpers.timing import best_of
from triangle_analytics.policies.matrix_guard import check_matrix_allowed
from triangle_analytics.signals import sweep_completed

logger = logging.getLogger(__name__)


@attr.s(frozen=True, slots=True)
class KSweepRow:
    k: int = attr.ib()
    high_degree_count: int = attr.ib()
    millis: float = attr.ib()
    total: int = attr.ib()


@attr.s(frozen=True, slots=True)
class KSweepResult:
    """Rows sorted by K; ``best_k`` has the smallest recorded time (smallest K on ties)."""
    algorithm: str = attr.ib()
    rows: Tuple[KSweepRow, ...] = attr.ib(converter=lambda rows: tuple(sorted(rows, key=lambda row: row.k)))
    repeat: int = attr.ib(default=1)

    @property
    def total(self) -> int:
        return self.rows[0].total if self.rows else 0

    @property
    def best(self) -> KSweepRow:
        return min(self.rows, key=lambda row: (row.millis, row.k))

    @property
    def best_k(self) -> int:
        return self.best.k

    def to_tsv(self) -> str:
        """``K<TAB>n_K<TAB>millis`` rows followed by a ``# best`` line."""
        lines = [f"{row.k}\t{row.high_degree_count}\t{row.millis:.3f}" for row in self.rows]
        best = self.best
        lines.append(f"# best {self.algorithm} K={best.k} millis={best.millis:.3f} triangles={self.total}")
        return "\n".join(lines) + "\n"


@attr.s(frozen=True, slots=True)
class ComparisonRow:
    algorithm: str = attr.ib()
    k: Optional[int] = attr.ib()
    millis: float = attr.ib()
    total: int = attr.ib()


@attr.s(frozen=True, slots=True)
class ComparisonResult:
    rows: Tuple[ComparisonRow, ...] = attr.ib(converter=tuple)
    repeat: int = attr.ib(default=1)

    @property
    def best(self) -> ComparisonRow:
        return min(self.rows, key=lambda row: row.millis)

    def to_tsv(self) -> str:
        """``algorithm<TAB>K<TAB>millis`` rows followed by a ``# best`` line."""
        lines = [
            f"{row.algorithm}\t{'-' if row.k is None else row.k}\t{row.millis:.3f}"
            for row in self.rows
        ]
        best = self.best
        lines.append(f"# best {best.algorithm} millis={best.millis:.3f} triangles={best.total}")
        return "\n".join(lines) + "\n"


def default_k_ladder(g: Graph) -> List[int]:
    """``0, 1, 2, 4, ...`` below ``d_max + 1``, then ``d_max + 1``."""
    top = g.max_degree() + 1
    ladder = [0]
    k = 1
    while k < top:
        ladder.append(k)
        k *= 2
    ladder.append(top)
    return sorted(set(ladder))


def _block_rows() -> int:
    return getattr(settings, "TRIANGLES_MATRIX_BLOCK_ROWS", 256)


def timed_total(
    entry: AlgorithmEntry,
    g: Graph,
    a: Optional[AdjacencyMatrix],
    k: Optional[int],
    repeat: int = 1,
) -> Tuple[int, float]:
    """Triangle total of one algorithm and the best wall time over ``repeat`` runs."""
    block_rows = _block_rows()

    def run_once() -> int:
        matrix = a.copy() if entry.consumes_matrix else a
        outcome = entry.run(g, matrix, k, block_rows=block_rows)
        return fold_stream(outcome) if entry.is_listing else outcome.total

    return best_of(run_once, repeat)


def _matrix_for(entry: AlgorithmEntry, g: Graph, max_matrix_n: Optional[int]) -> Optional[AdjacencyMatrix]:
    if not entry.needs_matrix:
        return None
    check_matrix_allowed(entry.name, g.n, max_matrix_n)
    return build_matrix(g)


def tune_k(
    g: Graph,
    algorithm: str,
    ks: Iterable[int],
    repeat: int = 1,
    label: str = "",
    max_matrix_n: Optional[int] = None,
) -> KSweepResult:
    """
    Time ``algorithm`` at every threshold in ``ks``.

    Raises:
        UsageError: on an empty ladder, a negative K or an algorithm without K.
        ConsistencyError: when two runs disagree on the triangle total.
    """
    entry = get_algorithm(algorithm)
    if not entry.takes_k:
        raise UsageError(f"algorithm {algorithm} does not take a degree threshold K")
    ks = sorted(set(ks))
    if not ks:
        raise UsageError("the K ladder is empty")
    if ks[0] < 0:
        raise UsageError(f"K must be non-negative, got {ks[0]}")

    a = _matrix_for(entry, g, max_matrix_n)
    degrees = g.degrees()
    rows = []
    for k in ks:
        total, millis = timed_total(entry, g, a, k, repeat)
        high = int(np.count_nonzero(degrees > k))
        logger.info("Sweep run: algorithm=%s k=%s n_k=%s total=%s millis=%.3f", algorithm, k, high, total, millis)
        rows.append(KSweepRow(k, high, millis, total))

    totals = {row.total for row in rows}
    if len(totals) != 1:
        raise ConsistencyError(
            f"{algorithm} reported different triangle totals across K: "
            + ", ".join(f"K={row.k}: {row.total}" for row in rows)
        )

    result = KSweepResult(algorithm, rows, repeat)
    logger.info("Sweep completed: algorithm=%s best_k=%s total=%s", algorithm, result.best_k, result.total)
    sweep_completed.send(sender=KSweepResult, sweep=result, graph=g, label=label)
    return result


def compare_algorithms(
    g: Graph,
    algorithms: Sequence[str],
    k: Optional[int] = None,
    repeat: int = 1,
    max_matrix_n: Optional[int] = None,
) -> ComparisonResult:
    """
    Time several algorithms on ``g``; K-parameterized ones run at ``k``.

    Raises:
        UsageError: on an empty algorithm list, or a K algorithm without ``k``.
        ConsistencyError: when two algorithms disagree on the triangle total.
    """
    if not algorithms:
        raise UsageError("no algorithm to compare")
    entries = [get_algorithm(name) for name in algorithms]
    for entry in entries:
        if entry.needs_matrix:
            check_matrix_allowed(entry.name, g.n, max_matrix_n)
    a = build_matrix(g) if any(entry.needs_matrix for entry in entries) else None

    rows = []
    for entry in entries:
        entry_k = k if entry.takes_k else None
        total, millis = timed_total(entry, g, a if entry.needs_matrix else None, entry_k, repeat)
        logger.info("Comparison run: algorithm=%s k=%s total=%s millis=%.3f", entry.name, entry_k, total, millis)
        rows.append(ComparisonRow(entry.name, entry_k, millis, total))

    if len({row.total for row in rows}) != 1:
        raise ConsistencyError(
            "algorithms disagree on the triangle total: "
            + ", ".join(f"{row.algorithm}: {row.total}" for row in rows)
        )
    return ComparisonResult(rows, repeat)

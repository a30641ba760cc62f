"""
Triangle-based network statistics and the degree distribution.

- Clustering coefficient of ``v``: ``T[v] / C(d(v), 2)``, defined for
  ``d(v) >= 2``; the average runs over those vertices only.
- Transitivity: ``3 N / N_wedge`` with ``N_wedge = sum_v C(d(v), 2)``.
"""

from __future__ import annotations

import logging
import math
from typing import Dict, Iterator, List, Optional, Tuple

import attr
import numpy as np
from django.conf import settings

from triangle_analytics.algorithms.counting import TriangleReport
from triangle_analytics.exceptions import UndefinedStatisticError, UsageError
from triangle_analytics.graph.structures import Graph

logger = logging.getLogger(__name__)


@attr.s(frozen=True, slots=True)
class DegreeHistogram:
    """``counts[k]`` is the number of vertices of degree ``k``."""
    counts: Tuple[int, ...] = attr.ib(converter=tuple)

    @classmethod
    def from_mapping(cls, mapping: Dict[int, int]) -> "DegreeHistogram":
        size = max(mapping, default=-1) + 1
        counts = [0] * size
        for k, count in mapping.items():
            if k < 0 or count < 0:
                raise UsageError(f"invalid histogram entry {k}: {count}")
            counts[k] = count
        return cls(counts)

    @property
    def n(self) -> int:
        return sum(self.counts)

    @property
    def degree_sum(self) -> int:
        """``2m`` for a histogram taken from a graph."""
        return sum(k * count for k, count in enumerate(self.counts))

    def items(self) -> Iterator[Tuple[int, int]]:
        """Non-zero ``(k, count)`` rows in increasing ``k``."""
        for k, count in enumerate(self.counts):
            if count:
                yield k, count

    def as_dict(self) -> Dict[int, int]:
        return dict(self.items())


def degree_distribution(g: Graph) -> DegreeHistogram:
    return DegreeHistogram(np.bincount(g.degrees(), minlength=1).tolist() if g.n else [])


def _wedges(g: Graph) -> np.ndarray:
    degrees = g.degrees()
    return degrees * (degrees - 1) // 2


def clustering_coefficients(g: Graph, report: TriangleReport) -> Tuple[List[Optional[float]], float]:
    """
    Per-vertex clustering coefficients and their average.

    Vertices of degree below 2 get ``None`` and do not enter the average,
    which is 0.0 when no vertex has degree 2 or more.
    """
    if report.per_vertex is None:
        raise UsageError("clustering coefficients need per-vertex triangle counts")
    wedges = _wedges(g)
    triangles = np.asarray(report.per_vertex, dtype=np.int64)
    eligible = wedges > 0
    values = np.zeros(g.n, dtype=np.float64)
    np.divide(triangles, wedges, out=values, where=eligible)
    per_vertex = [float(value) if ok else None for value, ok in zip(values.tolist(), eligible.tolist())]
    average = float(values[eligible].mean()) if eligible.any() else 0.0
    return per_vertex, average


def transitivity(g: Graph, total: int) -> float:
    """
    Raises:
        UndefinedStatisticError: when no vertex has degree 2 or more.
    """
    wedges = int(_wedges(g).sum())
    if wedges == 0:
        raise UndefinedStatisticError("transitivity is undefined without connected triples")
    return 3 * total / wedges


def fit_alpha(histogram: DegreeHistogram, min_tail_fraction: Optional[float] = None) -> float:
    """
    Estimate a power-law exponent from a degree histogram.

    Least-squares line through ``(log k, log CCDF(k))`` over the observed
    degrees ``k >= 1``; the CCDF of the model decays as ``k^(1-alpha)``, hence
    ``alpha = 1 + |slope|``. Degrees whose tail holds fewer than
    ``min_tail_fraction`` of the vertices are left out (they are where
    finite-size truncation bends the curve), unless that leaves fewer than two
    points.

    Raises:
        UndefinedStatisticError: when fewer than two distinct degrees >= 1 occur.
    """
    if min_tail_fraction is None:
        min_tail_fraction = getattr(settings, "TRIANGLES_FIT_MIN_TAIL_FRACTION", 0.01)
    counts = np.asarray(histogram.counts, dtype=np.int64)
    degrees = np.flatnonzero(counts)
    degrees = degrees[degrees >= 1]
    if len(degrees) < 2:
        raise UndefinedStatisticError("cannot fit a power law to fewer than two distinct degrees")

    tails = np.cumsum(counts[::-1])[::-1][degrees]
    keep = tails >= max(1.0, min_tail_fraction * tails[0])
    if np.count_nonzero(keep) < 2:
        logger.warning(
            "Power-law fit: tail cutoff left %s points, fitting all %s",
            np.count_nonzero(keep), len(degrees),
        )
        keep[:] = True

    slope, _ = np.polyfit(np.log(degrees[keep]), np.log(tails[keep]), 1)
    return 1 + abs(float(slope))


@attr.s(frozen=True, slots=True)
class GraphStatistics:
    """Everything the stats report prints; undefined values are None."""
    n: int = attr.ib()
    m: int = attr.ib()
    triangles: int = attr.ib()
    transitivity: Optional[float] = attr.ib()
    average_clustering: float = attr.ib()
    histogram: DegreeHistogram = attr.ib()
    alpha: Optional[float] = attr.ib()


def graph_statistics(g: Graph, report: TriangleReport) -> GraphStatistics:
    try:
        ratio = transitivity(g, report.total)
    except UndefinedStatisticError:
        ratio = None
    _, average = clustering_coefficients(g, report)
    histogram = degree_distribution(g)
    try:
        alpha = fit_alpha(histogram)
    except UndefinedStatisticError:
        alpha = None
    if alpha is not None and not math.isfinite(alpha):
        alpha = None
    return GraphStatistics(g.n, g.m, report.total, ratio, average, histogram, alpha)

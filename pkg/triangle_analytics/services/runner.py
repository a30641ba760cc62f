"""
Run pipeline shared by the ``triangles`` command: obtain the graph, resolve K,
build the matrix when needed, run the algorithm and time it.
"""

from __future__ import annotations

import logging
from typing import List, Optional, Tuple

import attr
import numpy as np
from django.conf import settings

from triangle_analytics.algorithms.catalog import AlgorithmEntry, get_algorithm
from triangle_analytics.algorithms.counting import TriangleReport, fold_stream
from triangle_analytics.exceptions import UndefinedStatisticError, UsageError
from triangle_analytics.graph.io import FORMATS, TEXT, load_graph
from triangle_analytics.graph.matrix import AdjacencyMatrix, build_matrix
from triangle_analytics.graph.ordering import DegreeOrdering, reorder_by_degree
from triangle_analytics.graph.structures import Graph, Triangle
from triangle_analytics.helpers.probes import RunProbe
from triangle_analytics.helpers.space import AuxiliarySpaceMeter
from triangle_analytics.helpers.timing import Stopwatch
from triangle_analytics.policies.k_selection import KPolicy, parse_k_policy
from triangle_analytics.policies.matrix_guard import check_matrix_allowed
from triangle_analytics.services.analysis import degree_distribution, fit_alpha
from triangle_analytics.services.generator import GenSpec, generate

logger = logging.getLogger(__name__)

COUNT = "count"
LIST = "list"
PER_VERTEX = "per-vertex"
STATS = "stats"
JSON_SUMMARY = "json-summary"
OUTPUT_MODES = (COUNT, LIST, PER_VERTEX, STATS, JSON_SUMMARY)


def _default_algorithm() -> str:
    return getattr(settings, "TRIANGLES_DEFAULT_ALGORITHM", "compact-forward")


def _default_omega() -> float:
    return getattr(settings, "TRIANGLES_DEFAULT_OMEGA", 3.0)


@attr.s(frozen=True, slots=True)
class RunConfig:
    """
    One requested computation.

    Exactly one of ``input_path`` and ``gen`` is set. A K policy is only
    accepted for K-parameterized algorithms; those get ``auto`` when none is
    given.
    """
    input_path: Optional[str] = attr.ib(default=None)
    input_format: str = attr.ib(default=TEXT)
    gen: Optional[GenSpec] = attr.ib(default=None)
    algorithm: str = attr.ib(factory=_default_algorithm)
    k_policy: Optional[KPolicy] = attr.ib(default=None)
    alpha: Optional[float] = attr.ib(default=None)
    omega: float = attr.ib(factory=_default_omega)
    output: str = attr.ib(default=COUNT)
    sorted_output: bool = attr.ib(default=False)
    repeat: int = attr.ib(default=1)
    max_matrix_n: Optional[int] = attr.ib(default=None)

    def __attrs_post_init__(self):
        if (self.input_path is None) == (self.gen is None):
            raise UsageError("give exactly one of --input and --gen")
        if self.input_format not in FORMATS:
            raise UsageError(f"unknown format {self.input_format!r}; expected one of {', '.join(FORMATS)}")
        if self.output not in OUTPUT_MODES:
            raise UsageError(f"unknown output mode {self.output!r}; expected one of {', '.join(OUTPUT_MODES)}")
        if self.repeat < 1:
            raise UsageError(f"repeat must be at least 1, got {self.repeat}")
        entry = get_algorithm(self.algorithm)
        if self.k_policy is not None and not entry.takes_k:
            raise UsageError(f"algorithm {self.algorithm} does not take a degree threshold K")
        if entry.takes_k and self.k_policy is None:
            object.__setattr__(self, "k_policy", parse_k_policy("auto"))

    @property
    def entry(self) -> AlgorithmEntry:
        return get_algorithm(self.algorithm)

    @property
    def label(self) -> str:
        return self.input_path if self.input_path is not None else str(self.gen)


@attr.s(frozen=True, slots=True)
class RunOutcome:
    graph: Graph = attr.ib()
    algorithm: str = attr.ib()
    k: Optional[int] = attr.ib()
    report: TriangleReport = attr.ib()
    millis: float = attr.ib()
    triangles: Optional[List[Triangle]] = attr.ib(default=None)
    peak_aux_bytes: Optional[int] = attr.ib(default=None)
    probe: Optional[RunProbe] = attr.ib(default=None)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m


def load_input(config: RunConfig) -> Graph:
    if config.gen is not None:
        return generate(config.gen)
    return load_graph(config.input_path, config.input_format)


def resolve_k(
    policy: Optional[KPolicy],
    g: Graph,
    alpha: Optional[float] = None,
    omega: Optional[float] = None,
) -> Optional[int]:
    """
    Turn a K policy into a threshold; power-law rules fit alpha from the
    degree distribution when none is given.
    """
    if policy is None:
        return None
    if omega is None:
        omega = _default_omega()
    if policy.needs_alpha and alpha is None:
        try:
            alpha = fit_alpha(degree_distribution(g))
        except UndefinedStatisticError as exc:
            raise UsageError(f"K rule {policy.rule} needs --alpha: {exc}") from exc
        logger.info("Fitted power-law exponent alpha=%.4f for K rule %s", alpha, policy.rule)
    return policy.resolve(g.n, g.m, alpha, omega)


def prepare_matrix(entry: AlgorithmEntry, g: Graph, max_matrix_n: Optional[int] = None) -> Optional[AdjacencyMatrix]:
    if not entry.needs_matrix:
        return None
    check_matrix_allowed(entry.name, g.n, max_matrix_n)
    return build_matrix(g)


def prepare_relabelling(entry: AlgorithmEntry, g: Graph) -> Optional[Tuple[Graph, DegreeOrdering]]:
    """The degree-relabelled copy, built with the representation rather than inside the timed run."""
    if not entry.needs_relabelling:
        return None
    return reorder_by_degree(g)


def _run_once(
    entry: AlgorithmEntry,
    g: Graph,
    a: Optional[AdjacencyMatrix],
    k: Optional[int],
    counts: np.ndarray,
    collected: Optional[list],
    probe: Optional[RunProbe],
    relabelled: Optional[Tuple[Graph, DegreeOrdering]] = None,
) -> TriangleReport:
    block_rows = getattr(settings, "TRIANGLES_MATRIX_BLOCK_ROWS", 256)
    outcome = entry.run(g, a, k, probe, block_rows=block_rows, relabelled=relabelled)
    if not entry.is_listing:
        return outcome
    counts[:] = 0
    sink = collected.append if collected is not None else None
    total = fold_stream(outcome, counts, sink)
    return TriangleReport(total, None)


def execute(config: RunConfig, graph: Optional[Graph] = None) -> RunOutcome:
    """
    Run ``config``; ``graph`` skips loading when the caller already has it.

    The reported time is the best of ``config.repeat`` runs. The matrix and
    the degree-relabelled copy are built once beforehand, outside both the
    timing and the meter. The json-summary mode adds one run under the
    auxiliary-space meter, kept out of the timing.
    """
    g = graph if graph is not None else load_input(config)
    entry = config.entry
    k = resolve_k(config.k_policy, g, config.alpha, config.omega)
    a = prepare_matrix(entry, g, config.max_matrix_n)
    relabelled = prepare_relabelling(entry, g)
    counts = np.zeros(g.n, dtype=np.int64)
    want_list = config.output == LIST

    best = float("inf")
    report = collected = probe = None
    for _ in range(config.repeat):
        probe = RunProbe()
        collected = [] if want_list else None
        matrix = a.copy() if entry.consumes_matrix else a
        with Stopwatch() as watch:
            report = _run_once(entry, g, matrix, k, counts, collected, probe, relabelled)
        best = min(best, watch.millis)

    if entry.is_listing:
        report = TriangleReport(report.total, tuple(counts.tolist()))

    peak = None
    if config.output == JSON_SUMMARY:
        matrix = a.copy() if entry.consumes_matrix else a
        with AuxiliarySpaceMeter() as meter:
            _run_once(entry, g, matrix, k, counts, None, None, relabelled)
        peak = meter.peak_bytes

    if collected is not None and config.sorted_output:
        collected.sort()

    logger.info(
        "Triangle run: algorithm=%s n=%s m=%s k=%s total=%s millis=%.3f",
        entry.name, g.n, g.m, k, report.total, best,
    )
    return RunOutcome(g, entry.name, k, report, best, collected, peak, probe)

#!/usr/bin/env python
"""
Tests for clustering, transitivity, the degree distribution and the power-law fit.
"""

import logging
from itertools import combinations

import networkx as nx
import pytest

from test_utils.graphs import BOWTIE, DIAMOND, K4, PATH4, STAR, corpus, graph_from_edges, to_networkx
from triangle_analytics.algorithms.counting import TriangleReport, matrix_count
from triangle_analytics.exceptions import UndefinedStatisticError, UsageError
from triangle_analytics.graph.matrix import build_matrix
from triangle_analytics.services.analysis import (
    DegreeHistogram,
    clustering_coefficients,
    degree_distribution,
    fit_alpha,
    graph_statistics,
    transitivity,
)
from triangle_analytics.services.powerlaw import PowerLawModel

SMALL_CORPUS = [(label, graph) for label, graph in corpus() if graph.n <= 32]


def _report(graph):
    return matrix_count(build_matrix(graph))


def test_clustering_k4():
    graph = graph_from_edges(K4)

    values, average = clustering_coefficients(graph, _report(graph))

    assert values == [1.0, 1.0, 1.0, 1.0]
    assert average == 1.0


def test_clustering_diamond():
    graph = graph_from_edges(DIAMOND)

    values, average = clustering_coefficients(graph, _report(graph))

    assert values == pytest.approx([2 / 3, 2 / 3, 1.0, 1.0], abs=1e-12)
    assert average == pytest.approx(5 / 6, abs=1e-12)


def test_clustering_path_excludes_endpoints():
    graph = graph_from_edges(PATH4)

    values, average = clustering_coefficients(graph, _report(graph))

    assert values == [None, 0.0, 0.0, None]
    assert average == 0.0


def test_clustering_without_eligible_vertex():
    graph = graph_from_edges([(0, 1)])

    values, average = clustering_coefficients(graph, _report(graph))

    assert values == [None, None]
    assert average == 0.0


def test_clustering_needs_per_vertex_counts():
    with pytest.raises(UsageError):
        clustering_coefficients(graph_from_edges(K4), TriangleReport(4))


@pytest.mark.parametrize("edges, expected", [(K4, 1.0), (DIAMOND, 0.75), (STAR, 0.0)])
def test_transitivity(edges, expected):
    graph = graph_from_edges(edges)

    assert transitivity(graph, _report(graph).total) == pytest.approx(expected, abs=1e-12)


def test_transitivity_undefined_without_wedges():
    with pytest.raises(UndefinedStatisticError):
        transitivity(graph_from_edges([(0, 1), (2, 3)]), 0)


def test_average_clustering_differs_from_transitivity():
    graph = graph_from_edges(DIAMOND)
    report = _report(graph)

    _, average = clustering_coefficients(graph, report)

    assert average != transitivity(graph, report.total)


@pytest.mark.parametrize("label, graph", SMALL_CORPUS[::4], ids=[label for label, _ in SMALL_CORPUS[::4]])
def test_unit_clustering_iff_clique_neighborhood(label, graph):  # pylint: disable=unused-argument
    values, _ = clustering_coefficients(graph, _report(graph))

    for v, value in enumerate(values):
        if value is None:
            continue
        assert 0.0 <= value <= 1.0
        neighbors = graph.neighbors_of(v)
        is_clique = all(graph.has_edge(x, y) for x, y in combinations(neighbors, 2))
        assert (value == 1.0) == is_clique


@pytest.mark.parametrize("label, graph", SMALL_CORPUS[::4], ids=[label for label, _ in SMALL_CORPUS[::4]])
def test_statistics_agree_with_networkx(label, graph):  # pylint: disable=unused-argument
    report = _report(graph)
    reference = to_networkx(graph)

    values, _ = clustering_coefficients(graph, report)
    expected = nx.clustering(reference)
    for v, value in enumerate(values):
        if value is not None:
            assert value == pytest.approx(expected[v], abs=1e-12)
    try:
        ratio = transitivity(graph, report.total)
    except UndefinedStatisticError:
        return
    assert 0.0 <= ratio <= 1.0
    assert ratio == pytest.approx(nx.transitivity(reference), abs=1e-12)


@pytest.mark.parametrize("edges, expected", [
    (K4, {3: 4}),
    (STAR, {1: 4, 4: 1}),
    (BOWTIE, {2: 4, 4: 1}),
])
def test_degree_distribution(edges, expected):
    graph = graph_from_edges(edges)

    histogram = degree_distribution(graph)

    assert histogram.as_dict() == expected
    assert histogram.n == graph.n
    assert histogram.degree_sum == 2 * graph.m


def test_histogram_from_mapping():
    histogram = DegreeHistogram.from_mapping({1: 4, 4: 1})

    assert histogram.counts == (0, 4, 0, 0, 1)
    assert list(histogram.items()) == [(1, 4), (4, 1)]

    with pytest.raises(UsageError):
        DegreeHistogram.from_mapping({2: -1})


def test_fit_alpha_recovers_exponent_of_exact_histogram():
    model = PowerLawModel(2.5, 100_000)
    histogram = DegreeHistogram.from_mapping(model.expected_histogram(10_000))

    assert fit_alpha(histogram) == pytest.approx(2.5, abs=0.1)


def test_fit_alpha_undefined_on_regular_graph():
    cycle = graph_from_edges([(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])

    with pytest.raises(UndefinedStatisticError):
        fit_alpha(degree_distribution(cycle))


def test_fit_alpha_two_points():
    alpha = fit_alpha(DegreeHistogram.from_mapping({1: 10, 2: 3}))

    assert alpha > 1


def test_fit_alpha_falls_back_to_all_points(caplog):
    histogram = DegreeHistogram.from_mapping({1: 1000, 2: 1, 3: 1})

    with caplog.at_level(logging.WARNING, logger="triangle_analytics.services.analysis"):
        alpha = fit_alpha(histogram)

    assert alpha > 1
    assert "fitting all 3" in caplog.text


def test_fit_alpha_uses_configured_tail_fraction(settings):
    histogram = DegreeHistogram.from_mapping({1: 1000, 2: 1, 3: 1})
    settings.TRIANGLES_FIT_MIN_TAIL_FRACTION = 0.0

    assert fit_alpha(histogram) == fit_alpha(histogram, min_tail_fraction=0.0)


def test_graph_statistics_diamond():
    graph = graph_from_edges(DIAMOND)

    stats = graph_statistics(graph, _report(graph))

    assert (stats.n, stats.m, stats.triangles) == (4, 5, 2)
    assert stats.transitivity == pytest.approx(0.75)
    assert stats.average_clustering == pytest.approx(5 / 6)
    assert stats.histogram.as_dict() == {2: 2, 3: 2}
    assert stats.alpha is not None


def test_graph_statistics_single_edge():
    graph = graph_from_edges([(0, 1)])

    stats = graph_statistics(graph, _report(graph))

    assert stats.transitivity is None
    assert stats.alpha is None
    assert stats.average_clustering == 0.0

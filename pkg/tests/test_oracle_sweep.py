#!/usr/bin/env python
"""
Every algorithm against the direct-testing oracle on a seeded corpus of
Erdos-Renyi and power-law graphs, and on inputs without triangles.
"""

import networkx as nx
import numpy as np
import pytest

from test_utils.graphs import brute_force_triangles, corpus, degenerate_graphs, to_networkx
from triangle_analytics.algorithms.catalog import ALGORITHMS
from triangle_analytics.algorithms.counting import (
    ayz_pseudo_listing,
    count_from_stream,
    cube_diagonal,
    fold_stream,
    matrix_count,
)
from triangle_analytics.algorithms.dense import list_direct, vertex_iterator
from triangle_analytics.algorithms.sparse import (
    compact_forward,
    forward,
    forward_set_bound,
    tree_listing,
    tree_round_bound,
)
from triangle_analytics.graph.matrix import build_matrix
from triangle_analytics.helpers.probes import RunProbe
from triangle_analytics.policies.k_selection import SQRT_M, k_formula

CORPUS = corpus()
CORPUS_IDS = [label for label, _ in CORPUS]
SMALL = [(label, graph) for label, graph in CORPUS if graph.n <= 64]
SMALL_IDS = [label for label, _ in SMALL]
LISTINGS = [entry for entry in ALGORITHMS.values() if entry.is_listing and entry.name != "direct"]


def k_grid(graph):
    """0, 1, ceil(sqrt(m)), d_max and d_max + 1."""
    d_max = graph.max_degree()
    return sorted({0, 1, k_formula(SQRT_M, graph.n, graph.m), d_max, d_max + 1})


def test_corpus_size():
    er = [label for label in CORPUS_IDS if label.startswith("er,")]
    powerlaw = [label for label in CORPUS_IDS if label.startswith("powerlaw,")]

    assert len(er) >= 200
    assert len(powerlaw) >= 50
    assert all(graph.n <= 512 for _, graph in CORPUS)


@pytest.mark.parametrize("label, graph", CORPUS, ids=CORPUS_IDS)
def test_listings_match_direct_oracle(label, graph):  # pylint: disable=unused-argument
    a = build_matrix(graph)
    expected = set(list_direct(a))

    for entry in LISTINGS:
        for k in (k_grid(graph) if entry.takes_k else [None]):
            matrix = a.copy() if entry.consumes_matrix else a
            found = list(entry.run(graph, matrix, k))
            assert len(found) == len(set(found)), f"{entry.name} K={k} reported a triangle twice"
            assert set(found) == expected, f"{entry.name} K={k}"


@pytest.mark.parametrize("label, graph", CORPUS, ids=CORPUS_IDS)
def test_counting_concordance(label, graph):  # pylint: disable=unused-argument
    a = build_matrix(graph)

    report = matrix_count(a)

    assert count_from_stream(compact_forward(graph), graph.n) == report
    for k in k_grid(graph):
        assert ayz_pseudo_listing(graph, a, k) == report, f"K={k}"
    assert sum(report.per_vertex) == 3 * report.total
    assert int(cube_diagonal(a).sum()) == 6 * report.total
    assert report.total == fold_stream(list_direct(a))
    reference = nx.triangles(to_networkx(graph))
    assert list(report.per_vertex) == [reference[v] for v in range(graph.n)]


@pytest.mark.parametrize("label, graph", SMALL, ids=SMALL_IDS)
def test_matrix_bits_match_adjacency_search(label, graph):  # pylint: disable=unused-argument
    a = build_matrix(graph)

    for u in range(graph.n):
        assert [a.has_edge(u, v) for v in range(graph.n)] == [graph.has_edge(u, v) for v in range(graph.n)], u


@pytest.mark.parametrize("label, graph", SMALL, ids=SMALL_IDS)
def test_vertex_iterator_finds_each_triangle_three_times(label, graph):  # pylint: disable=unused-argument
    a = build_matrix(graph)
    probe = RunProbe()

    total = fold_stream(vertex_iterator(graph, a, probe))

    assert total == fold_stream(list_direct(a))
    assert probe.emissions == 3 * total


@pytest.mark.parametrize("label, graph", CORPUS, ids=CORPUS_IDS)
def test_forward_sets_stay_within_bound(label, graph):  # pylint: disable=unused-argument
    probe = RunProbe()

    fold_stream(forward(graph, probe))

    assert probe.max_forward_set <= forward_set_bound(graph.m)


@pytest.mark.parametrize("label, graph", CORPUS, ids=CORPUS_IDS)
def test_tree_listing_rounds_stay_within_bound(label, graph):  # pylint: disable=unused-argument
    a = build_matrix(graph)
    probe = RunProbe()

    fold_stream(tree_listing(graph, a, probe))

    assert probe.rounds <= tree_round_bound(graph.m)
    assert a.edge_count() == 0


@pytest.mark.parametrize("label, graph", list(CORPUS[::10]), ids=CORPUS_IDS[::10])
def test_direct_oracle_matches_adjacency_search(label, graph):  # pylint: disable=unused-argument
    assert set(list_direct(build_matrix(graph))) == brute_force_triangles(graph)


@pytest.mark.parametrize("name, graph", degenerate_graphs().items())
def test_degenerate_inputs_have_no_triangles(name, graph):  # pylint: disable=unused-argument
    a = build_matrix(graph)

    for entry in ALGORITHMS.values():
        ks = sorted({0, 1, graph.max_degree() + 1}) if entry.takes_k else [None]
        for k in ks:
            matrix = a.copy() if entry.consumes_matrix else a
            outcome = entry.run(graph, matrix, k)
            if entry.is_listing:
                assert not list(outcome), entry.name
            else:
                assert outcome.total == 0, entry.name
                assert not np.any(outcome.per_vertex)

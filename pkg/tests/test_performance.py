#!/usr/bin/env python
"""
Desk-scale timing checks on a 10^5-vertex power-law graph.

These take minutes in pure Python and are deselected by default; run them
with ``pytest -m slow --no-cov``.
"""

import pytest

from triangle_analytics.algorithms.catalog import get_algorithm
from triangle_analytics.services.generator import GenSpec, generate
from triangle_analytics.services.tuning import default_k_ladder, timed_total, tune_k

pytestmark = pytest.mark.slow


@pytest.fixture(name="powerlaw_graph", scope="module")
def fixture_powerlaw_graph():
    return generate(GenSpec("powerlaw", 100_000, alpha=2.5, seed=2024))


def test_graph_has_hubs(powerlaw_graph):
    assert powerlaw_graph.max_degree() >= 500


def test_compact_forward_beats_edge_iterator(powerlaw_graph):
    forward_total, forward_millis = timed_total(get_algorithm("compact-forward"), powerlaw_graph, None, None, 3)
    edge_total, edge_millis = timed_total(get_algorithm("edge-iterator"), powerlaw_graph, None, None, 1)

    assert forward_total == edge_total
    assert forward_millis < edge_millis


def test_new_listing_prefers_an_intermediate_threshold(powerlaw_graph):
    ladder = default_k_ladder(powerlaw_graph)
    top = powerlaw_graph.max_degree() + 1

    result = tune_k(powerlaw_graph, "new-listing", ladder)

    millis = {row.k: row.millis for row in result.rows}
    assert result.best_k < top
    assert millis[top] >= 2 * millis[result.best_k]

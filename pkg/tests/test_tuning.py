#!/usr/bin/env python
"""
Tests for K sweeps, algorithm comparison and sweep persistence.
"""

import json

import pytest

from test_utils.graphs import K4, STAR, graph_from_edges
from triangle_analytics.exceptions import CapacityError, ConsistencyError, UsageError
from triangle_analytics.models import BenchmarkSweep, BenchmarkSweepRow
from triangle_analytics.serializers import KSweepSummarySerializer, render_json
from triangle_analytics.services import tuning
from triangle_analytics.services.tuning import (
    ComparisonResult,
    ComparisonRow,
    KSweepResult,
    KSweepRow,
    compare_algorithms,
    default_k_ladder,
    tune_k,
)
from triangle_analytics.signals import sweep_completed

K_ALGORITHMS = ["new-listing", "new-listing-constant-space", "ayz-listing", "ayz-pseudo-listing"]


def test_default_k_ladder():
    assert default_k_ladder(graph_from_edges(K4)) == [0, 1, 2, 4]
    assert default_k_ladder(graph_from_edges(STAR)) == [0, 1, 2, 4, 5]


@pytest.mark.parametrize("algorithm", K_ALGORITHMS)
def test_tune_k_on_k4(algorithm):
    result = tune_k(graph_from_edges(K4), algorithm, [4, 0, 2])

    assert [row.k for row in result.rows] == [0, 2, 4]
    assert [row.total for row in result.rows] == [4, 4, 4]
    assert [row.high_degree_count for row in result.rows] == [4, 4, 0]
    assert result.total == 4
    assert result.best_k in (0, 2, 4)


def test_tune_k_rejects_empty_ladder():
    with pytest.raises(UsageError, match="empty"):
        tune_k(graph_from_edges(K4), "new-listing", [])


def test_tune_k_rejects_negative_k():
    with pytest.raises(UsageError):
        tune_k(graph_from_edges(K4), "new-listing", [-1, 2])


def test_tune_k_rejects_algorithm_without_k():
    with pytest.raises(UsageError, match="threshold"):
        tune_k(graph_from_edges(K4), "forward", [0, 1])


def test_tune_k_respects_matrix_cap():
    with pytest.raises(CapacityError):
        tune_k(graph_from_edges(K4), "ayz-listing", [0], max_matrix_n=3)


def test_tune_k_aborts_on_disagreeing_totals(monkeypatch):
    monkeypatch.setattr(tuning, "timed_total", lambda entry, g, a, k, repeat=1: (k, 1.0))

    with pytest.raises(ConsistencyError, match="K=0: 0"):
        tune_k(graph_from_edges(K4), "new-listing", [0, 1])


def test_tune_k_sends_sweep_completed():
    received = []

    def handler(sender, **kwargs):
        received.append((sender, kwargs))

    sweep_completed.connect(handler)
    try:
        result = tune_k(graph_from_edges(K4), "new-listing", [0, 2], label="k4")
    finally:
        sweep_completed.disconnect(handler)

    assert len(received) == 1
    sender, kwargs = received[0]
    assert sender is KSweepResult
    assert kwargs["sweep"] is result
    assert kwargs["label"] == "k4"
    assert kwargs["graph"].m == 6


@pytest.mark.django_db
def test_sweep_is_recorded_when_enabled(settings):
    settings.TRIANGLES_RECORD_SWEEPS = True

    result = tune_k(graph_from_edges(K4), "new-listing", [0, 2, 4], repeat=2, label="k4.txt")

    record = BenchmarkSweep.objects.get()
    assert record.graph_label == "k4.txt"
    assert record.algorithm == "new-listing"
    assert (record.n, record.m, record.total) == (4, 6, 4)
    assert record.best_k == result.best_k
    assert record.repeat == 2
    assert [row.k for row in record.rows.all()] == [0, 2, 4]
    assert [row.high_degree_count for row in record.rows.all()] == [4, 4, 0]


@pytest.mark.django_db
def test_sweep_is_not_recorded_by_default():
    tune_k(graph_from_edges(K4), "new-listing", [0, 2])

    assert not BenchmarkSweep.objects.exists()
    assert not BenchmarkSweepRow.objects.exists()


def test_sweep_result_tsv():
    result = KSweepResult("new-listing", [KSweepRow(2, 1, 3.5, 4), KSweepRow(0, 4, 1.25, 4)])

    assert result.to_tsv() == (
        "0\t4\t1.250\n"
        "2\t1\t3.500\n"
        "# best new-listing K=0 millis=1.250 triangles=4\n"
    )


def test_sweep_best_prefers_smaller_k_on_ties():
    result = KSweepResult("new-listing", [KSweepRow(8, 0, 2.0, 1), KSweepRow(4, 1, 2.0, 1), KSweepRow(0, 3, 5.0, 1)])

    assert result.best_k == 4


def test_sweep_summary_serializer():
    result = KSweepResult("ayz-listing", [KSweepRow(0, 4, 1.5, 4), KSweepRow(2, 4, 1.0, 4)], repeat=3)

    summary = json.loads(render_json(KSweepSummarySerializer(result)))

    assert summary == {
        "algorithm": "ayz-listing",
        "triangles": 4,
        "best_k": 2,
        "repeat": 3,
        "rows": [{"k": 0, "n_k": 4, "millis": 1.5}, {"k": 2, "n_k": 4, "millis": 1.0}],
    }


def test_compare_algorithms_on_k4():
    result = compare_algorithms(
        graph_from_edges(K4), ["edge-iterator", "compact-forward", "matrix", "new-listing"], k=2,
    )

    assert [row.algorithm for row in result.rows] == ["edge-iterator", "compact-forward", "matrix", "new-listing"]
    assert [row.k for row in result.rows] == [None, None, None, 2]
    assert {row.total for row in result.rows} == {4}


def test_compare_algorithms_needs_k_for_threshold_algorithms():
    with pytest.raises(UsageError):
        compare_algorithms(graph_from_edges(K4), ["forward", "new-listing"])


def test_compare_algorithms_rejects_empty_list():
    with pytest.raises(UsageError):
        compare_algorithms(graph_from_edges(K4), [])


def test_compare_algorithms_respects_matrix_cap():
    with pytest.raises(CapacityError):
        compare_algorithms(graph_from_edges(K4), ["forward", "matrix"], max_matrix_n=2)


def test_compare_algorithms_aborts_on_disagreeing_totals(monkeypatch):
    monkeypatch.setattr(tuning, "timed_total", lambda entry, g, a, k, repeat=1: (len(entry.name), 1.0))

    with pytest.raises(ConsistencyError):
        compare_algorithms(graph_from_edges(K4), ["forward", "edge-iterator"])


def test_comparison_result_tsv():
    result = ComparisonResult([ComparisonRow("forward", None, 2.0, 4), ComparisonRow("new-listing", 3, 0.5, 4)])

    assert result.to_tsv() == (
        "forward\t-\t2.000\n"
        "new-listing\t3\t0.500\n"
        "# best new-listing millis=0.500 triangles=4\n"
    )

#!/usr/bin/env python
"""
Tests for direct testing, vertex-iterator and edge-iterator.
"""

import pytest

from test_utils.graphs import BOWTIE, CYCLE5, DIAMOND, K4, PATH4, TRIANGLE, graph_from_edges
from triangle_analytics.algorithms.dense import (
    edge_iterator,
    list_direct,
    list_edge_triangles,
    list_vertex_triangles,
    vertex_iterator,
)
from triangle_analytics.graph.matrix import build_matrix
from triangle_analytics.graph.structures import Graph, Triangle
from triangle_analytics.helpers.probes import RunProbe


def _with_matrix(edges):
    graph = graph_from_edges(edges)
    return graph, build_matrix(graph)


@pytest.mark.parametrize("edges, expected", [
    (TRIANGLE, {Triangle(0, 1, 2)}),
    (PATH4, set()),
    (K4, {Triangle(0, 1, 2), Triangle(0, 1, 3), Triangle(0, 2, 3), Triangle(1, 2, 3)}),
])
def test_list_direct(edges, expected):
    _, a = _with_matrix(edges)

    assert list(list_direct(a)) == sorted(expected)


@pytest.mark.parametrize("edges, v, expected", [
    (BOWTIE, 2, {Triangle(0, 1, 2), Triangle(2, 3, 4)}),
    (BOWTIE, 0, {Triangle(0, 1, 2)}),
    (PATH4, 1, set()),
])
def test_list_vertex_triangles(edges, v, expected):
    graph, a = _with_matrix(edges)

    found = list(list_vertex_triangles(graph, a, v))

    assert len(found) == len(expected)
    assert set(found) == expected


def test_vertex_iterator_k4_reports_each_triangle_once():
    graph, a = _with_matrix(K4)
    probe = RunProbe()

    found = list(vertex_iterator(graph, a, probe))

    assert len(found) == 4
    assert len(set(found)) == 4
    # every triangle is seen from each of its three vertices
    assert probe.emissions == 12


def test_vertex_iterator_bowtie():
    graph, a = _with_matrix(BOWTIE)

    assert sorted(vertex_iterator(graph, a)) == [Triangle(0, 1, 2), Triangle(2, 3, 4)]


def test_vertex_iterator_empty_graph():
    graph = Graph.empty(5)

    assert not list(vertex_iterator(graph, build_matrix(graph)))


@pytest.mark.parametrize("edges, u, v, expected", [
    (K4, 0, 1, {Triangle(0, 1, 2), Triangle(0, 1, 3)}),
    (BOWTIE, 0, 1, {Triangle(0, 1, 2)}),
    (PATH4, 1, 2, set()),
])
def test_list_edge_triangles(edges, u, v, expected):
    found = list(list_edge_triangles(graph_from_edges(edges), u, v))

    assert len(found) == len(expected)
    assert set(found) == expected


def test_edge_iterator_k4():
    probe = RunProbe()

    found = list(edge_iterator(graph_from_edges(K4), probe))

    assert sorted(found) == list(list_direct(build_matrix(graph_from_edges(K4))))
    assert probe.emissions == 12


def test_edge_iterator_diamond():
    assert sorted(edge_iterator(graph_from_edges(DIAMOND))) == [Triangle(0, 1, 2), Triangle(0, 1, 3)]


def test_edge_iterator_cycle():
    assert not list(edge_iterator(graph_from_edges(CYCLE5)))


def test_streams_are_lazy():
    stream = edge_iterator(graph_from_edges(K4))

    assert next(stream) == Triangle(0, 1, 2)
    assert len(list(stream)) == 3

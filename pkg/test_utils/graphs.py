"""
Named small graphs, a seeded corpus and a brute-force triangle oracle.
"""

from __future__ import annotations

import functools
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Set, Tuple

import networkx as nx

from triangle_analytics.graph.structures import Graph, Triangle, normalize_pairs
from triangle_analytics.services.generator import GenSpec, generate


def graph_from_edges(edges: Iterable[Tuple[int, int]], n: Optional[int] = None) -> Graph:
    """Graph on ``n`` vertices (default: largest id + 1) from undirected pairs."""
    edges = list(edges)
    sources = [u for u, _ in edges]
    targets = [v for _, v in edges]
    if n is None:
        n = max(sources + targets, default=-1) + 1
    first, second, _, _ = normalize_pairs(sources, targets)
    return Graph.from_pairs(n, first, second)


TRIANGLE = [(0, 1), (1, 2), (0, 2)]
PATH4 = [(0, 1), (1, 2), (2, 3)]
K4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
# triangles {0,1,2} and {2,3,4} sharing vertex 2
BOWTIE = [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]
# K4 minus the edge (2, 3)
DIAMOND = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]
# center 4, leaves 0..3
STAR = [(4, 0), (4, 1), (4, 2), (4, 3)]
CYCLE5 = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]
FOREST = [(0, 1), (1, 2), (1, 3), (4, 5), (5, 6)]


def named_graphs() -> Dict[str, Graph]:
    return {
        "triangle": graph_from_edges(TRIANGLE),
        "path": graph_from_edges(PATH4),
        "k4": graph_from_edges(K4),
        "bowtie": graph_from_edges(BOWTIE),
        "diamond": graph_from_edges(DIAMOND),
        "star": graph_from_edges(STAR),
        "cycle5": graph_from_edges(CYCLE5),
        "forest": graph_from_edges(FOREST),
    }


def degenerate_graphs() -> Dict[str, Graph]:
    """Inputs without any triangle."""
    return {
        "empty": Graph.empty(5),
        "no-vertex": Graph.empty(0),
        "single-vertex": Graph.empty(1),
        "single-edge": graph_from_edges([(0, 1)]),
        "forest": graph_from_edges(FOREST),
        "cycle5": graph_from_edges(CYCLE5),
    }


def brute_force_triangles(g: Graph) -> Set[Triangle]:
    """Every triple of vertices checked through binary search in the adjacency lists."""
    found = set()
    for a, b in combinations(range(g.n), 2):
        if not g.has_edge(a, b):
            continue
        found.update(Triangle(a, b, c) for c in range(b + 1, g.n) if g.has_edge(a, c) and g.has_edge(b, c))
    return found


def per_vertex_counts(triangles: Iterable[Triangle], n: int) -> List[int]:
    counts = [0] * n
    for triangle in triangles:
        for v in triangle:
            counts[v] += 1
    return counts


ER_SIZES = (8, 16, 32, 64)
ER_DENSITIES = (0.1, 0.3, 0.7)
ER_SEEDS = range(17)
POWERLAW_EXPONENTS = (2.0, 2.5, 3.0)
POWERLAW_SIZES = (64, 128, 256, 512)
POWERLAW_SEEDS = range(17)


@functools.lru_cache(maxsize=None)
def corpus() -> Tuple[Tuple[str, Graph], ...]:
    """
    Seeded oracle corpus: 204 Erdos-Renyi graphs on up to 64 vertices and 51
    power-law graphs on up to 512 vertices.
    """
    specs: List[GenSpec] = []
    for n in ER_SIZES:
        for p in ER_DENSITIES:
            specs.extend(GenSpec("er", n, p=p, seed=seed) for seed in ER_SEEDS)
    for alpha in POWERLAW_EXPONENTS:
        for seed in POWERLAW_SEEDS:
            n = POWERLAW_SIZES[seed % len(POWERLAW_SIZES)]
            specs.append(GenSpec("powerlaw", n, alpha=alpha, seed=seed))
    return tuple((str(spec), generate(spec)) for spec in specs)


def to_networkx(g: Graph) -> nx.Graph:
    """The same graph as a networkx.Graph, for cross-checking."""
    result = nx.Graph()
    result.add_nodes_from(range(g.n))
    result.add_edges_from(g.edges())
    return result

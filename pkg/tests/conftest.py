"""Shared drawing builders for the test suite."""

from __future__ import annotations

import random

import numpy as np
import pytest
from scipy.spatial import Delaunay

from aesgrid.model import Canvas, Drawing, Graph


def make_drawing(
    positions,
    edges,
    curvatures=None,
    canvas=(1000.0, 1000.0),
    node_radius=8.0,
    stroke_width=2.0,
) -> Drawing:
    graph = Graph.build(len(positions), edges)
    if curvatures is None:
        curvatures = (0.0,) * len(edges)
    return Drawing(
        graph=graph,
        positions=tuple(tuple(p) for p in positions),
        curvatures=tuple(curvatures),
        canvas=Canvas(*canvas),
        node_radius=node_radius,
        stroke_width=stroke_width,
    )


@pytest.fixture
def triangle() -> Drawing:
    return make_drawing([(100, 100), (900, 100), (500, 800)], [(0, 1), (1, 2), (2, 0)])


@pytest.fixture
def path_drawing() -> Drawing:
    return make_drawing(
        [(100, 100), (400, 300), (700, 200), (900, 600)], [(0, 1), (1, 2), (2, 3)]
    )


@pytest.fixture
def x_drawing() -> Drawing:
    """Two straight edges crossing at (5, 5) at 90 degrees."""
    return make_drawing(
        [(0, 0), (10, 10), (0, 10), (10, 0)],
        [(0, 1), (2, 3)],
        canvas=(10.0, 10.0),
        node_radius=0.5,
        stroke_width=0.2,
    )


K4_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


@pytest.fixture
def k4_graph() -> Graph:
    return Graph.build(4, K4_EDGES)


def random_straight_drawing(
    rng: random.Random,
    max_nodes: int = 10,
    max_edges: int = 20,
    canvas=(1000.0, 1000.0),
) -> Drawing:
    """Random straight-line drawing for crossing-oracle comparisons."""
    n = rng.randint(4, max_nodes)
    all_pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    m = rng.randint(1, min(max_edges, len(all_pairs)))
    edges = rng.sample(all_pairs, m)
    positions = [(rng.uniform(0, canvas[0]), rng.uniform(0, canvas[1])) for _ in range(n)]
    return make_drawing(positions, edges, canvas=canvas)


def delaunay_drawing(seed: int, min_nodes: int = 4, max_nodes: int = 12) -> Drawing:
    """Crossing-free connected straight-line drawing (Delaunay edges)."""
    rng = np.random.default_rng(seed)
    n = int(rng.integers(min_nodes, max_nodes + 1))
    points = rng.uniform(100.0, 900.0, size=(n, 2))
    tri = Delaunay(points)
    edges = set()
    for simplex in tri.simplices:
        for a, b in ((0, 1), (1, 2), (0, 2)):
            edges.add(tuple(sorted((int(simplex[a]), int(simplex[b])))))
    return make_drawing([tuple(p) for p in points], sorted(edges))

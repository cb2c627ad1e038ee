"""Random study elements: graphs, layouts, and element sets.

Graphs follow the uniform fixed-edge-count model: node count n and edge
count m are drawn uniformly from their configured ranges, then m distinct
edges are drawn uniformly without replacement.  Layouts place every node
i.i.d. uniformly on the canvas (overlaps allowed) and give every edge an
i.i.d. uniform curvature in [-max_curvature, +max_curvature].

Everything is deterministic in the seed; element identity is the content
hash of the drawing, so regenerated sets are re-identifiable.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .model import Canvas, DEFAULT_CANVAS, Drawing, Graph

_SPAN_RESAMPLE_LIMIT = 1000


@dataclass(frozen=True)
class GeneratorParams:
    seed: int = 0
    min_edges: int = 5
    max_edges: int = 69
    node_count_range: tuple[int, int] = (4, 40)
    canvas: Canvas = DEFAULT_CANVAS
    max_curvature: float = 0.8

    def __post_init__(self) -> None:
        lo, hi = self.node_count_range
        if self.min_edges < 1:
            raise ValueError("min_edges must be >= 1")
        if self.max_edges < self.min_edges:
            raise ValueError("max_edges must be >= min_edges")
        if lo < 2 or hi < lo:
            raise ValueError(f"bad node_count_range {self.node_count_range}")
        if lo * (lo - 1) // 2 < self.min_edges:
            raise ValueError(
                f"node_count_range {self.node_count_range} cannot host {self.min_edges} edges"
            )
        if not (0.0 <= self.max_curvature <= 1.0):
            raise ValueError("max_curvature must be in [0, 1]")
        object.__setattr__(self, "canvas", Canvas(*self.canvas))

    def with_seed(self, seed: int) -> "GeneratorParams":
        return GeneratorParams(
            seed=seed,
            min_edges=self.min_edges,
            max_edges=self.max_edges,
            node_count_range=self.node_count_range,
            canvas=self.canvas,
            max_curvature=self.max_curvature,
        )


def _sample_graph(rng: random.Random, params: GeneratorParams) -> Graph:
    lo, hi = params.node_count_range
    n = rng.randint(lo, hi)
    possible = n * (n - 1) // 2
    m = rng.randint(params.min_edges, min(params.max_edges, possible))
    all_pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    edges = rng.sample(all_pairs, m)
    return Graph.build(n, edges)


def generate_graph(params: GeneratorParams) -> Graph:
    """One random graph, deterministic in the seed."""
    return _sample_graph(random.Random(params.seed), params)


def random_drawing(graph: Graph, params: GeneratorParams) -> Drawing:
    """Uniform random layout of a graph (positions and curvatures).

    Node overlaps are permitted: there is no rejection or spacing logic.
    The layout stream is independent of the graph-sampling stream so the
    same seed yields the same layout for a given graph.
    """
    rng = random.Random(f"{params.seed}:layout")
    width, height = params.canvas
    positions = tuple(
        (rng.uniform(0.0, width), rng.uniform(0.0, height)) for _ in graph.nodes
    )
    curvatures = tuple(
        rng.uniform(-params.max_curvature, params.max_curvature) for _ in graph.edges
    )
    return Drawing(graph=graph, positions=positions, curvatures=curvatures, canvas=params.canvas)


def generate_element(params: GeneratorParams) -> Drawing:
    return random_drawing(generate_graph(params), params)


def generate_element_set(params: GeneratorParams, count: int = 12) -> list[Drawing]:
    """A set of independent elements spanning the edge-count range.

    For count >= 2 the set is resampled until its min and max edge counts
    differ by at least half the allowed span, so the elements cover breadth
    rather than clustering.  Fails after 1000 resampling rounds (only
    possible with a degenerate configuration).
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    lo, hi = params.node_count_range
    reachable_max = min(params.max_edges, hi * (hi - 1) // 2)
    required_span = 0 if count == 1 else (reachable_max - params.min_edges) / 2.0
    seeder = random.Random(f"{params.seed}:elements")
    for _ in range(_SPAN_RESAMPLE_LIMIT):
        element_params = [params.with_seed(seeder.getrandbits(63)) for _ in range(count)]
        drawings = [generate_element(p) for p in element_params]
        counts = [d.graph.edge_count for d in drawings]
        if max(counts) - min(counts) >= required_span:
            return drawings
    raise RuntimeError(
        f"could not reach edge-count span {required_span} in {_SPAN_RESAMPLE_LIMIT} rounds"
    )

"""Evaluation of every catalog aesthetic on a drawing.

Each metric yields a raw value in metric-specific units and a normalized
score in [0, 1] where 1 is the aesthetically preferred pole.  A metric whose
precondition fails for a drawing (no crossings, no bounded faces, no node of
degree >= 2, ...) reports defined = False instead of raising.

Evaluation is pure and deterministic: identical drawings produce identical
vectors.  The path-based metrics average over all node pairs on small graphs
and over a fixed-seed random sample of 200 pairs on larger ones, so repeated
runs agree bit for bit.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass
from typing import Any, Callable, Iterator

import numpy as np
from scipy import stats

from .catalog import MetricId, MetricResult, catalog, coerce_metric_id
from .geometry import (
    Crossing,
    Face,
    GeometryCache,
    Polyline,
    compute_faces,
    curve_bbox,
    edge_tangent_at_node,
    find_crossings,
    edge_polylines,
    incident_angles,
    point_polyline_distance,
    polyline_length,
)
from .model import Drawing, drawing_hash

# Pair sampling for path metrics: exhaustive up to this many nodes, then a
# fixed-seed sample (keeps evaluation deterministic).
EXHAUSTIVE_PAIR_NODE_LIMIT = 12
PAIR_SAMPLE_SIZE = 200
_PAIR_SAMPLE_SEED = 0x5EED

# |curvature| above this counts as a bend.
BEND_THRESHOLD = 0.05

# Mirror-axis candidates for global symmetry: k * 180/16 through the centroid.
SYMMETRY_AXES = 16
LOCAL_SYMMETRY_TOL_DEG = 10.0


def _clamp01(x: float) -> float:
    return min(1.0, max(0.0, x))


@dataclass(frozen=True)
class MetricVector:
    """All 31 metric results for one drawing."""

    results: tuple[MetricResult, ...]
    drawing_hash: str

    def __getitem__(self, metric_id: MetricId | str) -> MetricResult:
        mid = coerce_metric_id(metric_id)
        for r in self.results:
            if r.id == mid:
                return r
        raise KeyError(mid)

    def __iter__(self) -> Iterator[MetricResult]:
        return iter(self.results)

    def to_dict(self) -> dict[str, Any]:
        return {
            "drawing_hash": self.drawing_hash,
            "results": {r.id.value: r.to_dict() for r in self.results},
        }


class EvalContext:
    """Shared per-drawing computations (polylines, crossings, faces, paths).

    evaluate_all builds one context so the arrangement and crossing set are
    computed once for all 31 metrics.  An optional GeometryCache lets
    incremental callers (the optimizer) reuse work across similar drawings.
    """

    def __init__(self, drawing: Drawing, cache: GeometryCache | None = None):
        self.drawing = drawing
        self.cache = cache
        self._polylines: list[Polyline] | None = None
        self._crossings: list[Crossing] | None = None
        self._faces: list[Face] | None = None
        self._lengths: list[float] | None = None
        self._gaps: dict[int, list[float]] | None = None
        self._pairs: list[tuple[int, int]] | None = None
        self._bfs: dict[int, tuple[list[int], list[int]]] = {}
        self._adjacency: list[list[int]] | None = None
        self._edge_index: dict[frozenset[int], int] | None = None

    @property
    def n(self) -> int:
        return self.drawing.graph.node_count

    @property
    def m(self) -> int:
        return self.drawing.graph.edge_count

    @property
    def polylines(self) -> list[Polyline]:
        if self._polylines is None:
            self._polylines = edge_polylines(self.drawing, cache=self.cache)
        return self._polylines

    @property
    def edge_lengths(self) -> list[float]:
        if self._lengths is None:
            self._lengths = [polyline_length(p) for p in self.polylines]
        return self._lengths

    @property
    def crossings(self) -> list[Crossing]:
        if self._crossings is None:
            self._crossings = find_crossings(self.drawing, self.polylines, self.cache)
        return self._crossings

    @property
    def faces(self) -> list[Face]:
        if self._faces is None:
            self._faces = compute_faces(self.drawing, self.polylines)
        return self._faces

    @property
    def bounded_face_areas(self) -> list[float]:
        return [f.area for f in self.faces if f.bounded]

    @property
    def incident_gaps(self) -> dict[int, list[float]]:
        """Circular tangent gaps per node of degree >= 2."""
        if self._gaps is None:
            self._gaps = {}
            for v in self.drawing.graph.nodes:
                gaps = incident_angles(self.drawing, v)
                if gaps is not None:
                    self._gaps[v] = gaps
        return self._gaps

    @property
    def degrees(self) -> list[int]:
        counts = [0] * self.n
        for a, b in self.drawing.graph.edges:
            counts[a] += 1
            counts[b] += 1
        return counts

    @property
    def adjacency(self) -> list[list[int]]:
        if self._adjacency is None:
            self._adjacency = self.drawing.graph.adjacency()
        return self._adjacency

    @property
    def edge_index(self) -> dict[frozenset[int], int]:
        if self._edge_index is None:
            self._edge_index = {
                frozenset(e): i for i, e in enumerate(self.drawing.graph.edges)
            }
        return self._edge_index

    def bfs(self, source: int) -> tuple[list[int], list[int]]:
        """Distances and parents from source; parents give canonical paths."""
        cached = self._bfs.get(source)
        if cached is not None:
            return cached
        dist = [-1] * self.n
        parent = [-1] * self.n
        dist[source] = 0
        queue = [source]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            for v in self.adjacency[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
        self._bfs[source] = (dist, parent)
        return dist, parent

    def path_nodes(self, s: int, t: int) -> list[int] | None:
        dist, parent = self.bfs(s)
        if dist[t] < 0:
            return None
        path = [t]
        while path[-1] != s:
            path.append(parent[path[-1]])
        path.reverse()
        return path

    @property
    def sampled_pairs(self) -> list[tuple[int, int]]:
        if self._pairs is None:
            n = self.n
            total = n * (n - 1) // 2
            if n <= EXHAUSTIVE_PAIR_NODE_LIMIT or total <= PAIR_SAMPLE_SIZE:
                self._pairs = [(s, t) for s in range(n) for t in range(s + 1, n)]
            else:
                rng = random.Random(_PAIR_SAMPLE_SEED)
                chosen: set[tuple[int, int]] = set()
                while len(chosen) < PAIR_SAMPLE_SIZE:
                    s = rng.randrange(n)
                    t = rng.randrange(n)
                    if s != t:
                        chosen.add((min(s, t), max(s, t)))
                self._pairs = sorted(chosen)
        return self._pairs

    def oriented_path_points(self, path: list[int]) -> np.ndarray:
        """Concatenated polyline of a node path, oriented start to end."""
        pieces: list[np.ndarray] = []
        for a, b in zip(path, path[1:]):
            ei = self.edge_index[frozenset((a, b))]
            poly = self.polylines[ei]
            if self.drawing.graph.edges[ei][0] != a:
                poly = poly[::-1]
            pieces.append(poly if not pieces else poly[1:])
        return np.concatenate(pieces)

    def ink_bbox(self) -> tuple[float, float, float, float] | None:
        """Axis-aligned bbox of all ink (node disks and stroked edges).

        Edge extents use the exact curve bbox, not the flattened polyline,
        so the bbox scales exactly with the drawing.
        """
        d = self.drawing
        if self.n == 0:
            return None
        xs = np.array([p[0] for p in d.positions])
        ys = np.array([p[1] for p in d.positions])
        r = d.node_radius
        min_x, max_x = float(xs.min() - r), float(xs.max() + r)
        min_y, max_y = float(ys.min() - r), float(ys.max() + r)
        half = d.stroke_width / 2.0
        for i in range(self.m):
            p0, p1 = d.edge_endpoints(i)
            lo_x, lo_y, hi_x, hi_y = curve_bbox(p0, p1, d.curvatures[i])
            min_x = min(min_x, lo_x - half)
            max_x = max(max_x, hi_x + half)
            min_y = min(min_y, lo_y - half)
            max_y = max(max_y, hi_y + half)
        return min_x, min_y, max_x, max_y


# ---------------------------------------------------------------------------
# Metric implementations: each returns (raw, score) or None when undefined.
# ---------------------------------------------------------------------------


def _angular_resolution(ctx: EvalContext):
    gaps = ctx.incident_gaps
    if not gaps:
        return None
    degrees = ctx.degrees
    raw = min(min(g) for g in gaps.values())
    ideal = min(360.0 / degrees[v] for v in gaps)
    return raw, _clamp01(raw / ideal)


def _angular_resolution_sd(ctx: EvalContext):
    gaps = ctx.incident_gaps
    if not gaps:
        return None
    values = [g for lst in gaps.values() for g in lst]
    raw = float(np.std(values))
    return raw, 1.0 / (1.0 + raw / 36.0)


def _area(ctx: EvalContext):
    bbox = ctx.ink_bbox()
    if bbox is None:
        return None
    raw = (bbox[2] - bbox[0]) * (bbox[3] - bbox[1])
    canvas_area = ctx.drawing.canvas.width * ctx.drawing.canvas.height
    return raw, _clamp01(1.0 - raw / canvas_area)


def _aspect_ratio(ctx: EvalContext):
    bbox = ctx.ink_bbox()
    if bbox is None:
        return None
    raw = (bbox[2] - bbox[0]) / (bbox[3] - bbox[1])
    return raw, min(raw, 1.0 / raw)


def _cluster_similar_nodes(ctx: EvalContext):
    graph_d: list[int] = []
    euclid_d: list[float] = []
    pos = ctx.drawing.positions
    for s in range(ctx.n):
        dist, _ = ctx.bfs(s)
        for t in range(s + 1, ctx.n):
            if dist[t] > 0:
                graph_d.append(dist[t])
                euclid_d.append(math.dist(pos[s], pos[t]))
    if len(graph_d) < 2 or len(set(graph_d)) < 2 or len(set(euclid_d)) < 2:
        return None  # correlation undefined for constant inputs
    rho = float(stats.spearmanr(graph_d, euclid_d)[0])
    if math.isnan(rho):
        return None
    return rho, _clamp01((rho + 1.0) / 2.0)


def _convex_faces(ctx: EvalContext):
    bounded = [f for f in ctx.faces if f.bounded]
    if not bounded:
        return None
    raw = sum(1 for f in bounded if f.convex) / len(bounded)
    return raw, raw


def _consistent_flow_direction(ctx: EvalContext):
    if ctx.m == 0:
        return None
    total = 0j
    for i in range(ctx.m):
        (x0, y0), (x1, y1) = ctx.drawing.edge_endpoints(i)
        theta = math.atan2(y1 - y0, x1 - x0)
        total += cmath.exp(2j * theta)  # doubled: edges are undirected (axial data)
    raw = abs(total) / ctx.m
    return raw, _clamp01(raw)


def _crossing_angle(ctx: EvalContext):
    if not ctx.crossings:
        return None
    raw = float(np.mean([c.angle for c in ctx.crossings]))
    return raw, _clamp01(raw / 90.0)


def _difference_between_angles(ctx: EvalContext):
    if not ctx.crossings:
        return None
    raw = 90.0 - min(c.angle for c in ctx.crossings)
    return raw, _clamp01(1.0 - raw / 90.0)


def _degree_of_edge_bends(ctx: EvalContext):
    if ctx.m == 0:
        return None
    raw = float(np.mean(np.abs(ctx.drawing.curvatures)))
    return raw, _clamp01(1.0 - raw)


def _distribute_nodes_evenly(ctx: EvalContext):
    if ctx.n == 0:
        return None
    side = math.ceil(math.sqrt(ctx.n))
    if side == 1:
        return 1.0, 1.0
    width, height = ctx.drawing.canvas
    counts: dict[tuple[int, int], int] = {}
    for x, y in ctx.drawing.positions:
        cell = (
            min(int(x / width * side), side - 1),
            min(int(y / height * side), side - 1),
        )
        counts[cell] = counts.get(cell, 0) + 1
    probs = np.array(list(counts.values()), dtype=float) / ctx.n
    entropy = float(-np.sum(probs * np.log(probs)))
    raw = entropy / math.log(side * side)
    return raw, _clamp01(raw)


def _edge_orthogonality(ctx: EvalContext):
    if ctx.m == 0:
        return None
    deviations = []
    for i in range(ctx.m):
        (x0, y0), (x1, y1) = ctx.drawing.edge_endpoints(i)
        theta = math.degrees(math.atan2(y1 - y0, x1 - x0)) % 90.0
        deviations.append(min(theta, 90.0 - theta))
    raw = float(np.mean(deviations))
    return raw, _clamp01(1.0 - raw / 45.0)


def _greedy_match_fraction(
    candidates: list[tuple[float, int, int]], left_count: int
) -> float:
    """Bijectively match left items to right items, nearest pairs first."""
    candidates.sort()
    used_left: set[int] = set()
    used_right: set[int] = set()
    matched = 0
    for _, i, j in candidates:
        if i in used_left or j in used_right:
            continue
        used_left.add(i)
        used_right.add(j)
        matched += 1
    return matched / left_count


def _global_symmetry(ctx: EvalContext):
    if ctx.n == 0:
        return None
    pos = np.array(ctx.drawing.positions, dtype=float)
    centroid = pos.mean(axis=0)
    rel = pos - centroid
    tol = 2.0 * ctx.drawing.node_radius
    best = 0.0
    for k in range(SYMMETRY_AXES):
        alpha = math.pi * k / SYMMETRY_AXES
        cos2, sin2 = math.cos(2 * alpha), math.sin(2 * alpha)
        mirrored = np.column_stack(
            (rel[:, 0] * cos2 + rel[:, 1] * sin2, rel[:, 0] * sin2 - rel[:, 1] * cos2)
        )
        dists = np.hypot(
            mirrored[:, None, 0] - rel[None, :, 0], mirrored[:, None, 1] - rel[None, :, 1]
        )
        ii, jj = np.nonzero(dists <= tol)
        candidates = [(float(dists[i, j]), int(i), int(j)) for i, j in zip(ii, jj)]
        best = max(best, _greedy_match_fraction(candidates, ctx.n))
        if best == 1.0:
            break
    return best, _clamp01(best)


def _keep_nodes_apart_from_edges(ctx: EvalContext):
    raw = math.inf
    for v in range(ctx.n):
        p = ctx.drawing.positions[v]
        for ei, (a, b) in enumerate(ctx.drawing.graph.edges):
            if v in (a, b):
                continue
            raw = min(raw, point_polyline_distance(p, ctx.polylines[ei]))
    if raw is math.inf:
        return None
    return raw, _clamp01(raw / (4.0 * ctx.drawing.node_radius))


def _circular_diff(a: float, b: float) -> float:
    return abs((a - b + math.pi) % (2.0 * math.pi) - math.pi)


def _local_symmetry(ctx: EvalContext):
    tol = math.radians(LOCAL_SYMMETRY_TOL_DEG)
    node_scores = []
    for v, _ in ctx.incident_gaps.items():
        directions = [
            edge_tangent_at_node(ctx.drawing, ei, v)
            for ei in ctx.drawing.graph.incident_edges(v)
        ]
        axes = list(directions)
        for i in range(len(directions)):
            for j in range(i + 1, len(directions)):
                mid = (directions[i] + directions[j]) / 2.0
                axes.extend((mid, mid + math.pi / 2.0))
        best = 0.0
        for alpha in axes:
            candidates = []
            for i, theta in enumerate(directions):
                reflected = 2.0 * alpha - theta
                for j, other in enumerate(directions):
                    diff = _circular_diff(reflected, other)
                    if diff <= tol:
                        candidates.append((diff, i, j))
            best = max(best, _greedy_match_fraction(candidates, len(directions)))
            if best == 1.0:
                break
        node_scores.append(best)
    if not node_scores:
        return None
    raw = float(np.mean(node_scores))
    return raw, _clamp01(raw)


def _maximum_bends(ctx: EvalContext):
    if ctx.m == 0:
        return None
    raw = float(np.max(np.abs(ctx.drawing.curvatures)))
    return raw, _clamp01(1.0 - raw)


def _number_of_bends(ctx: EvalContext):
    if ctx.m == 0:
        return None
    raw = float(sum(1 for c in ctx.drawing.curvatures if abs(c) > BEND_THRESHOLD))
    return raw, _clamp01(1.0 - raw / ctx.m)


def _uniform_edge_bends(ctx: EvalContext):
    if ctx.m == 0:
        return None
    raw = float(np.std(np.abs(ctx.drawing.curvatures)))
    return raw, 1.0 / (1.0 + 10.0 * raw)


def _canvas_diagonal(ctx: EvalContext) -> float:
    return math.hypot(ctx.drawing.canvas.width, ctx.drawing.canvas.height)


def _maximum_edge_length(ctx: EvalContext):
    if ctx.m == 0:
        return None
    raw = max(ctx.edge_lengths)
    return raw, 1.0 / (1.0 + raw / _canvas_diagonal(ctx))


def _total_edge_length(ctx: EvalContext):
    if ctx.m == 0:
        return None
    raw = sum(ctx.edge_lengths)
    return raw, 1.0 / (1.0 + raw / (ctx.m * _canvas_diagonal(ctx) / 4.0))


def _uniform_edge_lengths(ctx: EvalContext):
    if ctx.m == 0:
        return None
    lengths = np.array(ctx.edge_lengths)
    raw = float(np.std(lengths) / np.mean(lengths))
    return raw, 1.0 / (1.0 + raw)


def _node_orthogonality(ctx: EvalContext):
    if ctx.n == 0:
        return None
    pitch = ctx.drawing.canvas.width / 16.0
    hits = 0
    for x, y in ctx.drawing.positions:
        dx = x - round(x / pitch) * pitch
        dy = y - round(y / pitch) * pitch
        if math.hypot(dx, dy) <= ctx.drawing.node_radius:
            hits += 1
    raw = hits / ctx.n
    return raw, _clamp01(raw)


def _nodes_should_not_overlap(ctx: EvalContext):
    if ctx.n < 2:
        return None
    pos = ctx.drawing.positions
    limit = 2.0 * ctx.drawing.node_radius
    raw = 0
    for i in range(ctx.n):
        for j in range(i + 1, ctx.n):
            if math.dist(pos[i], pos[j]) < limit:
                raw += 1
    total = ctx.n * (ctx.n - 1) // 2
    return float(raw), _clamp01(1.0 - raw / total)


def _number_of_branches(ctx: EvalContext):
    degrees = ctx.degrees
    surpluses = []
    for s, t in ctx.sampled_pairs:
        path = ctx.path_nodes(s, t)
        if path is None:
            continue
        surpluses.append(sum(max(0, degrees[v] - 2) for v in path[1:-1]))
    if not surpluses:
        return None
    raw = float(np.mean(surpluses))
    return raw, 1.0 / (1.0 + raw)


def _number_of_edge_crossings(ctx: EvalContext):
    raw = float(len(ctx.crossings))
    adjacent_pairs = sum(d * (d - 1) // 2 for d in ctx.degrees)
    c_max = ctx.m * (ctx.m - 1) // 2 - adjacent_pairs
    score = 1.0 if c_max <= 0 else _clamp01(1.0 - raw / c_max)
    return raw, score


def _path_turning(points: np.ndarray) -> float:
    """Cumulative unsigned turning angle (radians) along a polyline."""
    d = np.diff(points, axis=0)
    keep = np.hypot(d[:, 0], d[:, 1]) > 0
    d = d[keep]
    if len(d) < 2:
        return 0.0
    cross = d[:-1, 0] * d[1:, 1] - d[:-1, 1] * d[1:, 0]
    dot = d[:-1, 0] * d[1:, 0] + d[:-1, 1] * d[1:, 1]
    return float(np.sum(np.abs(np.arctan2(cross, dot))))


def _path_bendiness(ctx: EvalContext):
    ratios = []
    for s, t in ctx.sampled_pairs:
        path = ctx.path_nodes(s, t)
        if path is None or len(path) < 2:
            continue
        points = ctx.oriented_path_points(path)
        length = polyline_length(points)
        if length <= 0.0:
            continue
        ratios.append(_path_turning(points) / length)
    if not ratios:
        return None
    raw = float(np.mean(ratios))
    return raw, 1.0 / (1.0 + raw * 100.0)


def _shortest_path_length(ctx: EvalContext):
    ratios = []
    pos = ctx.drawing.positions
    for s, t in ctx.sampled_pairs:
        path = ctx.path_nodes(s, t)
        if path is None or len(path) < 2:
            continue
        straight = math.dist(pos[s], pos[t])
        if straight <= 1e-9:
            continue
        drawn = polyline_length(ctx.oriented_path_points(path))
        ratios.append(drawn / straight)
    if not ratios:
        return None
    raw = float(np.mean(ratios))
    return raw, _clamp01(1.0 / raw)


def _crossing_angle_sd(ctx: EvalContext):
    if len(ctx.crossings) < 2:
        return None
    raw = float(np.std([c.angle for c in ctx.crossings]))
    return raw, 1.0 / (1.0 + raw / 30.0)


def _whitespace_to_ink_ratio(ctx: EvalContext):
    d = ctx.drawing
    ink = d.stroke_width * sum(ctx.edge_lengths) + ctx.n * math.pi * d.node_radius**2
    raw = 1.0 - ink / (d.canvas.width * d.canvas.height)
    return raw, _clamp01(raw)


def _face_area(ctx: EvalContext):
    areas = ctx.bounded_face_areas
    if not areas:
        return None
    canvas_area = ctx.drawing.canvas.width * ctx.drawing.canvas.height
    raw = float(np.mean(areas)) / canvas_area
    return raw, _clamp01(4.0 * raw * (1.0 - raw))


def _uniform_faces(ctx: EvalContext):
    areas = ctx.bounded_face_areas
    if len(areas) < 2:
        return None
    raw = float(np.std(areas) / np.mean(areas))
    return raw, 1.0 / (1.0 + raw)


_IMPLEMENTATIONS: dict[MetricId, Callable[[EvalContext], tuple[float, float] | None]] = {
    MetricId.ANGULAR_RESOLUTION: _angular_resolution,
    MetricId.ANGULAR_RESOLUTION_SD: _angular_resolution_sd,
    MetricId.AREA: _area,
    MetricId.ASPECT_RATIO: _aspect_ratio,
    MetricId.CLUSTER_SIMILAR_NODES: _cluster_similar_nodes,
    MetricId.CONVEX_FACES: _convex_faces,
    MetricId.CONSISTENT_FLOW_DIRECTION: _consistent_flow_direction,
    MetricId.CROSSING_ANGLE: _crossing_angle,
    MetricId.DIFFERENCE_BETWEEN_ANGLES: _difference_between_angles,
    MetricId.DEGREE_OF_EDGE_BENDS: _degree_of_edge_bends,
    MetricId.DISTRIBUTE_NODES_EVENLY: _distribute_nodes_evenly,
    MetricId.EDGE_ORTHOGONALITY: _edge_orthogonality,
    MetricId.GLOBAL_SYMMETRY: _global_symmetry,
    MetricId.KEEP_NODES_APART_FROM_EDGES: _keep_nodes_apart_from_edges,
    MetricId.LOCAL_SYMMETRY: _local_symmetry,
    MetricId.MAXIMUM_BENDS: _maximum_bends,
    MetricId.NUMBER_OF_BENDS: _number_of_bends,
    MetricId.UNIFORM_EDGE_BENDS: _uniform_edge_bends,
    MetricId.MAXIMUM_EDGE_LENGTH: _maximum_edge_length,
    MetricId.TOTAL_EDGE_LENGTH: _total_edge_length,
    MetricId.UNIFORM_EDGE_LENGTHS: _uniform_edge_lengths,
    MetricId.NODE_ORTHOGONALITY: _node_orthogonality,
    MetricId.NODES_SHOULD_NOT_OVERLAP: _nodes_should_not_overlap,
    MetricId.NUMBER_OF_BRANCHES: _number_of_branches,
    MetricId.NUMBER_OF_EDGE_CROSSINGS: _number_of_edge_crossings,
    MetricId.PATH_BENDINESS: _path_bendiness,
    MetricId.SHORTEST_PATH_LENGTH: _shortest_path_length,
    MetricId.CROSSING_ANGLE_SD: _crossing_angle_sd,
    MetricId.WHITESPACE_TO_INK_RATIO: _whitespace_to_ink_ratio,
    MetricId.FACE_AREA: _face_area,
    MetricId.UNIFORM_FACES: _uniform_faces,
}


def evaluate(
    drawing: Drawing,
    metric_id: MetricId | str,
    context: EvalContext | None = None,
) -> MetricResult:
    """Evaluate one aesthetic.  Unknown ids raise KeyError; metrics whose
    precondition fails for this drawing come back with defined = False."""
    mid = coerce_metric_id(metric_id)
    if context is None:
        context = EvalContext(drawing)
    outcome = _IMPLEMENTATIONS[mid](context)
    if outcome is None:
        return MetricResult(mid, 0.0, 0.0, False)
    raw, score = outcome
    return MetricResult(mid, float(raw), float(score), True)


def evaluate_all(drawing: Drawing, cache: GeometryCache | None = None) -> MetricVector:
    """Evaluate the full catalog with shared geometry computations."""
    context = EvalContext(drawing, cache)
    results = tuple(evaluate(drawing, entry.id, context) for entry in catalog())
    return MetricVector(results, drawing_hash(drawing))


_DEFINITIONS: dict[MetricId, str] = {
    MetricId.ANGULAR_RESOLUTION: (
        "Minimum angle between circularly adjacent edge tangents over nodes of "
        "degree >= 2; score = raw / ideal, where ideal is the smallest 360/degree "
        "among those nodes."
    ),
    MetricId.ANGULAR_RESOLUTION_SD: (
        "Standard deviation of all incident tangent angles (degrees) at nodes of "
        "degree >= 2; score = 1 / (1 + raw/36)."
    ),
    MetricId.AREA: (
        "Bounding-box area of all ink (node disks and stroked edges); score = "
        "1 - raw / canvas area, clamped to [0, 1]."
    ),
    MetricId.ASPECT_RATIO: (
        "Ink bounding-box width divided by height; score = min(raw, 1/raw)."
    ),
    MetricId.CLUSTER_SIMILAR_NODES: (
        "Spearman rank correlation between graph distance and Euclidean distance "
        "over all connected node pairs; score = (raw + 1) / 2.  Structural "
        "proximity stands in for node similarity on unlabeled drawings."
    ),
    MetricId.CONVEX_FACES: (
        "Fraction of bounded faces that are convex (reflex turns up to 1 degree "
        "tolerated); score = raw.  Undefined without bounded faces."
    ),
    MetricId.CONSISTENT_FLOW_DIRECTION: (
        "Axial mean resultant length of edge chord directions (angles doubled "
        "because edges are undirected); score = raw."
    ),
    MetricId.CROSSING_ANGLE: (
        "Mean acute crossing angle in degrees; score = raw / 90.  Undefined "
        "without crossings."
    ),
    MetricId.DIFFERENCE_BETWEEN_ANGLES: (
        "90 degrees minus the minimum crossing angle (distance of the worst "
        "crossing from optimal); score = 1 - raw/90.  Undefined without crossings."
    ),
    MetricId.DEGREE_OF_EDGE_BENDS: (
        "Mean absolute edge curvature (fraction of chord length); score = 1 - raw."
    ),
    MetricId.DISTRIBUTE_NODES_EVENLY: (
        "Normalized entropy of node counts over a ceil(sqrt(n)) x ceil(sqrt(n)) "
        "partition of the canvas; score = raw."
    ),
    MetricId.EDGE_ORTHOGONALITY: (
        "Mean angular deviation of edge chords from the nearest axis (0-45 "
        "degrees); score = 1 - raw/45."
    ),
    MetricId.GLOBAL_SYMMETRY: (
        "Best fraction of nodes whose mirror image lies within 2 node radii of "
        "some node (greedy bijective matching) over 16 candidate mirror axes "
        "through the position centroid; score = raw."
    ),
    MetricId.KEEP_NODES_APART_FROM_EDGES: (
        "Minimum distance from any node center to any non-incident edge; score = "
        "clamp(raw / (4 node radii), 0, 1)."
    ),
    MetricId.LOCAL_SYMMETRY: (
        "Per node of degree >= 2, the best fraction of incident-edge directions "
        "matched to their mirror images (tolerance 10 degrees) over candidate "
        "axes through the node; raw = mean fraction; score = raw."
    ),
    MetricId.MAXIMUM_BENDS: ("Maximum absolute edge curvature; score = 1 - raw."),
    MetricId.NUMBER_OF_BENDS: (
        "Count of bent edges (|curvature| > 0.05); score = 1 - raw / edge count."
    ),
    MetricId.UNIFORM_EDGE_BENDS: (
        "Standard deviation of absolute curvatures; score = 1 / (1 + 10 raw)."
    ),
    MetricId.MAXIMUM_EDGE_LENGTH: (
        "Longest flattened edge length; score = 1 / (1 + raw / canvas diagonal)."
    ),
    MetricId.TOTAL_EDGE_LENGTH: (
        "Sum of flattened edge lengths; score = 1 / (1 + raw / (m * canvas "
        "diagonal / 4))."
    ),
    MetricId.UNIFORM_EDGE_LENGTHS: (
        "Coefficient of variation of flattened edge lengths; score = 1 / (1 + raw)."
    ),
    MetricId.NODE_ORTHOGONALITY: (
        "Fraction of nodes within one node radius of the nearest point of a "
        "virtual grid with pitch canvas width / 16; score = raw."
    ),
    MetricId.NODES_SHOULD_NOT_OVERLAP: (
        "Number of node pairs closer than two node radii; score = 1 - raw / C(n, 2)."
    ),
    MetricId.NUMBER_OF_BRANCHES: (
        "Mean over sampled node pairs of the degree-minus-2 surplus summed over "
        "interior nodes of the graph-shortest path; score = 1 / (1 + raw)."
    ),
    MetricId.NUMBER_OF_EDGE_CROSSINGS: (
        "Count of transversal crossings between non-adjacent edge pairs; score = "
        "1 - raw / c_max with c_max the count of non-adjacent edge pairs, clamped."
    ),
    MetricId.PATH_BENDINESS: (
        "Mean over sampled node pairs of cumulative turning angle (radians) along "
        "the drawn shortest path divided by its drawn length; score = "
        "1 / (1 + 100 raw)."
    ),
    MetricId.SHORTEST_PATH_LENGTH: (
        "Mean over sampled node pairs of drawn shortest-path length divided by "
        "straight-line distance; score = 1 / raw, clamped to [0, 1]."
    ),
    MetricId.CROSSING_ANGLE_SD: (
        "Standard deviation of crossing angles (degrees); score = 1 / (1 + raw/30). "
        "Undefined with fewer than two crossings."
    ),
    MetricId.WHITESPACE_TO_INK_RATIO: (
        "Ink area = stroke width x total edge length plus node disk areas "
        "(overlap ignored); raw = 1 - ink / canvas area; score = raw clamped."
    ),
    MetricId.FACE_AREA: (
        "Mean bounded face area divided by canvas area; score = 4 raw (1 - raw) "
        "clamped, peaking at medium-sized faces.  Undefined without bounded faces."
    ),
    MetricId.UNIFORM_FACES: (
        "Coefficient of variation of bounded face areas; score = 1 / (1 + raw).  "
        "Undefined with fewer than two bounded faces."
    ),
}


def explain(metric_id: MetricId | str) -> str:
    """The exact formula behind a metric's raw value and score."""
    return _DEFINITIONS[coerce_metric_id(metric_id)]

"""Layout optimization against weighted combinations of catalog aesthetics.

Simulated annealing over node positions and edge curvatures: per iteration
one node is displaced by a Gaussian step or one curvature is perturbed
uniformly; improvements are always accepted, deteriorations with probability
exp(delta / T) under a geometric cooling schedule.  Annealing (rather than a
force model) optimizes arbitrary catalog objectives uniformly, including
non-differentiable ones such as crossing counts and face structure.

Results are reproducible per (seed, config); the best-ever value trace is
non-decreasing, and the returned drawing reproduces the reported value on
fresh recomputation exactly (a shared GeometryCache memoizes pure functions,
so cached evaluation is bit-identical to recomputation).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Any

from .catalog import EVALUATED_IDS, MetricId, coerce_metric_id
from .generator import GeneratorParams, random_drawing
from .geometry import GeometryCache
from .metrics import EvalContext, evaluate
from .model import Drawing, Graph


class UndefinedObjectiveError(ValueError):
    """All weighted metrics are undefined for the drawing (skip policy)."""


@dataclass(frozen=True)
class Objective:
    """Non-negative weights over metric ids, plus the undefined-metric policy.

    skip: undefined metrics drop out of the weighted mean.
    worst: undefined metrics contribute score 0.
    """

    weights: dict[MetricId, float] = field(default_factory=dict)
    undefined_policy: str = "skip"

    def __post_init__(self) -> None:
        coerced = {}
        for mid, w in self.weights.items():
            w = float(w)
            if w < 0:
                raise ValueError(f"negative weight for {mid}")
            coerced[coerce_metric_id(mid)] = w
        if not any(w > 0 for w in coerced.values()):
            raise ValueError("objective needs at least one strictly positive weight")
        if self.undefined_policy not in ("skip", "worst"):
            raise ValueError(f"unknown undefined_policy {self.undefined_policy!r}")
        object.__setattr__(self, "weights", coerced)

    @classmethod
    def single(cls, metric_id: MetricId | str, undefined_policy: str = "skip") -> "Objective":
        return cls({coerce_metric_id(metric_id): 1.0}, undefined_policy)

    @classmethod
    def default(cls) -> "Objective":
        """Uniform weights over the 13 aesthetics with published evidence."""
        return cls({mid: 1.0 for mid in EVALUATED_IDS})

    def to_dict(self) -> dict[str, Any]:
        return {
            "weights": {mid.value: w for mid, w in sorted(self.weights.items())},
            "undefined_policy": self.undefined_policy,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Objective":
        return cls(
            {coerce_metric_id(k): float(v) for k, v in data["weights"].items()},
            data.get("undefined_policy", "skip"),
        )


@dataclass(frozen=True)
class AnnealConfig:
    seed: int = 0
    max_iterations: int = 20_000
    initial_temperature: float = 0.1
    cooling_factor: float = 0.9997
    move_sigma_fraction: float = 0.02  # node displacement sigma, canvas fraction
    curvature_delta: float = 0.1

    def __post_init__(self) -> None:
        if self.max_iterations < 0:
            raise ValueError("max_iterations must be >= 0")
        if not (0.0 < self.cooling_factor < 1.0):
            raise ValueError("cooling_factor must be in (0, 1)")
        if self.initial_temperature <= 0.0:
            raise ValueError("initial_temperature must be positive")
        if self.move_sigma_fraction <= 0.0 or self.curvature_delta <= 0.0:
            raise ValueError("move scales must be positive")


@dataclass(frozen=True)
class OptimizeResult:
    drawing: Drawing
    value: float
    trace: tuple[float, ...]  # best-ever objective after each iteration

    def to_dict(self) -> dict[str, Any]:
        return {
            "drawing": self.drawing.to_dict(),
            "value": self.value,
            "trace": list(self.trace),
        }


def objective_value(
    drawing: Drawing,
    objective: Objective,
    cache: GeometryCache | None = None,
) -> float:
    """Weighted mean of the objective's metric scores, in [0, 1].

    Under the skip policy the mean runs over defined metrics only and an
    all-undefined objective raises; under worst, undefined metrics score 0.
    """
    context = EvalContext(drawing, cache)
    numerator = 0.0
    denominator = 0.0
    for mid, weight in sorted(objective.weights.items()):
        if weight <= 0.0:
            continue
        result = evaluate(drawing, mid, context)
        if result.defined:
            numerator += weight * result.score
            denominator += weight
        elif objective.undefined_policy == "worst":
            denominator += weight
    if denominator == 0.0:
        raise UndefinedObjectiveError(
            "all weighted metrics are undefined for this drawing"
        )
    return numerator / denominator


def _propose(
    drawing: Drawing,
    rng: random.Random,
    config: AnnealConfig,
) -> Drawing:
    """One perturbed copy: move a node (Gaussian) or bend an edge (uniform)."""
    width, height = drawing.canvas
    n = drawing.graph.node_count
    m = drawing.graph.edge_count
    move_edge = m > 0 and (n == 0 or rng.random() < 0.5)
    if move_edge:
        ei = rng.randrange(m)
        delta = rng.uniform(-config.curvature_delta, config.curvature_delta)
        new_c = min(1.0, max(-1.0, drawing.curvatures[ei] + delta))
        curvatures = drawing.curvatures[:ei] + (new_c,) + drawing.curvatures[ei + 1 :]
        return Drawing(
            drawing.graph, drawing.positions, curvatures, drawing.canvas,
            drawing.node_radius, drawing.stroke_width,
        )
    sigma = config.move_sigma_fraction * min(width, height)
    v = rng.randrange(n)
    x, y = drawing.positions[v]
    new_pos = (
        min(width, max(0.0, x + rng.gauss(0.0, sigma))),
        min(height, max(0.0, y + rng.gauss(0.0, sigma))),
    )
    positions = drawing.positions[:v] + (new_pos,) + drawing.positions[v + 1 :]
    return Drawing(
        drawing.graph, positions, drawing.curvatures, drawing.canvas,
        drawing.node_radius, drawing.stroke_width,
    )


def optimize_layout(
    graph: Graph,
    objective: Objective,
    config: AnnealConfig,
    start: Drawing | None = None,
) -> OptimizeResult:
    """Anneal a layout for the graph from a random start.

    Returns the best-ever drawing with the per-iteration best-value trace.
    Stops early once the objective reaches its maximum of 1.0 (no move can
    improve on a perfect score), so the trace may be shorter than
    max_iterations.
    """
    if start is None:
        start = random_drawing(graph, GeneratorParams(seed=config.seed))
    cache = GeometryCache()
    rng = random.Random(f"{config.seed}:anneal")
    current = start
    current_value = objective_value(current, objective, cache)
    best, best_value = current, current_value
    temperature = config.initial_temperature
    trace: list[float] = []
    for _ in range(config.max_iterations):
        if best_value >= 1.0:
            break
        candidate = _propose(current, rng, config)
        candidate_value = objective_value(candidate, objective, cache)
        delta = candidate_value - current_value
        if delta >= 0.0 or rng.random() < math.exp(delta / temperature):
            current, current_value = candidate, candidate_value
            if current_value > best_value:
                best, best_value = current, current_value
        trace.append(best_value)
        temperature *= config.cooling_factor
    return OptimizeResult(best, best_value, tuple(trace))


def greedy_refine(
    drawing: Drawing,
    objective: Objective,
    config: AnnealConfig,
) -> Drawing:
    """Hill-climb from a given drawing: only strict improvements accepted."""
    cache = GeometryCache()
    rng = random.Random(f"{config.seed}:greedy")
    current = drawing
    current_value = objective_value(current, objective, cache)
    for _ in range(config.max_iterations):
        if current_value >= 1.0:
            break
        candidate = _propose(current, rng, config)
        candidate_value = objective_value(candidate, objective, cache)
        if candidate_value > current_value:
            current, current_value = candidate, candidate_value
    return current

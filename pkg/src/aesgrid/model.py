"""Core domain types: graphs, drawings, and their JSON wire format.

A Graph is a simple undirected graph over dense 0-based integer node ids.
A Drawing embeds a graph on a rectangular canvas: one position per node and
one signed curvature per edge.  Curvature is a fraction of the chord length;
the edge is rendered as a quadratic Bezier whose control point sits at the
chord midpoint, displaced perpendicular to the chord by curvature * chord
length (positive = left of the stored p0->p1 direction).

All values are immutable after construction and safe to share across threads.
The dict/JSON representations produced here are the wire format used by the
CLI, the persistence layer, and the HTTP service.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass
from typing import Any, Iterable, NamedTuple, Sequence


class Canvas(NamedTuple):
    width: float
    height: float


DEFAULT_CANVAS = Canvas(1000.0, 1000.0)
DEFAULT_NODE_RADIUS = 8.0
DEFAULT_STROKE_WIDTH = 2.0


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with dense integer node ids."""

    nodes: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        expected = tuple(range(len(self.nodes)))
        if self.nodes != expected:
            raise ValueError("node ids must be dense 0-based integers")
        seen: set[frozenset[int]] = set()
        for idx, (a, b) in enumerate(self.edges):
            if a == b:
                raise ValueError(f"edge {idx} is a self-loop ({a})")
            if not (0 <= a < len(self.nodes) and 0 <= b < len(self.nodes)):
                raise ValueError(f"edge {idx} references unknown node ({a}, {b})")
            key = frozenset((a, b))
            if key in seen:
                raise ValueError(f"edge {idx} duplicates ({a}, {b})")
            seen.add(key)

    @classmethod
    def build(cls, node_count: int, edges: Iterable[Sequence[int]]) -> "Graph":
        return cls(tuple(range(node_count)), tuple((int(a), int(b)) for a, b in edges))

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, node: int) -> int:
        return sum(1 for a, b in self.edges if node in (a, b))

    def adjacency(self) -> list[list[int]]:
        """Neighbour lists in ascending order (deterministic traversals)."""
        adj: list[list[int]] = [[] for _ in self.nodes]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        for lst in adj:
            lst.sort()
        return adj

    def incident_edges(self, node: int) -> list[int]:
        return [i for i, (a, b) in enumerate(self.edges) if node in (a, b)]

    def to_dict(self) -> dict[str, Any]:
        return {
            "nodes": list(self.nodes),
            "edges": [list(e) for e in self.edges],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Graph":
        return cls(
            tuple(int(n) for n in data["nodes"]),
            tuple((int(a), int(b)) for a, b in data["edges"]),
        )


@dataclass(frozen=True)
class Drawing:
    """A graph plus geometric embedding on a canvas."""

    graph: Graph
    positions: tuple[tuple[float, float], ...]
    curvatures: tuple[float, ...]
    canvas: Canvas = DEFAULT_CANVAS
    node_radius: float = DEFAULT_NODE_RADIUS
    stroke_width: float = DEFAULT_STROKE_WIDTH

    def __post_init__(self) -> None:
        object.__setattr__(
            self,
            "positions",
            tuple((float(x), float(y)) for x, y in self.positions),
        )
        object.__setattr__(self, "curvatures", tuple(float(c) for c in self.curvatures))
        object.__setattr__(self, "canvas", Canvas(*self.canvas))

    def edge_endpoints(self, edge_index: int) -> tuple[tuple[float, float], tuple[float, float]]:
        a, b = self.graph.edges[edge_index]
        return self.positions[a], self.positions[b]

    def to_dict(self) -> dict[str, Any]:
        return {
            "graph": self.graph.to_dict(),
            "positions": [list(p) for p in self.positions],
            "curvatures": list(self.curvatures),
            "canvas": {"width": self.canvas.width, "height": self.canvas.height},
            "node_radius": self.node_radius,
            "stroke_width": self.stroke_width,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Drawing":
        return cls(
            graph=Graph.from_dict(data["graph"]),
            positions=tuple((float(x), float(y)) for x, y in data["positions"]),
            curvatures=tuple(float(c) for c in data["curvatures"]),
            canvas=Canvas(float(data["canvas"]["width"]), float(data["canvas"]["height"])),
            node_radius=float(data["node_radius"]),
            stroke_width=float(data["stroke_width"]),
        )

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "Drawing":
        return cls.from_dict(json.loads(text))


def canonical_json(data: Any) -> str:
    """Compact, key-sorted JSON; the canonical form used for content hashes."""
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def content_hash(data: Any) -> str:
    return hashlib.sha256(canonical_json(data).encode("utf-8")).hexdigest()[:16]


def drawing_hash(drawing: Drawing) -> str:
    return content_hash(drawing.to_dict())


def validate_drawing(drawing: Drawing) -> list[str]:
    """Return human-readable invariant violations; empty list means valid.

    Each violation names the offending field and index.  Structural problems
    (length mismatches) are reported before per-element range checks.
    """
    violations: list[str] = []
    g = drawing.graph
    if len(drawing.positions) != g.node_count:
        violations.append(
            f"positions: expected {g.node_count} entries, got {len(drawing.positions)}"
        )
    if len(drawing.curvatures) != g.edge_count:
        violations.append(
            f"curvatures: expected {g.edge_count} entries, got {len(drawing.curvatures)}"
        )
    width, height = drawing.canvas
    if not (width > 0 and height > 0):
        violations.append(f"canvas: dimensions must be positive, got {width}x{height}")
    for i, (x, y) in enumerate(drawing.positions[: g.node_count]):
        if not (math.isfinite(x) and math.isfinite(y)):
            violations.append(f"positions[{i}]: non-finite coordinate ({x}, {y})")
        elif not (0.0 <= x <= width and 0.0 <= y <= height):
            violations.append(f"positions[{i}]: ({x}, {y}) outside canvas {width}x{height}")
    for i, c in enumerate(drawing.curvatures[: g.edge_count]):
        if not math.isfinite(c) or abs(c) > 1.0:
            violations.append(f"curvatures[{i}]: magnitude {c} exceeds 1.0")
    if not (drawing.node_radius > 0):
        violations.append(f"node_radius: must be positive, got {drawing.node_radius}")
    if not (drawing.stroke_width > 0):
        violations.append(f"stroke_width: must be positive, got {drawing.stroke_width}")
    return violations

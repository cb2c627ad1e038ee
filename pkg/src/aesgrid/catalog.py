"""The ground-truth registry of measurable drawing aesthetics.

31 aesthetics in total: 29 collected from the graph-drawing literature plus
2 face-based ones first surfaced by interview studies (flagged ``novel``).
13 of the 29 carry published empirical evidence of a significant influence
on readability (flagged ``evaluated``).  Four concern the visual mapping of
edges (category ``visual_mapping``); the rest concern layout composition.

The registry is closed: every metric id produced anywhere in the system is
one of these 31.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any


class Category(str, Enum):
    VISUAL_MAPPING = "visual_mapping"
    COMPOSITION = "composition"


class MetricId(str, Enum):
    ANGULAR_RESOLUTION = "angular_resolution"
    AREA = "area"
    ASPECT_RATIO = "aspect_ratio"
    CLUSTER_SIMILAR_NODES = "cluster_similar_nodes"
    CONVEX_FACES = "convex_faces"
    CONSISTENT_FLOW_DIRECTION = "consistent_flow_direction"
    CROSSING_ANGLE = "crossing_angle"
    DEGREE_OF_EDGE_BENDS = "degree_of_edge_bends"
    DIFFERENCE_BETWEEN_ANGLES = "difference_between_angles"
    DISTRIBUTE_NODES_EVENLY = "distribute_nodes_evenly"
    EDGE_ORTHOGONALITY = "edge_orthogonality"
    GLOBAL_SYMMETRY = "global_symmetry"
    KEEP_NODES_APART_FROM_EDGES = "keep_nodes_apart_from_edges"
    LOCAL_SYMMETRY = "local_symmetry"
    MAXIMUM_BENDS = "maximum_bends"
    MAXIMUM_EDGE_LENGTH = "maximum_edge_length"
    NODE_ORTHOGONALITY = "node_orthogonality"
    NODES_SHOULD_NOT_OVERLAP = "nodes_should_not_overlap"
    NUMBER_OF_BENDS = "number_of_bends"
    NUMBER_OF_BRANCHES = "number_of_branches"
    NUMBER_OF_EDGE_CROSSINGS = "number_of_edge_crossings"
    PATH_BENDINESS = "path_bendiness"
    SHORTEST_PATH_LENGTH = "shortest_path_length"
    CROSSING_ANGLE_SD = "crossing_angle_sd"
    ANGULAR_RESOLUTION_SD = "angular_resolution_sd"
    TOTAL_EDGE_LENGTH = "total_edge_length"
    UNIFORM_EDGE_BENDS = "uniform_edge_bends"
    UNIFORM_EDGE_LENGTHS = "uniform_edge_lengths"
    WHITESPACE_TO_INK_RATIO = "whitespace_to_ink_ratio"
    FACE_AREA = "face_area"
    UNIFORM_FACES = "uniform_faces"

    def __str__(self) -> str:  # plain value in messages and serialized output
        return self.value


@dataclass(frozen=True)
class AestheticCatalogEntry:
    id: MetricId
    display_name: str
    category: Category
    evaluated: bool
    novel: bool

    def to_dict(self) -> dict[str, Any]:
        return {
            "id": self.id.value,
            "display_name": self.display_name,
            "category": self.category.value,
            "evaluated": self.evaluated,
            "novel": self.novel,
        }


def _entry(
    metric_id: MetricId,
    display_name: str,
    *,
    visual_mapping: bool = False,
    evaluated: bool = False,
    novel: bool = False,
) -> AestheticCatalogEntry:
    category = Category.VISUAL_MAPPING if visual_mapping else Category.COMPOSITION
    return AestheticCatalogEntry(metric_id, display_name, category, evaluated, novel)


_CATALOG: tuple[AestheticCatalogEntry, ...] = (
    _entry(MetricId.ANGULAR_RESOLUTION, "Angular resolution", evaluated=True),
    _entry(MetricId.AREA, "Area", evaluated=True),
    _entry(MetricId.ASPECT_RATIO, "Aspect ratio"),
    _entry(MetricId.CLUSTER_SIMILAR_NODES, "Cluster similar nodes", evaluated=True),
    _entry(MetricId.CONVEX_FACES, "Convex faces"),
    _entry(MetricId.CONSISTENT_FLOW_DIRECTION, "Consistent flow direction"),
    _entry(MetricId.CROSSING_ANGLE, "Crossing angle", evaluated=True),
    _entry(MetricId.DEGREE_OF_EDGE_BENDS, "Degree of edge bends", visual_mapping=True, evaluated=True),
    _entry(MetricId.DIFFERENCE_BETWEEN_ANGLES, "Difference between angles"),
    _entry(MetricId.DISTRIBUTE_NODES_EVENLY, "Distribute nodes evenly"),
    _entry(MetricId.EDGE_ORTHOGONALITY, "Edge orthogonality", visual_mapping=True, evaluated=True),
    _entry(MetricId.GLOBAL_SYMMETRY, "Global symmetry", evaluated=True),
    _entry(MetricId.KEEP_NODES_APART_FROM_EDGES, "Keep nodes apart from edges"),
    _entry(MetricId.LOCAL_SYMMETRY, "Local symmetry", evaluated=True),
    _entry(MetricId.MAXIMUM_BENDS, "Maximum bends"),
    _entry(MetricId.MAXIMUM_EDGE_LENGTH, "Maximum edge length"),
    _entry(MetricId.NODE_ORTHOGONALITY, "Node orthogonality"),
    _entry(MetricId.NODES_SHOULD_NOT_OVERLAP, "Nodes should not overlap"),
    _entry(MetricId.NUMBER_OF_BENDS, "Number of bends"),
    _entry(MetricId.NUMBER_OF_BRANCHES, "Number of branches", evaluated=True),
    _entry(MetricId.NUMBER_OF_EDGE_CROSSINGS, "Number of edge crossings", evaluated=True),
    _entry(MetricId.PATH_BENDINESS, "Path bendiness", evaluated=True),
    _entry(MetricId.SHORTEST_PATH_LENGTH, "Shortest path length", evaluated=True),
    _entry(MetricId.CROSSING_ANGLE_SD, "SD of crossing angles"),
    _entry(MetricId.ANGULAR_RESOLUTION_SD, "SD of angular resolution"),
    _entry(MetricId.TOTAL_EDGE_LENGTH, "Total edge length"),
    _entry(MetricId.UNIFORM_EDGE_BENDS, "Uniform edge bends", visual_mapping=True),
    _entry(MetricId.UNIFORM_EDGE_LENGTHS, "Uniform edge lengths", visual_mapping=True),
    _entry(MetricId.WHITESPACE_TO_INK_RATIO, "Whitespace to ink ratio", evaluated=True),
    _entry(MetricId.FACE_AREA, "Face area", novel=True),
    _entry(MetricId.UNIFORM_FACES, "Uniform faces", novel=True),
)

_BY_ID = {e.id: e for e in _CATALOG}

EVALUATED_IDS: tuple[MetricId, ...] = tuple(e.id for e in _CATALOG if e.evaluated)


def catalog() -> list[AestheticCatalogEntry]:
    """All 31 registry entries, in stable registry order."""
    return list(_CATALOG)


def catalog_entry(metric_id: MetricId | str) -> AestheticCatalogEntry:
    return _BY_ID[coerce_metric_id(metric_id)]


def coerce_metric_id(value: MetricId | str) -> MetricId:
    if isinstance(value, MetricId):
        return value
    try:
        return MetricId(value)
    except ValueError:
        raise KeyError(f"unknown metric id: {value!r}") from None


@dataclass(frozen=True)
class MetricResult:
    """One aesthetic measured on one drawing.

    ``raw`` is in metric-specific units; ``score`` is normalized to [0, 1]
    with 1 the aesthetically preferred pole.  ``defined`` is False when the
    metric's precondition fails for the drawing (e.g. a face metric on a
    drawing without bounded faces); raw and score are then reported as 0.
    """

    id: MetricId
    raw: float
    score: float
    defined: bool

    def to_dict(self) -> dict[str, Any]:
        return {"raw": self.raw, "score": self.score, "defined": self.defined}

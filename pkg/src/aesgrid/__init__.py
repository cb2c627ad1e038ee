"""aesgrid: a workbench for measurable graph-drawing aesthetics.

Computes a 31-entry catalog of drawing aesthetics, optimizes layouts against
weighted aesthetic objectives, and runs repertory-grid elicitation studies
(triad scheduling, construct capture, laddering, stop criterion,
categorization, and cross-group reports) end to end.
"""

from .catalog import (
    AestheticCatalogEntry,
    Category,
    MetricId,
    MetricResult,
    catalog,
    catalog_entry,
)
from .geometry import (
    Crossing,
    Face,
    GeometryCache,
    compute_faces,
    find_crossings,
    flatten_edge,
    incident_angles,
)
from .metrics import EvalContext, MetricVector, evaluate, evaluate_all, explain
from .model import (
    Canvas,
    Drawing,
    Graph,
    drawing_hash,
    validate_drawing,
)

__version__ = "0.1.0"

__all__ = [
    "AestheticCatalogEntry",
    "Canvas",
    "Category",
    "Crossing",
    "Drawing",
    "EvalContext",
    "Face",
    "GeometryCache",
    "Graph",
    "MetricId",
    "MetricResult",
    "MetricVector",
    "catalog",
    "catalog_entry",
    "compute_faces",
    "drawing_hash",
    "evaluate",
    "evaluate_all",
    "explain",
    "find_crossings",
    "flatten_edge",
    "incident_angles",
    "validate_drawing",
    "__version__",
]

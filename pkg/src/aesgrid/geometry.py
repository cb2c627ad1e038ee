"""Geometric primitives the metric layer is built on.

Edges are quadratic Beziers (one signed curvature scalar per edge).  All
intersection and face computations operate on flattened polylines: an edge
is flattened so that the polyline stays within FLATTEN_TOL of the true
curve, crossings are intersections of those polylines, and faces come from
the planar arrangement of all of them (intersection points become
arrangement vertices, faces are traced over a half-edge structure).

Degenerate contacts are deliberately not modelled: tangential touches,
collinear overlaps, and intersections within ENDPOINT_SNAP of an edge
endpoint are not crossings.  Random study drawings make such configurations
vanishingly rare; exact-arithmetic degeneracy handling is out of scope.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import Drawing

# Flattening tolerance (canvas units): max Hausdorff distance polyline/curve.
FLATTEN_TOL = 0.25
# Intersections closer than this to an edge endpoint are not crossings.
ENDPOINT_SNAP = 1e-6
# Grid pitch for snap-rounding arrangement vertices.
SNAP_GRID = 1e-7
# Reflex tolerance (degrees) when classifying face convexity.
CONVEXITY_TOL_DEG = 1.0

Polyline = np.ndarray  # (n, 2) float array, n >= 2, consecutive points distinct


class DegenerateEdgeError(ValueError):
    """Raised when an edge's endpoints coincide and it has no direction."""

    def __init__(self, edge_index: int):
        super().__init__(f"edge {edge_index} is degenerate: endpoints coincide")
        self.edge_index = edge_index


@dataclass(frozen=True)
class Crossing:
    """A transversal intersection of two non-adjacent edges."""

    edges: tuple[int, int]
    point: tuple[float, float]
    angle: float  # acute angle in degrees, in (0, 90]


@dataclass(frozen=True)
class Face:
    """One region of the planar arrangement of all drawn edges."""

    boundary: tuple[tuple[float, float], ...]  # closed: first point repeated last
    area: float
    bounded: bool
    convex: bool


def control_point(
    p0: tuple[float, float], p1: tuple[float, float], curvature: float
) -> tuple[float, float]:
    """Bezier control point: chord midpoint displaced perpendicular to the
    chord by curvature * chord length (positive = left of p0->p1)."""
    dx = p1[0] - p0[0]
    dy = p1[1] - p0[1]
    return (
        (p0[0] + p1[0]) / 2.0 - curvature * dy,
        (p0[1] + p1[1]) / 2.0 + curvature * dx,
    )


def flatten_edge(drawing: Drawing, edge_index: int, tolerance: float = FLATTEN_TOL) -> Polyline:
    """Polyline within `tolerance` (Hausdorff) of the edge's true curve.

    Straight edges yield exactly their two endpoints.
    """
    p0, p1 = drawing.edge_endpoints(edge_index)
    curvature = drawing.curvatures[edge_index]
    return flatten_curve(p0, p1, curvature, tolerance, edge_index)


def flatten_curve(
    p0: tuple[float, float],
    p1: tuple[float, float],
    curvature: float,
    tolerance: float = FLATTEN_TOL,
    edge_index: int = -1,
) -> Polyline:
    chord = math.hypot(p1[0] - p0[0], p1[1] - p0[1])
    if chord == 0.0:
        raise DegenerateEdgeError(edge_index)
    if curvature == 0.0:
        return np.array([p0, p1], dtype=float)
    # Uniform subdivision: with the control point offset c*L off the chord,
    # |B''| = 4|c|L, so k segments keep the chord error below |c|*L/(2*k^2).
    segments = max(1, math.ceil(math.sqrt(abs(curvature) * chord / (2.0 * tolerance))))
    t = np.linspace(0.0, 1.0, segments + 1)[:, None]
    a = np.asarray(p0, dtype=float)
    b = np.asarray(p1, dtype=float)
    c = np.asarray(control_point(p0, p1, curvature), dtype=float)
    pts = (1 - t) ** 2 * a + 2 * t * (1 - t) * c + t**2 * b
    pts[0] = a
    pts[-1] = b
    return pts


def edge_polylines(
    drawing: Drawing,
    tolerance: float = FLATTEN_TOL,
    cache: "GeometryCache | None" = None,
) -> list[Polyline]:
    if cache is not None:
        return [cache.polyline(drawing, i, tolerance) for i in range(drawing.graph.edge_count)]
    return [flatten_edge(drawing, i, tolerance) for i in range(drawing.graph.edge_count)]


def polyline_length(polyline: Polyline) -> float:
    return float(np.sum(np.hypot(*(np.diff(polyline, axis=0).T))))


def curve_bbox(
    p0: tuple[float, float], p1: tuple[float, float], curvature: float
) -> tuple[float, float, float, float]:
    """Exact axis-aligned bbox of the edge curve (per-axis Bezier extrema)."""
    if curvature == 0.0:
        return (
            min(p0[0], p1[0]), min(p0[1], p1[1]),
            max(p0[0], p1[0]), max(p0[1], p1[1]),
        )
    ctrl = control_point(p0, p1, curvature)
    lo = [min(p0[0], p1[0]), min(p0[1], p1[1])]
    hi = [max(p0[0], p1[0]), max(p0[1], p1[1])]
    for axis in (0, 1):
        denom = p0[axis] - 2.0 * ctrl[axis] + p1[axis]
        if denom == 0.0:
            continue
        t = (p0[axis] - ctrl[axis]) / denom
        if 0.0 < t < 1.0:
            value = (
                (1 - t) ** 2 * p0[axis] + 2 * t * (1 - t) * ctrl[axis] + t**2 * p1[axis]
            )
            lo[axis] = min(lo[axis], value)
            hi[axis] = max(hi[axis], value)
    return (lo[0], lo[1], hi[0], hi[1])


def point_polyline_distance(point: tuple[float, float], polyline: Polyline) -> float:
    """Euclidean distance from a point to the nearest point of a polyline."""
    p = np.asarray(point, dtype=float)
    a = polyline[:-1]
    d = polyline[1:] - a
    seg_len_sq = np.einsum("ij,ij->i", d, d)
    seg_len_sq[seg_len_sq == 0.0] = 1.0
    t = np.clip(np.einsum("ij,ij->i", p - a, d) / seg_len_sq, 0.0, 1.0)
    closest = a + t[:, None] * d
    return float(np.min(np.hypot(*(closest - p).T)))


# ---------------------------------------------------------------------------
# Segment-pair intersection kernel
# ---------------------------------------------------------------------------

_PARAM_EPS = 1e-9  # inclusive slack on segment parameters


def _bbox(polyline: Polyline) -> tuple[float, float, float, float]:
    return (
        float(polyline[:, 0].min()),
        float(polyline[:, 1].min()),
        float(polyline[:, 0].max()),
        float(polyline[:, 1].max()),
    )


def _bboxes_overlap(a, b, pad: float = 0.0) -> bool:
    return not (
        a[2] + pad < b[0] or b[2] + pad < a[0] or a[3] + pad < b[1] or b[3] + pad < a[1]
    )


def _pair_events(pa: Polyline, pb: Polyline) -> list[tuple[float, float, float, float]]:
    """All intersections of two polylines as (ga, gb, x, y).

    ga/gb are global parameters along each polyline (segment index + local
    t, so ga in [0, len(pa)-1]).  Parallel segment pairs are skipped.
    Endpoint touches are included (with _PARAM_EPS slack); callers filter.
    """
    a0 = pa[:-1]
    ra = pa[1:] - a0
    b0 = pb[:-1]
    rb = pb[1:] - b0
    qp = b0[None, :, :] - a0[:, None, :]  # (ka, kb, 2)
    denom = ra[:, None, 0] * rb[None, :, 1] - ra[:, None, 1] * rb[None, :, 0]
    scale = np.hypot(ra[:, 0], ra[:, 1])[:, None] * np.hypot(rb[:, 0], rb[:, 1])[None, :]
    nonparallel = np.abs(denom) > 1e-12 * scale
    with np.errstate(divide="ignore", invalid="ignore"):
        t = (qp[:, :, 0] * rb[None, :, 1] - qp[:, :, 1] * rb[None, :, 0]) / denom
        u = (qp[:, :, 0] * ra[:, None, 1] - qp[:, :, 1] * ra[:, None, 0]) / denom
    hit = (
        nonparallel
        & (t >= -_PARAM_EPS)
        & (t <= 1.0 + _PARAM_EPS)
        & (u >= -_PARAM_EPS)
        & (u <= 1.0 + _PARAM_EPS)
    )
    ia, ib = np.nonzero(hit)
    if ia.size == 0:
        return []
    tt = np.clip(t[ia, ib], 0.0, 1.0)
    uu = np.clip(u[ia, ib], 0.0, 1.0)
    px = a0[ia, 0] + tt * ra[ia, 0]
    py = a0[ia, 1] + tt * ra[ia, 1]
    return list(zip(ia + tt, ib + uu, px, py))


def _cumulative_lengths(polyline: Polyline) -> np.ndarray:
    seg = np.hypot(*(np.diff(polyline, axis=0).T))
    return np.concatenate(([0.0], np.cumsum(seg)))


def _arclength_at(cum: np.ndarray, g: float) -> float:
    i = min(int(g), len(cum) - 2)
    frac = g - i
    return float(cum[i] + frac * (cum[i + 1] - cum[i]))


def _point_at_arclength(polyline: Polyline, cum: np.ndarray, s: float) -> np.ndarray:
    s = min(max(s, 0.0), float(cum[-1]))
    i = int(np.searchsorted(cum, s, side="right")) - 1
    i = min(max(i, 0), len(polyline) - 2)
    seg = cum[i + 1] - cum[i]
    frac = 0.0 if seg == 0.0 else (s - cum[i]) / seg
    return polyline[i] + frac * (polyline[i + 1] - polyline[i])


def _tangent_at(polyline: Polyline, g: float) -> np.ndarray:
    i = min(int(g), len(polyline) - 2)
    return polyline[i + 1] - polyline[i]


def _curve_tangent(
    p0: tuple[float, float], p1: tuple[float, float], curvature: float, t: float
) -> np.ndarray:
    """Exact curve tangent at parameter t (uniform flattening maps the
    polyline's global parameter to t linearly)."""
    if curvature == 0.0:
        return np.array((p1[0] - p0[0], p1[1] - p0[1]))
    ctrl = control_point(p0, p1, curvature)
    return np.array(
        (
            (1 - t) * (ctrl[0] - p0[0]) + t * (p1[0] - ctrl[0]),
            (1 - t) * (ctrl[1] - p0[1]) + t * (p1[1] - ctrl[1]),
        )
    )


def _acute_angle_deg(u: np.ndarray, v: np.ndarray) -> float:
    nu = math.hypot(u[0], u[1])
    nv = math.hypot(v[0], v[1])
    cosv = abs(float(u[0] * v[0] + u[1] * v[1])) / (nu * nv)
    return math.degrees(math.acos(min(1.0, cosv)))


def _merge_events_by_point(
    events: list[tuple[float, float, float, float]],
) -> list[tuple[float, float, float, float]]:
    """Collapse events landing on the same snapped point (one crossing can be
    reported by several segment pairs when it falls on a polyline vertex)."""
    merged: dict[tuple[int, int], tuple[float, float, float, float]] = {}
    for ga, gb, x, y in events:
        key = (round(x / SNAP_GRID), round(y / SNAP_GRID))
        if key not in merged:
            merged[key] = (ga, gb, x, y)
    return sorted(merged.values())


def _transversal(
    pa: Polyline,
    cum_a: np.ndarray,
    pb: Polyline,
    cum_b: np.ndarray,
    ga: float,
    gb: float,
    point: np.ndarray,
) -> bool:
    """True when the two polylines genuinely pass through each other at the
    event point (tangential touches walk back to the same side)."""
    sa = _arclength_at(cum_a, ga)
    sb = _arclength_at(cum_b, gb)
    h = min(FLATTEN_TOL / 4.0, sa, cum_a[-1] - sa, sb, cum_b[-1] - sb)
    if h <= 0.0:
        return False
    ta = _tangent_at(pa, ga)
    tb = _tangent_at(pb, gb)

    def side(tangent, p):
        return tangent[0] * (p[1] - point[1]) - tangent[1] * (p[0] - point[0])

    a_before = _point_at_arclength(pa, cum_a, sa - h)
    a_after = _point_at_arclength(pa, cum_a, sa + h)
    b_before = _point_at_arclength(pb, cum_b, sb - h)
    b_after = _point_at_arclength(pb, cum_b, sb + h)
    return (
        side(tb, a_before) * side(tb, a_after) < 0.0
        and side(ta, b_before) * side(ta, b_after) < 0.0
    )


def pair_crossing_points(
    pa: Polyline,
    pb: Polyline,
    edge_a: tuple[tuple[float, float], tuple[float, float], float],
    edge_b: tuple[tuple[float, float], tuple[float, float], float],
) -> tuple[tuple[tuple[float, float], float], ...]:
    """Transversal crossings of two flattened edges as ((x, y), angle) pairs.

    edge_a/edge_b are (p0, p1, curvature).  Intersections within
    ENDPOINT_SNAP of either edge's endpoints and tangential
    (non-transversal) contacts are dropped.  Angles come from the exact
    curve tangents at the intersection parameter.
    """
    events = _pair_events(pa, pb)
    if not events:
        return ()
    cum_a = _cumulative_lengths(pa)
    cum_b = _cumulative_lengths(pb)
    node_points = (edge_a[0], edge_a[1], edge_b[0], edge_b[1])
    hits: list[tuple[tuple[float, float], float]] = []
    for ga, gb, x, y in _merge_events_by_point(events):
        if any(math.hypot(x - nx, y - ny) <= ENDPOINT_SNAP for nx, ny in node_points):
            continue
        if not _transversal(pa, cum_a, pb, cum_b, ga, gb, np.array((x, y))):
            continue
        angle = _acute_angle_deg(
            _curve_tangent(*edge_a, ga / (len(pa) - 1)),
            _curve_tangent(*edge_b, gb / (len(pb) - 1)),
        )
        hits.append(((float(x), float(y)), float(angle)))
    return tuple(hits)


class GeometryCache:
    """Memoizes flattening and per-pair crossing computation.

    Keys are edge geometry (endpoint coordinates + curvature), so cached
    values are exactly what the pure functions would recompute; callers that
    mutate a drawing incrementally (the optimizer) only pay for changed
    edges.  The cache self-clears when it grows past `max_entries`.
    """

    def __init__(self, max_entries: int = 100_000):
        self.max_entries = max_entries
        self._polylines: dict[tuple, Polyline] = {}
        self._pairs: dict[tuple, tuple] = {}

    @staticmethod
    def edge_key(drawing: Drawing, edge_index: int) -> tuple:
        p0, p1 = drawing.edge_endpoints(edge_index)
        return (p0, p1, drawing.curvatures[edge_index])

    def polyline(self, drawing: Drawing, edge_index: int, tolerance: float) -> Polyline:
        key = (self.edge_key(drawing, edge_index), tolerance)
        poly = self._polylines.get(key)
        if poly is None:
            if len(self._polylines) >= self.max_entries:
                self._polylines.clear()
            poly = flatten_edge(drawing, edge_index, tolerance)
            self._polylines[key] = poly
        return poly

    def pair(
        self,
        key_a: tuple,
        key_b: tuple,
        pa: Polyline,
        pb: Polyline,
    ) -> tuple[tuple[tuple[float, float], float], ...]:
        key = (key_a, key_b)
        hits = self._pairs.get(key)
        if hits is None:
            if len(self._pairs) >= self.max_entries:
                self._pairs.clear()
            hits = pair_crossing_points(pa, pb, key_a, key_b)
            self._pairs[key] = hits
        return hits


def find_crossings(
    drawing: Drawing,
    polylines: list[Polyline] | None = None,
    cache: GeometryCache | None = None,
) -> list[Crossing]:
    """All transversal crossings between non-adjacent edge pairs.

    Edges sharing an endpoint are never reported.  Curved edge pairs that
    intersect more than once yield one crossing per intersection point.
    Angles come from the local polyline tangents at the intersection.
    """
    if polylines is None:
        polylines = edge_polylines(drawing, cache=cache)
    edges = drawing.graph.edges
    bboxes = [_bbox(p) for p in polylines]
    crossings: list[Crossing] = []
    for i in range(len(edges)):
        for j in range(i + 1, len(edges)):
            if set(edges[i]) & set(edges[j]):
                continue
            if not _bboxes_overlap(bboxes[i], bboxes[j]):
                continue
            if cache is not None:
                hits = cache.pair(
                    cache.edge_key(drawing, i),
                    cache.edge_key(drawing, j),
                    polylines[i],
                    polylines[j],
                )
            else:
                hits = pair_crossing_points(
                    polylines[i],
                    polylines[j],
                    (*drawing.edge_endpoints(i), drawing.curvatures[i]),
                    (*drawing.edge_endpoints(j), drawing.curvatures[j]),
                )
            for point, angle in hits:
                crossings.append(Crossing((i, j), point, angle))
    return crossings


# ---------------------------------------------------------------------------
# Planar arrangement and face tracing
# ---------------------------------------------------------------------------


def _snap_key(x: float, y: float) -> tuple[int, int]:
    return (round(x / SNAP_GRID), round(y / SNAP_GRID))


def _snap_coord(key: tuple[int, int]) -> tuple[float, float]:
    return (key[0] * SNAP_GRID, key[1] * SNAP_GRID)


class _Arrangement:
    """Planar subdivision of a set of polylines.

    Chains are the pieces of input polylines between consecutive event
    points (endpoints and intersections); vertices are the snapped event
    points.  Faces are traced by walking, at every vertex, from the reversal
    of the incoming half-edge to its clockwise successor, which keeps each
    face's interior on the left-hand side.
    """

    def __init__(self, polylines: list[Polyline]):
        self.vertices: list[tuple[float, float]] = []
        self._vertex_ids: dict[tuple[int, int], int] = {}
        # chain: (vertex_a, vertex_b, points)
        self.chains: list[tuple[int, int, np.ndarray]] = []
        self._build(polylines)

    def _vertex(self, key: tuple[int, int]) -> int:
        vid = self._vertex_ids.get(key)
        if vid is None:
            vid = len(self.vertices)
            self._vertex_ids[key] = vid
            self.vertices.append(_snap_coord(key))
        return vid

    def _build(self, polylines: list[Polyline]) -> None:
        bboxes = [_bbox(p) for p in polylines]
        events: list[list[tuple[float, float, float]]] = [[] for _ in polylines]
        for i in range(len(polylines)):
            for j in range(i + 1, len(polylines)):
                if not _bboxes_overlap(bboxes[i], bboxes[j], pad=SNAP_GRID):
                    continue
                for ga, gb, x, y in _pair_events(polylines[i], polylines[j]):
                    events[i].append((ga, x, y))
                    events[j].append((gb, x, y))
        for poly, evts in zip(polylines, events):
            self._split_polyline(poly, evts)

    def _split_polyline(self, poly: Polyline, evts: list[tuple[float, float, float]]) -> None:
        nseg = len(poly) - 1
        cuts = [(0.0, poly[0, 0], poly[0, 1]), (float(nseg), poly[-1, 0], poly[-1, 1])]
        cuts.extend(evts)
        cuts.sort(key=lambda e: e[0])
        kept: list[tuple[float, tuple[int, int]]] = []
        for g, x, y in cuts:
            key = _snap_key(x, y)
            if kept and kept[-1][1] == key:
                continue
            kept.append((g, key))
        for (ga, key_a), (gb, key_b) in zip(kept, kept[1:]):
            pts = [np.array(_snap_coord(key_a))]
            lo = int(math.floor(ga)) + 1
            hi = int(math.ceil(gb))  # interior vertices have integer params
            for k in range(lo, min(hi, nseg + 1)):
                if ga < k < gb:
                    pts.append(poly[k])
            pts.append(np.array(_snap_coord(key_b)))
            cleaned = [pts[0]]
            for p in pts[1:]:
                if math.hypot(p[0] - cleaned[-1][0], p[1] - cleaned[-1][1]) > SNAP_GRID * 4:
                    cleaned.append(p)
            if len(cleaned) < 2:
                continue
            self.chains.append((self._vertex(key_a), self._vertex(key_b), np.array(cleaned)))

    def trace_faces(self) -> list[tuple[np.ndarray, float]]:
        """Face boundaries and signed areas (positive = CCW = bounded)."""
        # Half-edge h = 2*chain + dir; dir 0 runs a->b, dir 1 runs b->a.
        outgoing: dict[int, list[tuple[float, int]]] = {}
        for ci, (a, b, pts) in enumerate(self.chains):
            fwd = math.atan2(pts[1][1] - pts[0][1], pts[1][0] - pts[0][0])
            bwd = math.atan2(pts[-2][1] - pts[-1][1], pts[-2][0] - pts[-1][0])
            outgoing.setdefault(a, []).append((fwd, 2 * ci))
            outgoing.setdefault(b, []).append((bwd, 2 * ci + 1))
        order: dict[int, int] = {}
        sorted_out: dict[int, list[int]] = {}
        for v, lst in outgoing.items():
            lst.sort()
            sorted_out[v] = [h for _, h in lst]
            for pos, (_, h) in enumerate(lst):
                order[h] = pos

        def head(h: int) -> int:
            a, b, _ = self.chains[h // 2]
            return b if h % 2 == 0 else a

        def geometry(h: int) -> np.ndarray:
            pts = self.chains[h // 2][2]
            return pts if h % 2 == 0 else pts[::-1]

        faces: list[tuple[np.ndarray, float]] = []
        visited = [False] * (2 * len(self.chains))
        for start in range(2 * len(self.chains)):
            if visited[start]:
                continue
            cycle_pts: list[np.ndarray] = []
            h = start
            while not visited[h]:
                visited[h] = True
                pts = geometry(h)
                cycle_pts.append(pts if not cycle_pts else pts[1:])
                v = head(h)
                twin = h ^ 1
                ring = sorted_out[v]
                h = ring[(order[twin] - 1) % len(ring)]
            boundary = np.concatenate(cycle_pts)
            x = boundary[:-1, 0]
            y = boundary[:-1, 1]
            signed = 0.5 * float(
                np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y)
            )
            faces.append((boundary, signed))
        return faces


def _is_convex(boundary: np.ndarray, tol_deg: float = CONVEXITY_TOL_DEG) -> bool:
    """Convexity of a CCW-traced face boundary, allowing tiny reflex turns
    (flattened curves introduce micro-concavities)."""
    pts = boundary[:-1]
    if len(pts) < 3:
        return False
    nxt = np.roll(pts, -1, axis=0)
    prv = np.roll(pts, 1, axis=0)
    u = pts - prv
    v = nxt - pts
    cross = u[:, 0] * v[:, 1] - u[:, 1] * v[:, 0]
    dot = u[:, 0] * v[:, 0] + u[:, 1] * v[:, 1]
    turns = np.degrees(np.arctan2(cross, dot))
    return bool(np.all(turns >= -tol_deg))


_AREA_EPS = 1e-9


def compute_faces(drawing: Drawing, polylines: list[Polyline] | None = None) -> list[Face]:
    """Faces of the planar arrangement of all flattened edges.

    Each connected component of the arrangement contributes exactly one
    unbounded face (its outer walk; area = enclosed area, 0 for trees).
    Isolated nodes contribute nothing.  Faces of nested disjoint components
    do not subtract one another's extent.
    """
    if polylines is None:
        polylines = edge_polylines(drawing)
    if not polylines:
        return []
    arrangement = _Arrangement(polylines)
    faces = []
    for boundary, signed in arrangement.trace_faces():
        bounded = signed > _AREA_EPS
        faces.append(
            Face(
                boundary=tuple((float(x), float(y)) for x, y in boundary),
                area=abs(signed),
                bounded=bounded,
                convex=bool(bounded and _is_convex(boundary)),
            )
        )
    faces.sort(key=lambda f: (f.bounded, -f.area, f.boundary[0]))
    return faces


# ---------------------------------------------------------------------------
# Incident angles
# ---------------------------------------------------------------------------


def edge_tangent_at_node(drawing: Drawing, edge_index: int, node: int) -> float:
    """Direction (radians) in which the edge leaves the node."""
    a, b = drawing.graph.edges[edge_index]
    pa, pb = drawing.positions[a], drawing.positions[b]
    curvature = drawing.curvatures[edge_index]
    if pa == pb:
        raise DegenerateEdgeError(edge_index)
    if curvature == 0.0:
        target, origin = (pb, pa) if node == a else (pa, pb)
    else:
        ctrl = control_point(pa, pb, curvature)
        target, origin = (ctrl, pa) if node == a else (ctrl, pb)
    return math.atan2(target[1] - origin[1], target[0] - origin[0])


def incident_angles(drawing: Drawing, node: int) -> list[float] | None:
    """Angles (degrees) between circularly adjacent incident-edge tangents.

    Returns None for nodes of degree < 2.  The list is ordered by the
    circular sweep starting at the smallest tangent direction; it always
    sums to 360.
    """
    incident = drawing.graph.incident_edges(node)
    if len(incident) < 2:
        return None
    directions = sorted(
        math.degrees(edge_tangent_at_node(drawing, ei, node)) % 360.0 for ei in incident
    )
    gaps = [b - a for a, b in zip(directions, directions[1:])]
    gaps.append(360.0 - (directions[-1] - directions[0]))
    return gaps

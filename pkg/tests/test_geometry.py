"""Geometry tests, checked against independent oracles:

- flattening against dense sampling of the exact curve (Hausdorff)
- crossings against a brute-force straight-segment oracle
- faces against the Euler formula and shapely polygonization
- incident angles against direct atan2 sorting
"""

from __future__ import annotations

import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from shapely.geometry import LineString
from shapely.ops import polygonize, unary_union

from aesgrid.geometry import (
    DegenerateEdgeError,
    FLATTEN_TOL,
    compute_faces,
    find_crossings,
    flatten_edge,
    incident_angles,
    point_polyline_distance,
)
from aesgrid.model import Drawing

from .conftest import delaunay_drawing, make_drawing, random_straight_drawing


# ---------------------------------------------------------------------------
# Oracles (independent implementations)
# ---------------------------------------------------------------------------


def bezier_points(p0, p1, curvature, samples=2000) -> np.ndarray:
    """Dense samples of the exact quadratic curve, derived from scratch."""
    p0 = np.asarray(p0, float)
    p1 = np.asarray(p1, float)
    chord = p1 - p0
    mid = (p0 + p1) / 2.0
    normal = np.array([-chord[1], chord[0]])  # left of p0->p1, length = chord
    ctrl = mid + curvature * normal
    t = np.linspace(0.0, 1.0, samples)[:, None]
    return (1 - t) ** 2 * p0 + 2 * t * (1 - t) * ctrl + t**2 * p1


def oracle_straight_crossings(drawing: Drawing) -> list[tuple[int, int, float]]:
    """Brute-force proper-crossing test over straight segment pairs.

    Returns (edge_i, edge_j, acute angle in degrees) per crossing.
    """
    out = []
    edges = drawing.graph.edges
    for i in range(len(edges)):
        for j in range(i + 1, len(edges)):
            if set(edges[i]) & set(edges[j]):
                continue
            a1, a2 = drawing.edge_endpoints(i)
            b1, b2 = drawing.edge_endpoints(j)
            d1 = (a2[0] - a1[0], a2[1] - a1[1])
            d2 = (b2[0] - b1[0], b2[1] - b1[1])
            den = d1[0] * d2[1] - d1[1] * d2[0]
            if den == 0:
                continue
            w = (b1[0] - a1[0], b1[1] - a1[1])
            t = (w[0] * d2[1] - w[1] * d2[0]) / den
            u = (w[0] * d1[1] - w[1] * d1[0]) / den
            if 0 < t < 1 and 0 < u < 1:
                dot = abs(d1[0] * d2[0] + d1[1] * d2[1])
                norm = math.hypot(*d1) * math.hypot(*d2)
                out.append((i, j, math.degrees(math.acos(min(1.0, dot / norm)))))
    return out


def shapely_bounded_areas(drawing: Drawing) -> list[float]:
    lines = [LineString(drawing.edge_endpoints(i)) for i in range(drawing.graph.edge_count)]
    return [poly.area for poly in polygonize(unary_union(lines))]


# ---------------------------------------------------------------------------
# Flattening
# ---------------------------------------------------------------------------


class TestFlattenEdge:
    def test_straight_edge_two_points(self):
        d = make_drawing([(0, 0), (10, 0)], [(0, 1)], canvas=(10, 10), node_radius=0.5)
        poly = flatten_edge(d, 0)
        assert poly.shape == (2, 2)
        assert np.allclose(poly, [(0, 0), (10, 0)])

    def test_apex_is_half_control_offset(self):
        # curvature 0.5, chord 10: the curve apex sits 2.5 units off the chord
        d = make_drawing(
            [(0, 0), (10, 0)], [(0, 1)], curvatures=(0.5,), canvas=(10, 10), node_radius=0.5
        )
        poly = flatten_edge(d, 0)
        max_offset = float(np.max(np.abs(poly[:, 1])))
        assert max_offset == pytest.approx(2.5, abs=FLATTEN_TOL)

    @pytest.mark.parametrize("curvature", [-0.9, -0.3, 0.05, 0.5, 1.0])
    def test_hausdorff_within_tolerance(self, curvature):
        d = make_drawing(
            [(100, 200), (800, 650)], [(0, 1)], curvatures=(curvature,)
        )
        poly = flatten_edge(d, 0, tolerance=FLATTEN_TOL / 10)
        dense = bezier_points((100, 200), (800, 650), curvature)
        worst = max(point_polyline_distance(tuple(p), poly) for p in dense)
        assert worst <= FLATTEN_TOL / 10 + 1e-9

    def test_degenerate_edge_names_index(self):
        d = make_drawing([(5, 5), (5, 5)], [(0, 1)], canvas=(10, 10), node_radius=0.5)
        with pytest.raises(DegenerateEdgeError, match="edge 0"):
            flatten_edge(d, 0)


# ---------------------------------------------------------------------------
# Crossings
# ---------------------------------------------------------------------------


class TestFindCrossings:
    def test_symmetric_x(self, x_drawing):
        crossings = find_crossings(x_drawing)
        assert len(crossings) == 1
        assert crossings[0].point == pytest.approx((5.0, 5.0))
        assert crossings[0].angle == pytest.approx(90.0)
        assert crossings[0].edges == (0, 1)

    @pytest.mark.parametrize("curvatures", [(0.0, 0.0), (0.5, -0.5), (0.8, 0.3)])
    def test_adjacent_edges_never_cross(self, curvatures):
        d = make_drawing(
            [(100, 100), (900, 120), (880, 800)], [(0, 1), (0, 2)], curvatures=curvatures
        )
        assert find_crossings(d) == []

    def test_matches_brute_force_oracle(self):
        rng = random.Random(1234)
        for _ in range(100):
            d = random_straight_drawing(rng)
            got = find_crossings(d)
            expected = oracle_straight_crossings(d)
            assert len(got) == len(expected)
            got_sorted = sorted((c.edges[0], c.edges[1], c.angle) for c in got)
            for (gi, gj, ga), (ei, ej, ea) in zip(got_sorted, sorted(expected)):
                assert (gi, gj) == (ei, ej)
                assert ga == pytest.approx(ea, abs=1e-6)

    def test_curved_pair_can_cross_twice(self):
        # one edge bows up through a straight edge lying above its chord:
        # the pair intersects at two points and both count
        d = make_drawing(
            [(200, 480), (800, 480), (200, 520), (800, 520)],
            [(0, 1), (2, 3)],
            curvatures=(0.25, 0.0),
        )
        crossings = find_crossings(d)
        assert len(crossings) == 2

    def test_invariant_under_node_renumbering(self):
        rng = random.Random(7)
        for _ in range(20):
            d = random_straight_drawing(rng, max_nodes=8, max_edges=12)
            n = d.graph.node_count
            perm = list(range(n))
            rng.shuffle(perm)
            remapped_edges = [(perm[a], perm[b]) for a, b in d.graph.edges]
            new_positions = [None] * n
            for old, new in enumerate(perm):
                new_positions[new] = d.positions[old]
            d2 = make_drawing(new_positions, remapped_edges)
            assert len(find_crossings(d)) == len(find_crossings(d2))

    def test_rigid_motion_invariance(self):
        rng = random.Random(99)
        d = random_straight_drawing(rng, max_nodes=8, max_edges=12, canvas=(400.0, 400.0))
        base = find_crossings(d)
        # translate within the canvas, then rotate 90 degrees about the center
        shifted = make_drawing(
            [(x + 50, y + 50) for x, y in d.positions], d.graph.edges, canvas=(500, 500)
        )
        rotated = make_drawing(
            [(400 - y, x) for x, y in d.positions], d.graph.edges, canvas=(400, 400)
        )
        assert len(find_crossings(shifted)) == len(base)
        assert len(find_crossings(rotated)) == len(base)
        for a, b in zip(find_crossings(rotated), base):
            assert a.angle == pytest.approx(b.angle, abs=1e-6)


# ---------------------------------------------------------------------------
# Faces
# ---------------------------------------------------------------------------


class TestComputeFaces:
    def test_triangle(self, triangle):
        faces = compute_faces(triangle)
        bounded = [f for f in faces if f.bounded]
        unbounded = [f for f in faces if not f.bounded]
        assert len(bounded) == 1 and len(unbounded) == 1
        assert bounded[0].convex
        assert bounded[0].area == pytest.approx(280000.0, rel=1e-6)

    def test_path_graph_single_unbounded_face(self, path_drawing):
        faces = compute_faces(path_drawing)
        assert len(faces) == 1
        assert not faces[0].bounded

    def test_nonconvex_quad_detected(self):
        d = make_drawing(
            [(100, 100), (900, 100), (500, 400), (500, 900)],
            [(0, 1), (1, 3), (3, 0), (0, 2), (2, 1)],
        )
        faces = [f for f in compute_faces(d) if f.bounded]
        assert any(not f.convex for f in faces)
        assert any(f.convex for f in faces)

    @pytest.mark.parametrize("seed", range(25))
    def test_euler_formula_on_delaunay(self, seed):
        d = delaunay_drawing(seed)
        faces = compute_faces(d)
        v, e, f = d.graph.node_count, d.graph.edge_count, len(faces)
        assert v - e + f == 2
        assert sum(1 for face in faces if not face.bounded) == 1

    @pytest.mark.parametrize("seed", range(10))
    def test_bounded_areas_match_shapely(self, seed):
        d = delaunay_drawing(seed)
        ours = sorted(f.area for f in compute_faces(d) if f.bounded)
        reference = sorted(shapely_bounded_areas(d))
        assert len(ours) == len(reference)
        for a, b in zip(ours, reference):
            assert a == pytest.approx(b, rel=1e-6)

    @pytest.mark.parametrize("seed", range(10))
    def test_bounded_area_sum_equals_outer_walk(self, seed):
        # the unbounded face's traced walk encloses exactly the bounded region
        d = delaunay_drawing(seed)
        faces = compute_faces(d)
        bounded_sum = sum(f.area for f in faces if f.bounded)
        outer = [f for f in faces if not f.bounded][0]
        assert bounded_sum == pytest.approx(outer.area, rel=1e-6)

    def test_crossing_becomes_arrangement_vertex(self, x_drawing):
        # an X of two segments has no cycle: one unbounded face only
        faces = compute_faces(x_drawing)
        assert len(faces) == 1
        # but a crossed square closes 4 triangles around the crossing
        d = make_drawing(
            [(100, 100), (900, 100), (900, 900), (100, 900)],
            [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)],
        )
        faces = compute_faces(d)
        bounded = [f for f in faces if f.bounded]
        assert len(bounded) == 4
        assert sum(f.area for f in bounded) == pytest.approx(800 * 800, rel=1e-6)

    def test_disconnected_components_each_have_outer_face(self):
        d = make_drawing(
            [(100, 100), (300, 100), (200, 300), (600, 600), (900, 600), (750, 900)],
            [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)],
        )
        faces = compute_faces(d)
        assert sum(1 for f in faces if f.bounded) == 2
        assert sum(1 for f in faces if not f.bounded) == 2

    def test_no_edges_no_faces(self):
        d = make_drawing([(100, 100), (500, 500)], [])
        assert compute_faces(d) == []


# ---------------------------------------------------------------------------
# Incident angles
# ---------------------------------------------------------------------------


class TestIncidentAngles:
    def test_compass_star(self):
        d = make_drawing(
            [(500, 500), (900, 500), (500, 900), (100, 500), (500, 100)],
            [(0, 1), (0, 2), (0, 3), (0, 4)],
        )
        assert incident_angles(d, 0) == pytest.approx([90, 90, 90, 90])

    def test_two_edges_60_degrees(self):
        d = make_drawing(
            [(0, 0), (10, 0), (5, 5 * math.sqrt(3))],
            [(0, 1), (0, 2)],
            canvas=(100, 100),
        )
        assert incident_angles(d, 0) == pytest.approx([60, 300])

    def test_degree_below_two_undefined(self, path_drawing):
        assert incident_angles(path_drawing, 0) is None

    @pytest.mark.parametrize("seed", range(20))
    def test_random_star_matches_atan2_oracle(self, seed):
        rng = random.Random(seed)
        k = rng.randint(2, 8)
        center = (500.0, 500.0)
        leaves = []
        for _ in range(k):
            theta = rng.uniform(0, 2 * math.pi)
            radius = rng.uniform(50, 400)
            leaves.append(
                (center[0] + radius * math.cos(theta), center[1] + radius * math.sin(theta))
            )
        d = make_drawing([center] + leaves, [(0, i + 1) for i in range(k)])
        gaps = incident_angles(d, 0)
        directions = sorted(
            math.degrees(math.atan2(y - center[1], x - center[0])) % 360 for x, y in leaves
        )
        expected = [b - a for a, b in zip(directions, directions[1:])]
        expected.append(360 - sum(expected))
        assert gaps == pytest.approx(expected, abs=1e-9)
        assert sum(gaps) == pytest.approx(360.0, abs=1e-6)

    def test_sum_is_360_with_curved_edges(self):
        d = make_drawing(
            [(500, 500), (900, 500), (500, 900), (100, 200)],
            [(0, 1), (0, 2), (0, 3)],
            curvatures=(0.4, -0.7, 0.1),
        )
        assert sum(incident_angles(d, 0)) == pytest.approx(360.0, abs=1e-6)


@settings(max_examples=30, deadline=None)
@given(
    curvature=st.floats(min_value=-1.0, max_value=1.0),
    x=st.floats(min_value=10, max_value=990),
    y=st.floats(min_value=10, max_value=990),
)
def test_flatten_endpoints_exact(curvature, x, y):
    if math.hypot(x - 500.0, y - 500.0) < 1e-6:
        return
    d = make_drawing([(500, 500), (x, y)], [(0, 1)], curvatures=(curvature,))
    poly = flatten_edge(d, 0)
    assert tuple(poly[0]) == (500.0, 500.0)
    assert tuple(poly[-1]) == (x, y)

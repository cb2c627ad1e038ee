"""Metric-layer tests.

The rich fixture makes all 31 metrics defined at once; invariance checks use
exact rigid motions (translation, 90-degree rotation about the canvas
center) and joint uniform scaling of positions, canvas, and radii.
"""

from __future__ import annotations

import math
import random

import numpy as np
import pytest

from aesgrid.catalog import MetricId, catalog
from aesgrid.geometry import edge_polylines, polyline_length
from aesgrid.metrics import evaluate, evaluate_all, explain
from aesgrid.model import Canvas, Drawing, drawing_hash

from .conftest import make_drawing, random_straight_drawing
from .test_geometry import oracle_straight_crossings

ALL_IDS = [e.id for e in catalog()]


def rich_drawing() -> Drawing:
    """Irregular hexagon + crossing chords + bends: every metric defined."""
    positions = [
        (320, 260), (660, 240), (840, 500), (700, 760), (340, 740), (180, 480),
    ]
    edges = [
        (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0),  # outer cycle
        (0, 3), (1, 4),  # crossing chords
        (2, 5),  # a third chord, bent
    ]
    curvatures = (0.0, 0.1, 0.0, -0.2, 0.0, 0.0, 0.0, 0.3, -0.15)
    return make_drawing(positions, edges, curvatures=curvatures)


def transformed(drawing: Drawing, fn, canvas=None, node_radius=None, stroke_width=None) -> Drawing:
    return Drawing(
        graph=drawing.graph,
        positions=tuple(fn(x, y) for x, y in drawing.positions),
        curvatures=drawing.curvatures,
        canvas=canvas or drawing.canvas,
        node_radius=node_radius or drawing.node_radius,
        stroke_width=stroke_width or drawing.stroke_width,
    )


class TestExamples:
    def test_x_drawing_crossing_metrics(self, x_drawing):
        assert evaluate(x_drawing, MetricId.NUMBER_OF_EDGE_CROSSINGS).raw == 1
        assert evaluate(x_drawing, MetricId.CROSSING_ANGLE).raw == pytest.approx(90.0)
        # only one crossing: no spread to measure
        assert not evaluate(x_drawing, MetricId.CROSSING_ANGLE_SD).defined

    def test_face_area_precondition(self, triangle, path_drawing):
        assert evaluate(triangle, MetricId.FACE_AREA).defined
        assert not evaluate(path_drawing, MetricId.FACE_AREA).defined

    def test_uniform_edge_lengths_against_recomputation(self):
        d = rich_drawing()
        result = evaluate(d, MetricId.UNIFORM_EDGE_LENGTHS)
        lengths = np.array([polyline_length(p) for p in edge_polylines(d)])
        expected = float(np.std(lengths) / np.mean(lengths))
        assert result.raw == pytest.approx(expected, rel=1e-12)
        assert result.score == pytest.approx(1.0 / (1.0 + expected), rel=1e-12)

    def test_crossing_count_matches_oracle_on_random_drawings(self):
        rng = random.Random(5150)
        for _ in range(30):
            d = random_straight_drawing(rng)
            got = evaluate(d, MetricId.NUMBER_OF_EDGE_CROSSINGS).raw
            assert got == len(oracle_straight_crossings(d))

    def test_unknown_metric_rejected(self, triangle):
        with pytest.raises(KeyError):
            evaluate(triangle, "sparkliness")


class TestEvaluateAll:
    def test_has_31_unique_results(self, triangle):
        vector = evaluate_all(triangle)
        assert len(vector.results) == 31
        assert len({r.id for r in vector.results}) == 31
        assert vector.drawing_hash == drawing_hash(triangle)

    def test_matches_per_id_evaluate(self):
        d = rich_drawing()
        vector = evaluate_all(d)
        for result in vector:
            assert result == evaluate(d, result.id)

    def test_deterministic(self):
        d = rich_drawing()
        assert evaluate_all(d) == evaluate_all(d)

    def test_rich_drawing_defines_everything(self):
        vector = evaluate_all(rich_drawing())
        undefined = [r.id.value for r in vector if not r.defined]
        assert undefined == []

    def test_scores_in_unit_interval_and_raw_finite(self):
        from aesgrid.generator import GeneratorParams, generate_element

        for seed in range(8):
            params = GeneratorParams(seed=seed, min_edges=3, max_edges=15,
                                     node_count_range=(4, 10))
            vector = evaluate_all(generate_element(params))
            for r in vector:
                if r.defined:
                    assert 0.0 <= r.score <= 1.0, r
                    assert math.isfinite(r.raw), r

    def test_serialization_shape(self, triangle):
        data = evaluate_all(triangle).to_dict()
        assert set(data) == {"drawing_hash", "results"}
        assert len(data["results"]) == 31
        for payload in data["results"].values():
            assert set(payload) == {"raw", "score", "defined"}


class TestInvariance:
    def test_translation(self):
        d = rich_drawing()
        shifted = transformed(d, lambda x, y: (x + 60.0, y + 35.0))
        base = evaluate_all(d)
        moved = evaluate_all(shifted)
        # canvas-anchored metrics (grid/cell partitions) may legitimately move
        anchored = {MetricId.DISTRIBUTE_NODES_EVENLY, MetricId.NODE_ORTHOGONALITY}
        for a, b in zip(base, moved):
            if a.id in anchored:
                assert a.defined == b.defined
                continue
            assert b.score == pytest.approx(a.score, abs=1e-9), a.id

    def test_rotation_quarter_turn(self):
        # 90-degree rotation about the center of the square canvas maps the
        # axis system, the snapping grid, and the cell partition onto
        # themselves: every score must survive.
        d = rich_drawing()
        rotated = transformed(d, lambda x, y: (1000.0 - y, x))
        base = evaluate_all(d)
        turned = evaluate_all(rotated)
        for a, b in zip(base, turned):
            assert a.defined == b.defined, a.id
            assert b.score == pytest.approx(a.score, abs=1e-6), a.id

    def test_joint_scaling(self):
        d = rich_drawing()
        scale = 2.0
        scaled = transformed(
            d,
            lambda x, y: (x * scale, y * scale),
            canvas=Canvas(d.canvas.width * scale, d.canvas.height * scale),
            node_radius=d.node_radius * scale,
            stroke_width=d.stroke_width * scale,
        )
        base = evaluate_all(d)
        grown = evaluate_all(scaled)
        # raw values in canvas units scale with the drawing
        raw_scaling = {
            MetricId.AREA,
            MetricId.MAXIMUM_EDGE_LENGTH,
            MetricId.TOTAL_EDGE_LENGTH,
            MetricId.KEEP_NODES_APART_FROM_EDGES,
            MetricId.PATH_BENDINESS,
        }
        # metrics fed by flattened polylines carry the absolute flattening
        # tolerance, which does not scale with the drawing
        flattening_fed = {
            MetricId.MAXIMUM_EDGE_LENGTH,
            MetricId.TOTAL_EDGE_LENGTH,
            MetricId.UNIFORM_EDGE_LENGTHS,
            MetricId.WHITESPACE_TO_INK_RATIO,
            MetricId.SHORTEST_PATH_LENGTH,
            MetricId.KEEP_NODES_APART_FROM_EDGES,
            MetricId.CROSSING_ANGLE,
            MetricId.CROSSING_ANGLE_SD,
            MetricId.DIFFERENCE_BETWEEN_ANGLES,
            MetricId.FACE_AREA,
            MetricId.UNIFORM_FACES,
        }
        for a, b in zip(base, grown):
            assert a.defined == b.defined, a.id
            tol = 1e-3 if a.id in flattening_fed else 1e-6
            if a.id not in raw_scaling and a.id not in flattening_fed:
                assert b.raw == pytest.approx(a.raw, rel=tol), a.id
            if a.id is not MetricId.PATH_BENDINESS:  # per-length raw: see ledger
                assert b.score == pytest.approx(a.score, rel=tol), a.id


class TestMonotoneSpotChecks:
    def test_extra_crossing_never_increases_crossing_score(self):
        parallel = make_drawing(
            [(100, 100), (900, 100), (100, 300), (900, 300)], [(0, 1), (2, 3)]
        )
        crossed = make_drawing(
            [(100, 100), (900, 300), (100, 300), (900, 100)], [(0, 1), (2, 3)]
        )
        s0 = evaluate(parallel, MetricId.NUMBER_OF_EDGE_CROSSINGS).score
        s1 = evaluate(crossed, MetricId.NUMBER_OF_EDGE_CROSSINGS).score
        assert s1 < s0

    def test_breaking_mirror_symmetry_never_increases_score(self):
        positions = [
            (300, 200), (700, 200), (200, 500), (800, 500), (300, 800), (700, 800),
        ]
        edges = [(0, 1), (2, 3), (4, 5), (0, 2), (1, 3)]
        symmetric = make_drawing(positions, edges)
        before = evaluate(symmetric, MetricId.GLOBAL_SYMMETRY).score
        assert before == pytest.approx(1.0)
        nudged = list(positions)
        nudged[0] = (300 + 60, 200 + 25)  # well past the matching tolerance
        broken = make_drawing(nudged, edges)
        after = evaluate(broken, MetricId.GLOBAL_SYMMETRY).score
        assert after < before


class TestExplain:
    def test_all_entries_nonempty(self):
        for entry in catalog():
            assert explain(entry.id).strip()

    def test_face_area_text(self):
        assert "mean bounded face area" in explain(MetricId.FACE_AREA).lower()

    def test_crossings_text(self):
        assert "non-adjacent" in explain(MetricId.NUMBER_OF_EDGE_CROSSINGS)

    def test_unknown_id(self):
        with pytest.raises(KeyError):
            explain("glint")


class TestUndefinedCases:
    def test_edgeless_drawing(self):
        d = make_drawing([(100, 100), (500, 500), (900, 200)], [])
        vector = evaluate_all(d)
        undefined = {r.id for r in vector if not r.defined}
        for mid in (
            MetricId.DEGREE_OF_EDGE_BENDS,
            MetricId.MAXIMUM_EDGE_LENGTH,
            MetricId.UNIFORM_EDGE_LENGTHS,
            MetricId.CROSSING_ANGLE,
            MetricId.FACE_AREA,
            MetricId.ANGULAR_RESOLUTION,
            MetricId.NUMBER_OF_BRANCHES,
        ):
            assert mid in undefined
        # node-only metrics still work
        assert vector[MetricId.NODES_SHOULD_NOT_OVERLAP].defined
        assert vector[MetricId.DISTRIBUTE_NODES_EVENLY].defined

    def test_single_edge_keeps_apart_undefined(self):
        d = make_drawing([(100, 100), (900, 900)], [(0, 1)])
        assert not evaluate(d, MetricId.KEEP_NODES_APART_FROM_EDGES).defined

    def test_crossing_free_crossing_metrics(self, triangle):
        assert not evaluate(triangle, MetricId.CROSSING_ANGLE).defined
        assert not evaluate(triangle, MetricId.DIFFERENCE_BETWEEN_ANGLES).defined
        assert evaluate(triangle, MetricId.NUMBER_OF_EDGE_CROSSINGS).score == 1.0

import { describe, expect, it } from "vitest";

import { DrawingBuilder, CANVAS_SIZE } from "../src/drawing.js";

describe("DrawingBuilder", () => {
    it("places nodes on click and clamps to the canvas", () => {
        const builder = new DrawingBuilder();
        builder.addNode(100, 200);
        builder.addNode(-50, 2000);
        const drawing = builder.toDrawing();
        expect(drawing.positions).toEqual([
            [100, 200],
            [0, CANVAS_SIZE],
        ]);
    });

    it("creates edges from node-to-node drags, ignoring loops and duplicates", () => {
        const builder = new DrawingBuilder();
        const a = builder.addNode(100, 100);
        const b = builder.addNode(500, 500);
        expect(builder.addEdge(a, b)).toBe(0);
        expect(builder.addEdge(a, a)).toBeNull();
        expect(builder.addEdge(b, a)).toBeNull(); // unordered duplicate
        expect(builder.edgeCount).toBe(1);
    });

    it("finds nodes near a point for drag targeting", () => {
        const builder = new DrawingBuilder();
        const a = builder.addNode(100, 100);
        expect(builder.nodeAt(110, 95)).toBe(a);
        expect(builder.nodeAt(400, 400)).toBeNull();
    });

    it("bow handles clamp curvature to [-1, 1]", () => {
        const builder = new DrawingBuilder();
        const a = builder.addNode(100, 100);
        const b = builder.addNode(500, 500);
        const edge = builder.addEdge(a, b)!;
        builder.setBow(edge, 2.5);
        expect(builder.toDrawing().curvatures[0]).toBe(1);
        builder.setBow(edge, -0.4);
        expect(builder.toDrawing().curvatures[0]).toBe(-0.4);
    });

    it("rejects empty drawings", () => {
        const builder = new DrawingBuilder();
        expect(builder.isEmpty()).toBe(true);
        expect(() => builder.toDrawing()).toThrow(/empty/);
    });

    it("serializes to the service wire format", () => {
        const builder = new DrawingBuilder();
        const a = builder.addNode(100, 100);
        const b = builder.addNode(900, 900);
        builder.addEdge(a, b);
        const drawing = builder.toDrawing();
        expect(Object.keys(drawing).sort()).toEqual([
            "canvas", "curvatures", "graph", "node_radius", "positions", "stroke_width",
        ]);
        expect(drawing.graph.nodes).toEqual([0, 1]);
        expect(drawing.graph.edges).toEqual([[0, 1]]);
        expect(drawing.canvas).toEqual({ width: 1000, height: 1000 });
    });

    it("previews edges as quadratic beziers when bowed", () => {
        const builder = new DrawingBuilder();
        const a = builder.addNode(0, 0);
        const b = builder.addNode(1000, 0);
        const edge = builder.addEdge(a, b)!;
        expect(builder.toPreviewSvg()).toContain(" L ");
        builder.setBow(edge, 0.5);
        expect(builder.toPreviewSvg()).toContain(" Q ");
    });
});

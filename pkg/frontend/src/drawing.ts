/**
 * Freehand drawing model for participant-contributed elements.
 *
 * Interaction contract (wired up by the canvas view): a click on empty
 * space places a node, a drag from node to node creates an edge, and an
 * edge's bow handle adjusts its curvature.  The builder serializes to the
 * service's drawing wire format; empty drawings are rejected.
 */

import type { DrawingPayload } from "./api.js";

export const CANVAS_SIZE = 1000;
export const NODE_RADIUS = 8;
export const STROKE_WIDTH = 2;
const HIT_RADIUS = 3 * NODE_RADIUS;

export class DrawingBuilder {
    private nodes: [number, number][] = [];
    private edges: [number, number][] = [];
    private curvatures: number[] = [];

    get nodeCount(): number {
        return this.nodes.length;
    }

    get edgeCount(): number {
        return this.edges.length;
    }

    /** Node index near a canvas point, if any (click/drag targeting). */
    nodeAt(x: number, y: number): number | null {
        for (let i = this.nodes.length - 1; i >= 0; i--) {
            const [nx, ny] = this.nodes[i];
            if (Math.hypot(nx - x, ny - y) <= HIT_RADIUS) {
                return i;
            }
        }
        return null;
    }

    /** Click on empty space: place a node (clamped to the canvas). */
    addNode(x: number, y: number): number {
        const cx = Math.min(CANVAS_SIZE, Math.max(0, x));
        const cy = Math.min(CANVAS_SIZE, Math.max(0, y));
        this.nodes.push([cx, cy]);
        return this.nodes.length - 1;
    }

    /** Drag node-to-node: create an edge (ignores loops and duplicates). */
    addEdge(a: number, b: number): number | null {
        if (a === b || a < 0 || b < 0 || a >= this.nodes.length || b >= this.nodes.length) {
            return null;
        }
        for (const [ea, eb] of this.edges) {
            if ((ea === a && eb === b) || (ea === b && eb === a)) {
                return null;
            }
        }
        this.edges.push([a, b]);
        this.curvatures.push(0);
        return this.edges.length - 1;
    }

    /** Bow handle: set an edge's curvature, clamped to [-1, 1]. */
    setBow(edge: number, curvature: number): void {
        if (edge >= 0 && edge < this.curvatures.length) {
            this.curvatures[edge] = Math.min(1, Math.max(-1, curvature));
        }
    }

    isEmpty(): boolean {
        return this.nodes.length === 0;
    }

    clear(): void {
        this.nodes = [];
        this.edges = [];
        this.curvatures = [];
    }

    /** Serialize to the service wire format; empty drawings are invalid. */
    toDrawing(): DrawingPayload {
        if (this.isEmpty()) {
            throw new Error("drawing is empty: place at least one node");
        }
        return {
            graph: {
                nodes: this.nodes.map((_, i) => i),
                edges: this.edges.map(([a, b]) => [a, b]),
            },
            positions: this.nodes.map(([x, y]) => [x, y]),
            curvatures: [...this.curvatures],
            canvas: { width: CANVAS_SIZE, height: CANVAS_SIZE },
            node_radius: NODE_RADIUS,
            stroke_width: STROKE_WIDTH,
        };
    }

    /** Local SVG preview mirroring the service's renderer (black on white). */
    toPreviewSvg(): string {
        const parts: string[] = [
            `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${CANVAS_SIZE} ${CANVAS_SIZE}">`,
        ];
        for (let i = 0; i < this.edges.length; i++) {
            const [a, b] = this.edges[i];
            const [x0, y0] = this.nodes[a];
            const [x1, y1] = this.nodes[b];
            const c = this.curvatures[i];
            if (c === 0) {
                parts.push(
                    `<path d="M ${x0} ${y0} L ${x1} ${y1}" stroke="black" fill="none" stroke-width="${STROKE_WIDTH}"/>`,
                );
            } else {
                const mx = (x0 + x1) / 2 - c * (y1 - y0);
                const my = (y0 + y1) / 2 + c * (x1 - x0);
                parts.push(
                    `<path d="M ${x0} ${y0} Q ${mx} ${my} ${x1} ${y1}" stroke="black" fill="none" stroke-width="${STROKE_WIDTH}"/>`,
                );
            }
        }
        for (const [x, y] of this.nodes) {
            parts.push(`<circle cx="${x}" cy="${y}" r="${NODE_RADIUS}" fill="black"/>`);
        }
        parts.push("</svg>");
        return parts.join("");
    }
}

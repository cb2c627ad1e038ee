/**
 * Browser entry point.  The URL hash selects the role for the tab:
 *
 *     #participant/<session-id>   triad flow + drawing canvas
 *     #interviewer/<session-id>   participant view plus the strike panel
 *     #analyst[/<study-id>]       tagging/mapping workbench
 *
 * One active session per tab; every mutation goes through the service with
 * a fresh request id, so a retried submit cannot double-apply.
 */

import { AnalystApi, ParticipantApi, InterviewerApi } from "./api.js";
import { AnalystController } from "./analyst.js";
import { DrawingBuilder } from "./drawing.js";
import { TriadFlowController } from "./triadFlow.js";
import {
    renderDrawingCanvas,
    renderInterviewerStatus,
    renderTriadView,
    renderWorkbench,
} from "./views.js";

const API_BASE = "";

function mount(): HTMLElement {
    const root = document.getElementById("app");
    if (!root) {
        throw new Error("missing #app mount point");
    }
    return root;
}

async function participantPage(sessionId: string, withInterviewerPanel: boolean): Promise<void> {
    const root = mount();
    const api = new ParticipantApi(API_BASE, sessionId);
    const flow = new TriadFlowController(api);
    const builder = new DrawingBuilder();
    let dragFrom: number | null = null;

    async function redraw(): Promise<void> {
        const progress = await api.progress();
        const triad = flow.triad ?? (await flow.refresh());
        let html = renderTriadView(triad, progress) + renderDrawingCanvas();
        if (withInterviewerPanel) {
            const status = await new InterviewerApi(API_BASE).sessionStatus(sessionId);
            html += renderInterviewerStatus(status);
        }
        root.innerHTML = html;
        wire();
        repaintCanvas();
    }

    function showError(id: string, message: string | null): void {
        const node = document.getElementById(id);
        if (node) {
            node.hidden = !message;
            node.textContent = message ?? "";
        }
    }

    function repaintCanvas(): void {
        const surface = document.getElementById("draw-surface");
        if (surface) {
            surface.innerHTML = builder.toPreviewSvg();
        }
    }

    function canvasPoint(event: MouseEvent): [number, number] {
        const surface = document.getElementById("draw-surface") as unknown as SVGSVGElement;
        const rect = surface.getBoundingClientRect();
        return [
            ((event.clientX - rect.left) / rect.width) * 1000,
            ((event.clientY - rect.top) / rect.height) * 1000,
        ];
    }

    function wire(): void {
        const form = document.getElementById("construct-form");
        form?.addEventListener("submit", async (event) => {
            event.preventDefault();
            const poleA = (document.getElementById("pole-a") as HTMLInputElement).value;
            const poleB = (document.getElementById("pole-b") as HTMLInputElement).value;
            flow.setPoles(poleA, poleB);
            const construct = await flow.submitConstruct();
            if (construct === null) {
                // typed input stays in the fields; only the error line changes
                showError("flow-error", flow.lastError);
            } else {
                (document.getElementById("pole-a") as HTMLInputElement).value = "";
                (document.getElementById("pole-b") as HTMLInputElement).value = "";
                showError("flow-error", null);
            }
        });
        document.getElementById("ladder-last")?.addEventListener("click", () => {
            const last = flow.submittedThisTriad.at(-1);
            if (last) {
                flow.ladderFrom(last);
            }
        });
        document.getElementById("complete-triad")?.addEventListener("click", async () => {
            await flow.completeTriad();
            await redraw();
        });
        const surface = document.getElementById("draw-surface");
        surface?.addEventListener("mousedown", (event) => {
            const [x, y] = canvasPoint(event as MouseEvent);
            dragFrom = builder.nodeAt(x, y);
        });
        surface?.addEventListener("mouseup", (event) => {
            const [x, y] = canvasPoint(event as MouseEvent);
            const target = builder.nodeAt(x, y);
            if (dragFrom === null && target === null) {
                builder.addNode(x, y);
            } else if (dragFrom !== null && target !== null && dragFrom !== target) {
                builder.addEdge(dragFrom, target);
            }
            dragFrom = null;
            repaintCanvas();
        });
        document.getElementById("clear-drawing")?.addEventListener("click", () => {
            builder.clear();
            repaintCanvas();
        });
        document.getElementById("submit-drawing")?.addEventListener("click", async () => {
            if (builder.isEmpty()) {
                showError("drawing-error", "drawing is empty: place at least one node");
                return;
            }
            const label = (document.getElementById("drawing-label") as HTMLInputElement).value;
            const element = await flow.submitDrawing(builder.toDrawing(), label);
            if (element === null) {
                showError("drawing-error", flow.lastError);
            } else {
                builder.clear();
                showError("drawing-error", null);
                repaintCanvas();
            }
        });
    }

    await redraw();
}

async function analystPage(studyId?: string): Promise<void> {
    const root = mount();
    const controller = new AnalystController(new AnalystApi(API_BASE), studyId);

    async function redraw(): Promise<void> {
        await controller.refresh();
        root.innerHTML = renderWorkbench(controller.rows, controller.catalog, controller.usageTable);
        for (const select of Array.from(document.querySelectorAll("select.category"))) {
            select.addEventListener("change", async (event) => {
                const el = event.target as HTMLSelectElement;
                const id = el.dataset.construct ?? "";
                if (el.value) {
                    await controller.tag(id, el.value);
                    await redraw();
                }
            });
        }
        for (const select of Array.from(document.querySelectorAll("select.aesthetic"))) {
            select.addEventListener("change", async (event) => {
                const el = event.target as HTMLSelectElement;
                const id = el.dataset.construct ?? "";
                let aesthetic = el.value;
                if (aesthetic === "__new__") {
                    aesthetic = window.prompt("Name of the new aesthetic:") ?? "";
                }
                if (aesthetic) {
                    await controller.map(id, aesthetic);
                    await redraw();
                }
            });
        }
    }

    await redraw();
}

async function route(): Promise<void> {
    const [role, id] = window.location.hash.replace(/^#/, "").split("/");
    if (role === "participant" && id) {
        await participantPage(id, false);
    } else if (role === "interviewer" && id) {
        await participantPage(id, true);
    } else if (role === "analyst") {
        await analystPage(id || undefined);
    } else {
        mount().innerHTML =
            "<p>Open a session link: #participant/&lt;session&gt;, " +
            "#interviewer/&lt;session&gt;, or #analyst/&lt;study&gt;.</p>";
    }
}

window.addEventListener("hashchange", () => void route());
void route();

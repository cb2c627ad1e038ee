/**
 * Typed clients for the aesgrid HTTP API.
 *
 * The participant client is the complete participant-facing surface: its
 * endpoint registry is audited by tests to contain no route that could
 * return previously recorded constructs of the live session.  Interviewer
 * and analyst operations live on their own clients.
 */

export interface ApiErrorBody {
    code: string;
    message: string;
    detail?: unknown;
}

export class ApiError extends Error {
    code: string;
    detail: unknown;

    constructor(body: ApiErrorBody, status: number) {
        super(body.message ?? `request failed with status ${status}`);
        this.code = body.code ?? "bad_request";
        this.detail = body.detail;
    }
}

export interface DrawingPayload {
    graph: { nodes: number[]; edges: [number, number][] };
    positions: [number, number][];
    curvatures: number[];
    canvas: { width: number; height: number };
    node_radius: number;
    stroke_width: number;
}

export interface ElementView {
    id: string;
    kind: string;
    label: string;
    origin: string;
    svg_url: string;
}

export interface TriadResponse {
    state: "active" | "finished";
    triad?: string;
    elements?: ElementView[];
    questions?: string[];
    ladder_prompt?: string;
}

export interface Progress {
    state: string;
    triads_completed: number;
}

export interface ConstructRow {
    construct: string;
    study: string;
    participant: string;
    pole_a: string;
    pole_b: string;
    ladder_parent: string | null;
    category: string | null;
    aesthetic: string | null;
}

export interface CatalogEntry {
    id: string;
    display_name: string;
    category: string;
    evaluated: boolean;
    novel: boolean;
}

export interface UsageReport {
    studies: string[];
    participants: Record<string, number>;
    catalog: Record<string, Record<string, number>>;
    new_aesthetics: Record<string, Record<string, number>>;
    table: string;
}

async function request<T>(base: string, method: string, path: string, body?: unknown): Promise<T> {
    const response = await fetch(base + path, {
        method,
        headers: body === undefined ? {} : { "Content-Type": "application/json" },
        body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (!response.ok) {
        let parsed: ApiErrorBody;
        try {
            parsed = (await response.json()) as ApiErrorBody;
        } catch {
            parsed = { code: "bad_request", message: `status ${response.status}` };
        }
        throw new ApiError(parsed, response.status);
    }
    const contentType = response.headers.get("content-type") ?? "";
    if (contentType.includes("svg") || contentType.includes("text")) {
        return (await response.text()) as unknown as T;
    }
    return (await response.json()) as T;
}

let requestCounter = 0;

/** Client-generated retry token for state-changing calls. */
export function freshRequestId(): string {
    requestCounter += 1;
    return `ui-${Date.now().toString(36)}-${requestCounter}`;
}

/**
 * The participant-facing client.  Every route it can reach is listed in
 * ENDPOINTS; reads are limited to the current triad, progress, and element
 * SVGs (no construct history).
 */
export class ParticipantApi {
    static readonly ENDPOINTS = [
        "GET /api/participant/sessions/{session}/triad",
        "POST /api/participant/sessions/{session}/constructs",
        "POST /api/participant/sessions/{session}/triad/complete",
        "POST /api/participant/sessions/{session}/elements",
        "GET /api/participant/sessions/{session}/progress",
        "GET /api/elements/{element}/svg",
    ] as const;

    constructor(private base: string, private session: string) {}

    currentTriad(): Promise<TriadResponse> {
        return request(this.base, "GET", `/api/participant/sessions/${this.session}/triad`);
    }

    submitConstruct(
        poleA: string,
        poleB: string,
        ladderParent?: string,
        requestId?: string,
    ): Promise<{ construct: string }> {
        return request(this.base, "POST", `/api/participant/sessions/${this.session}/constructs`, {
            pole_a: poleA,
            pole_b: poleB,
            ladder_parent: ladderParent ?? null,
            request_id: requestId ?? freshRequestId(),
        });
    }

    completeTriad(requestId?: string): Promise<Progress> {
        return request(this.base, "POST", `/api/participant/sessions/${this.session}/triad/complete`, {
            request_id: requestId ?? freshRequestId(),
        });
    }

    addElement(drawing: DrawingPayload, label: string, requestId?: string): Promise<{ element: string }> {
        return request(this.base, "POST", `/api/participant/sessions/${this.session}/elements`, {
            drawing,
            label,
            request_id: requestId ?? freshRequestId(),
        });
    }

    progress(): Promise<Progress> {
        return request(this.base, "GET", `/api/participant/sessions/${this.session}/progress`);
    }

    elementSvg(svgUrl: string): Promise<string> {
        return request(this.base, "GET", svgUrl);
    }
}

/** Interviewer-side operations (strike state, session control, export). */
export class InterviewerApi {
    constructor(private base: string) {}

    createStudy(body: Record<string, unknown>): Promise<{ study: string; elements: string[] }> {
        return request(this.base, "POST", "/api/studies", { request_id: freshRequestId(), ...body });
    }

    startSession(study: string, participant: string, seed: number): Promise<{ session: string }> {
        return request(this.base, "POST", `/api/studies/${study}/sessions`, {
            participant,
            seed,
            request_id: freshRequestId(),
        });
    }

    sessionStatus(session: string): Promise<{
        state: string;
        strikes: number;
        strike_limit: number;
        triads_completed: number;
        participant: string;
        study: string;
    }> {
        return request(this.base, "GET", `/api/sessions/${session}`);
    }

    exportSession(session: string): Promise<Record<string, unknown>> {
        return request(this.base, "GET", `/api/sessions/${session}/export`);
    }

    terminate(session: string, reason: string): Promise<{ state: string }> {
        return request(this.base, "POST", `/api/sessions/${session}/terminate`, {
            reason,
            request_id: freshRequestId(),
        });
    }
}

/** Analyst-side operations: tagging, mapping, and reports. */
export class AnalystApi {
    constructor(private base: string, private analyst: string = "primary") {}

    catalog(): Promise<{ catalog: CatalogEntry[] }> {
        return request(this.base, "GET", "/api/catalog");
    }

    constructs(study?: string): Promise<{ constructs: ConstructRow[] }> {
        const query = study ? `?study=${encodeURIComponent(study)}&analyst=${this.analyst}` : `?analyst=${this.analyst}`;
        return request(this.base, "GET", `/api/analysis/constructs${query}`);
    }

    tag(constructId: string, category: string): Promise<unknown> {
        return request(this.base, "POST", "/api/analysis/tags", {
            construct_id: constructId,
            category,
            analyst: this.analyst,
            request_id: freshRequestId(),
        });
    }

    map(constructId: string, aesthetic: string): Promise<unknown> {
        return request(this.base, "POST", "/api/analysis/mappings", {
            construct_id: constructId,
            aesthetic,
            analyst: this.analyst,
            request_id: freshRequestId(),
        });
    }

    usageReport(): Promise<UsageReport> {
        return request(this.base, "GET", `/api/reports/usage?analyst=${this.analyst}`);
    }
}

/**
 * Triad elicitation flow: fetch the current triad, capture constructs
 * (optionally laddered), contribute drawn elements, and complete triads.
 *
 * All state round-trips through the service, so reloading mid-triad
 * restores the identical triad.  Service errors never clear typed input:
 * the form state survives and the error is surfaced inline.
 */

import { ApiError, ParticipantApi, TriadResponse } from "./api.js";
import type { DrawingPayload } from "./api.js";

export interface ConstructForm {
    poleA: string;
    poleB: string;
    ladderParent: string | null;
}

export class TriadFlowController {
    triad: TriadResponse | null = null;
    form: ConstructForm = { poleA: "", poleB: "", ladderParent: null };
    /** Ids submitted in the current triad; used only as ladder anchors. */
    submittedThisTriad: string[] = [];
    lastError: string | null = null;
    finished = false;

    constructor(private api: ParticipantApi) {}

    async refresh(): Promise<TriadResponse> {
        this.triad = await this.api.currentTriad();
        this.finished = this.triad.state === "finished";
        return this.triad;
    }

    setPoles(poleA: string, poleB: string): void {
        this.form.poleA = poleA;
        this.form.poleB = poleB;
    }

    /** Arm the ladder prompt: the next submission becomes a child. */
    ladderFrom(constructId: string): void {
        this.form.ladderParent = constructId;
    }

    async submitConstruct(): Promise<string | null> {
        this.lastError = null;
        try {
            const ack = await this.api.submitConstruct(
                this.form.poleA,
                this.form.poleB,
                this.form.ladderParent ?? undefined,
            );
            this.submittedThisTriad.push(ack.construct);
            this.form = { poleA: "", poleB: "", ladderParent: null };
            return ack.construct;
        } catch (error) {
            // keep the typed poles so nothing is lost on a failed submit
            this.lastError = error instanceof ApiError ? error.message : String(error);
            return null;
        }
    }

    async submitDrawing(drawing: DrawingPayload, label: string): Promise<string | null> {
        this.lastError = null;
        try {
            const ack = await this.api.addElement(drawing, label);
            return ack.element;
        } catch (error) {
            this.lastError = error instanceof ApiError ? error.message : String(error);
            return null;
        }
    }

    async completeTriad(): Promise<void> {
        this.lastError = null;
        try {
            const progress = await this.api.completeTriad();
            this.finished = progress.state === "finished";
            this.submittedThisTriad = [];
            this.triad = null;
            if (!this.finished) {
                await this.refresh();
            }
        } catch (error) {
            this.lastError = error instanceof ApiError ? error.message : String(error);
        }
    }
}

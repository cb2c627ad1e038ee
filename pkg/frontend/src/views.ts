/**
 * Pure HTML renderers.  Each returns a markup string; main.ts injects them
 * into the page and wires events.  Element panels are intentionally inert:
 * plain <img> tags with no zoom, pan, or tooltip affordances (drawn-graph
 * studies are non-interactive; navigation controls would only appear for
 * studies explicitly configured as interactive, which this build does not
 * define).
 */

import { CatalogEntry, ElementView, Progress, TriadResponse } from "./api.js";
import { CATEGORIES } from "./analyst.js";
import type { WorkbenchRow } from "./analyst.js";

export function escapeHtml(text: string): string {
    return text
        .replace(/&/g, "&amp;")
        .replace(/</g, "&lt;")
        .replace(/>/g, "&gt;")
        .replace(/"/g, "&quot;");
}

function panel(element: ElementView): string {
    return (
        `<figure class="element-panel" data-element="${escapeHtml(element.id)}">` +
        `<img src="${escapeHtml(element.svg_url)}" alt="element" draggable="false"/>` +
        `</figure>`
    );
}

export function renderTriadView(triad: TriadResponse, progress: Progress): string {
    if (triad.state === "finished") {
        return (
            `<section class="triad-view finished"><h2>Session finished</h2>` +
            `<p>Triads completed: ${progress.triads_completed}</p></section>`
        );
    }
    const panels = (triad.elements ?? []).map(panel).join("");
    const questions = (triad.questions ?? [])
        .map((q) => `<p class="question">${escapeHtml(q)}</p>`)
        .join("");
    return (
        `<section class="triad-view" data-triad="${escapeHtml(triad.triad ?? "")}">` +
        `<div class="panels">${panels}</div>` +
        questions +
        `<form id="construct-form">` +
        `<input id="pole-a" name="pole_a" placeholder="first pole"/>` +
        `<input id="pole-b" name="pole_b" placeholder="opposite pole"/>` +
        `<button id="submit-construct" type="submit">Record construct</button>` +
        `</form>` +
        `<button id="ladder-last" class="ladder-prompt" ` +
        `title="${escapeHtml(triad.ladder_prompt ?? "")}">Ladder from last construct</button>` +
        `<button id="complete-triad">Complete triad</button>` +
        `<p class="progress">Triads completed: ${progress.triads_completed}</p>` +
        `<p id="flow-error" class="error" hidden></p>` +
        `</section>`
    );
}

export function renderDrawingCanvas(): string {
    return (
        `<section class="drawing-canvas">` +
        `<svg id="draw-surface" viewBox="0 0 1000 1000"></svg>` +
        `<input id="drawing-label" placeholder="label, e.g. ideal drawing"/>` +
        `<button id="submit-drawing">Add as element</button>` +
        `<button id="clear-drawing">Clear</button>` +
        `<p id="drawing-error" class="error" hidden></p>` +
        `</section>`
    );
}

export function renderInterviewerStatus(status: {
    state: string;
    strikes: number;
    strike_limit: number;
    triads_completed: number;
    participant: string;
}): string {
    return (
        `<aside class="interviewer-status">` +
        `<h3>Interviewer</h3>` +
        `<p>Participant: ${escapeHtml(status.participant)}</p>` +
        `<p>State: ${escapeHtml(status.state)}</p>` +
        `<p class="strikes">Strikes: ${status.strikes} / ${status.strike_limit}</p>` +
        `<p>Triads completed: ${status.triads_completed}</p>` +
        `</aside>`
    );
}

function categorySelect(row: WorkbenchRow): string {
    const options = CATEGORIES.map(
        (c) =>
            `<option value="${c}"${row.category === c ? " selected" : ""}>${c}</option>`,
    ).join("");
    return (
        `<select class="category" data-construct="${escapeHtml(row.construct)}">` +
        `<option value=""${row.category === null ? " selected" : ""}>untagged</option>` +
        options +
        `</select>`
    );
}

function aestheticSelect(row: WorkbenchRow, catalog: CatalogEntry[]): string {
    const options = catalog
        .map(
            (entry) =>
                `<option value="${entry.id}"${row.aesthetic === entry.id ? " selected" : ""}>` +
                `${escapeHtml(entry.display_name)}</option>`,
        )
        .join("");
    const disabled = row.mappable ? "" : " disabled";
    return (
        `<select class="aesthetic" data-construct="${escapeHtml(row.construct)}"${disabled}>` +
        `<option value="">unmapped</option>` +
        options +
        `<option value="__new__">new aesthetic...</option>` +
        `</select>`
    );
}

export function renderWorkbench(rows: WorkbenchRow[], catalog: CatalogEntry[], usageTable: string): string {
    const body = rows
        .map(
            (row) =>
                `<tr data-construct="${escapeHtml(row.construct)}">` +
                `<td>${escapeHtml(row.participant)}</td>` +
                `<td class="chain">${escapeHtml(row.ladderChain.join(" → "))}</td>` +
                `<td>${categorySelect(row)}</td>` +
                `<td>${aestheticSelect(row, catalog)}</td>` +
                `</tr>`,
        )
        .join("");
    return (
        `<section class="workbench">` +
        `<table><thead><tr>` +
        `<th>Participant</th><th>Construct (ladder chain)</th><th>Category</th><th>Aesthetic</th>` +
        `</tr></thead><tbody>${body}</tbody></table>` +
        `<h3>Usage report</h3>` +
        `<pre id="usage-table">${escapeHtml(usageTable)}</pre>` +
        `</section>`
    );
}

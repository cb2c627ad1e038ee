/**
 * Analyst workbench state: constructs with their ladder chains, category
 * tagging, aesthetic mapping (guarded to the two aesthetic-bearing
 * categories), and the live usage report rendered by the service.
 */

import { AnalystApi, CatalogEntry, ConstructRow } from "./api.js";

export const CATEGORIES = [
    "visual_mapping",
    "composition",
    "data_related",
    "visual_experience",
] as const;

export const MAPPABLE_CATEGORIES: readonly string[] = ["visual_mapping", "composition"];

export interface WorkbenchRow extends ConstructRow {
    /** Pole pairs from the root construct down to this one. */
    ladderChain: string[];
    mappable: boolean;
}

export class AnalystController {
    rows: WorkbenchRow[] = [];
    catalog: CatalogEntry[] = [];
    usageTable = "";
    lastError: string | null = null;

    constructor(private api: AnalystApi, private study?: string) {}

    async refresh(): Promise<void> {
        const [constructs, catalog, report] = await Promise.all([
            this.api.constructs(this.study),
            this.api.catalog(),
            this.api.usageReport(),
        ]);
        this.catalog = catalog.catalog;
        this.usageTable = report.table;
        const byId = new Map(constructs.constructs.map((c) => [c.construct, c]));
        this.rows = constructs.constructs.map((c) => ({
            ...c,
            ladderChain: this.chainOf(c, byId),
            mappable: c.category !== null && MAPPABLE_CATEGORIES.includes(c.category),
        }));
    }

    private chainOf(row: ConstructRow, byId: Map<string, ConstructRow>): string[] {
        const chain: string[] = [];
        let current: ConstructRow | undefined = row;
        const guard = new Set<string>();
        while (current && !guard.has(current.construct)) {
            guard.add(current.construct);
            chain.unshift(`${current.pole_a} / ${current.pole_b}`);
            current = current.ladder_parent ? byId.get(current.ladder_parent) : undefined;
        }
        return chain;
    }

    /** Whether the mapping control is enabled for a construct. */
    canMap(constructId: string): boolean {
        const row = this.rows.find((r) => r.construct === constructId);
        return row !== undefined && row.mappable;
    }

    async tag(constructId: string, category: string): Promise<boolean> {
        this.lastError = null;
        try {
            await this.api.tag(constructId, category);
            await this.refresh();
            return true;
        } catch (error) {
            this.lastError = String(error);
            return false;
        }
    }

    async map(constructId: string, aesthetic: string): Promise<boolean> {
        this.lastError = null;
        if (!this.canMap(constructId)) {
            this.lastError = "construct must be tagged visual_mapping or composition first";
            return false;
        }
        try {
            await this.api.map(constructId, aesthetic);
            await this.refresh();
            return true;
        } catch (error) {
            this.lastError = String(error);
            return false;
        }
    }
}

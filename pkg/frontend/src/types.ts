// Wire types for the session service. Field names mirror the HTTP API
// exactly; the UI never invents numbers of its own, so everything
// rendered traces back to one of these shapes.

export interface ValidationIssue {
  code: string;
  severity: "error" | "warning" | "info";
  subjects: string[];
  message: string;
}

export interface JudgmentEntry {
  pair: [string, string];
  value: number;
  /** 1/value exactly as the service computed it; displayed verbatim. */
  reciprocal: number;
}

export interface ConsistencyInfo {
  lambda_max: number;
  ci: number;
  ri: number;
  cr: number;
  consistent: boolean;
  worst_entry: [string, string] | null;
  cr_exceeds_threshold: boolean;
  suggestion: {
    pair: [string, string];
    current: number;
    consistent_value: number;
  } | null;
}

export interface ContextResult {
  labels: string[];
  required: number;
  provided: number;
  missing_pairs: [string, string][];
  complete: boolean;
  judgments: JudgmentEntry[];
  homogeneity_violations: [string, string][];
  priorities: Record<string, number> | null;
  consistency: ConsistencyInfo | null;
  error?: string;
}

export interface LevelVector {
  labels: string[];
  weights: number[];
}

export interface GlobalResult {
  per_level: LevelVector[];
  final: Record<string, number>;
  ranking: string[];
}

export interface LimitResult {
  method: "power" | "cesaro";
  steps: number;
  priorities: Record<string, number>;
  ranking: string[];
  columns_agree: boolean;
}

export interface Snapshot {
  revision: number;
  kind: "hierarchy" | "network";
  mode: "distributive" | "ideal";
  rho: number;
  cr_threshold: number;
  validation: { ok: boolean; issues: ValidationIssue[] };
  contexts: Record<string, ContextResult>;
  global: GlobalResult | null;
  limit: LimitResult | null;
  errors: string[];
}

export interface RankChanges {
  comparable: boolean;
  changed: boolean | null;
  reversed_pairs: [string, string][];
}

export interface WhatIfResponse {
  action: string;
  snapshot: Snapshot;
  rank_changes: RankChanges;
}

export type WhatIfAction =
  | { action: "set_mode"; mode: "distributive" | "ideal" }
  | { action: "set_rho"; rho: number }
  | {
      action: "add_alternative";
      id: string;
      parents: string[];
      judgments?: Record<string, Record<string, number>>;
    }
  | { action: "remove_alternative"; id: string };

export interface SessionHandle {
  id: string;
  snapshot: Snapshot;
}

// Hand-built snapshots for render tests. Shapes mirror the service
// wire format; numbers come from a worked two-criterion example whose
// final priorities are 0.6 / 0.4.

import type {
  ConsistencyInfo,
  ContextResult,
  Snapshot,
} from "../src/types.js";

export function cleanConsistency(overrides: Partial<ConsistencyInfo> = {}): ConsistencyInfo {
  return {
    lambda_max: 2,
    ci: 0,
    ri: 0,
    cr: 0,
    consistent: true,
    worst_entry: null,
    cr_exceeds_threshold: false,
    suggestion: null,
    ...overrides,
  };
}

export function makeContext(overrides: Partial<ContextResult> = {}): ContextResult {
  return {
    labels: ["a1", "a2"],
    required: 1,
    provided: 1,
    missing_pairs: [],
    complete: true,
    judgments: [{ pair: ["a1", "a2"], value: 3, reciprocal: 1 / 3 }],
    homogeneity_violations: [],
    priorities: { a1: 0.75, a2: 0.25 },
    consistency: cleanConsistency(),
    ...overrides,
  };
}

export function makeSnapshot(overrides: Partial<Snapshot> = {}): Snapshot {
  return {
    revision: 0,
    kind: "hierarchy",
    mode: "distributive",
    rho: 9,
    cr_threshold: 0.1,
    validation: { ok: true, issues: [] },
    contexts: {},
    global: null,
    limit: null,
    errors: [],
    ...overrides,
  };
}

/** Complete hierarchy session: goal over c1/c2 over a1/a2, final 0.6/0.4. */
export function workedSnapshot(): Snapshot {
  return makeSnapshot({
    revision: 3,
    contexts: {
      goal: makeContext({
        labels: ["c1", "c2"],
        judgments: [{ pair: ["c1", "c2"], value: 1.5, reciprocal: 1 / 1.5 }],
        priorities: { c1: 0.6, c2: 0.4 },
      }),
      c1: makeContext({
        judgments: [{ pair: ["a1", "a2"], value: 1, reciprocal: 1 }],
        priorities: { a1: 0.5, a2: 0.5 },
      }),
      c2: makeContext({
        priorities: { a1: 0.75, a2: 0.25 },
      }),
    },
    global: {
      per_level: [
        { labels: ["goal"], weights: [1] },
        { labels: ["c1", "c2"], weights: [0.6, 0.4] },
        { labels: ["a1", "a2"], weights: [0.6, 0.4] },
      ],
      final: { a1: 0.6, a2: 0.4 },
      ranking: ["a1", "a2"],
    },
  });
}

export function networkSnapshot(): Snapshot {
  return makeSnapshot({
    kind: "network",
    contexts: {
      "crit@a1": makeContext({ labels: ["c1", "c2"], priorities: { c1: 0.5, c2: 0.5 } }),
      "alts@c1": makeContext(),
    },
    limit: {
      method: "power",
      steps: 12,
      priorities: { a1: 0.55, a2: 0.45, c1: 0.5, c2: 0.5 },
      ranking: ["a1", "a2"],
      columns_agree: true,
    },
  });
}

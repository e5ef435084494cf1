// What-if panel: add or remove an alternative hypothetically and show
// the current vs hypothetical ranking side by side with reversal flags.
// Everything here goes through the what-if endpoint, which never
// mutates the stored session.

import { escapeHtml, formatWeight } from "./format.js";
import type { Snapshot, WhatIfResponse } from "./types.js";

/** Leaf alternatives are whatever the final ranking ranks. */
export function alternatives(snapshot: Snapshot): string[] {
  if (snapshot.global) return [...snapshot.global.ranking].sort();
  if (snapshot.limit) return [...snapshot.limit.ranking].sort();
  return [];
}

/** Parents eligible for a new alternative: contexts that rank leaves. */
export function leafParents(snapshot: Snapshot): string[] {
  const leaves = new Set<string>();
  if (snapshot.global) snapshot.global.ranking.forEach((a) => leaves.add(a));
  return Object.entries(snapshot.contexts)
    .filter(([, ctx]) => ctx.labels.some((lab) => leaves.has(lab)))
    .map(([id]) => id);
}

export function renderWhatIfForms(snapshot: Snapshot): string {
  const alts = alternatives(snapshot);
  const parents = leafParents(snapshot);
  const removeOptions = alts
    .map((a) => `<option value="${escapeHtml(a)}">${escapeHtml(a)}</option>`)
    .join("");
  const parentBoxes = parents
    .map(
      (p) =>
        `<label class="parent-box"><input type="checkbox" name="parent" value="${escapeHtml(p)}" checked> ${escapeHtml(p)}</label>`,
    )
    .join("");
  return `<div class="whatif-forms">
<form id="whatif-add">
  <h3>Add an alternative</h3>
  <input name="id" type="text" placeholder="new alternative id" required>
  <fieldset><legend>under</legend>${parentBoxes}</fieldset>
  <button type="submit">Preview</button>
</form>
<form id="whatif-remove">
  <h3>Remove an alternative</h3>
  <select name="id" required>${removeOptions}</select>
  <button type="submit">Preview</button>
</form>
</div>`;
}

function rankingList(ranking: string[], weights: Record<string, number>): string {
  return `<ol class="ranking">${ranking
    .map(
      (label) =>
        `<li data-label="${escapeHtml(label)}">${escapeHtml(label)} <span class="num">${formatWeight(weights[label] ?? 0)}</span></li>`,
    )
    .join("")}</ol>`;
}

function finalOf(snapshot: Snapshot): { ranking: string[]; weights: Record<string, number> } | null {
  if (snapshot.global) {
    return { ranking: snapshot.global.ranking, weights: snapshot.global.final };
  }
  if (snapshot.limit) {
    return { ranking: snapshot.limit.ranking, weights: snapshot.limit.priorities };
  }
  return null;
}

export function renderComparison(
  current: Snapshot,
  response: WhatIfResponse,
): string {
  const now = finalOf(current);
  const hypo = finalOf(response.snapshot);
  const rc = response.rank_changes;
  let verdict: string;
  if (!rc.comparable) {
    verdict = `<p class="badge pending">hypothetical ranking incomplete; nothing to compare</p>`;
  } else if (rc.reversed_pairs.length) {
    const flips = rc.reversed_pairs
      .map(([a, b]) => `${escapeHtml(a)} ↔ ${escapeHtml(b)}`)
      .join(", ");
    verdict = `<p class="badge reversal">rank reversal: ${flips}</p>`;
  } else if (rc.changed) {
    verdict = `<p class="badge changed">order changed among originals (no strict flip)</p>`;
  } else {
    verdict = `<p class="badge unchanged">original order unchanged</p>`;
  }
  return `<div class="whatif-compare">
${verdict}
<div class="columns">
<div><h4>current</h4>${now ? rankingList(now.ranking, now.weights) : "<p>no ranking</p>"}</div>
<div><h4>hypothetical (${escapeHtml(response.action)})</h4>${hypo ? rankingList(hypo.ranking, hypo.weights) : "<p>no ranking</p>"}</div>
</div>
</div>`;
}

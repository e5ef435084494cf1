// Ranking dashboard: horizontal bars for the final priorities, the
// per-level breakdown, and a mode toggle that previews the other mode
// through what-if (never mutating the session).

import { escapeHtml, formatWeight } from "./format.js";
import type { Snapshot } from "./types.js";

function bar(label: string, weight: number, max: number): string {
  const pct = max > 0 ? (weight / max) * 100 : 0;
  return `<div class="bar-row" data-label="${escapeHtml(label)}" data-weight="${weight}">
  <span class="bar-label">${escapeHtml(label)}</span>
  <span class="bar-track"><span class="bar-fill" style="width:${pct.toFixed(2)}%"></span></span>
  <span class="bar-value">${formatWeight(weight)}</span>
</div>`;
}

export function renderBars(weights: Record<string, number>, ranking: string[]): string {
  const max = Math.max(...ranking.map((label) => weights[label] ?? 0), 0);
  return ranking.map((label) => bar(label, weights[label] ?? 0, max)).join("\n");
}

function pendingBadges(snapshot: Snapshot): string {
  const rows = Object.entries(snapshot.contexts)
    .filter(([, ctx]) => !ctx.complete)
    .map(
      ([id, ctx]) =>
        `<li><span class="badge pending">pending</span> ${escapeHtml(id)}: ${ctx.missing_pairs.length} pair${ctx.missing_pairs.length === 1 ? "" : "s"} missing</li>`,
    );
  return rows.length ? `<ul class="pending-list">${rows.join("")}</ul>` : "";
}

function perLevel(snapshot: Snapshot): string {
  if (!snapshot.global) return "";
  return snapshot.global.per_level
    .map(
      (level, i) => `<details class="level" ${i === snapshot.global!.per_level.length - 1 ? "open" : ""}>
<summary>level ${i + 1}</summary>
${renderBars(
  Object.fromEntries(level.labels.map((lab, k) => [lab, level.weights[k] ?? 0])),
  [...level.labels].sort(
    (a, b) =>
      (level.weights[level.labels.indexOf(b)] ?? 0) -
      (level.weights[level.labels.indexOf(a)] ?? 0),
  ),
)}
</details>`,
    )
    .join("\n");
}

export function renderModeToggle(active: "distributive" | "ideal"): string {
  const btn = (mode: "distributive" | "ideal") =>
    `<button class="mode-btn${mode === active ? " active" : ""}" data-mode="${mode}"${mode === active ? " disabled" : ""}>${mode}</button>`;
  return `<div class="mode-toggle">${btn("distributive")}${btn("ideal")}</div>`;
}

export function renderResults(snapshot: Snapshot, previewNote?: string): string {
  const note = previewNote
    ? `<p class="preview-note">${escapeHtml(previewNote)}</p>`
    : "";
  const pending = pendingBadges(snapshot);
  if (snapshot.kind === "hierarchy") {
    if (!snapshot.global) {
      return `${renderModeToggle(snapshot.mode)}${note}<p class="progress">no ranking yet</p>${pending}`;
    }
    return `${renderModeToggle(snapshot.mode)}${note}
<div class="final-bars">
${renderBars(snapshot.global.final, snapshot.global.ranking)}
</div>
${perLevel(snapshot)}
${pending}`;
  }
  if (!snapshot.limit) {
    return `${note}<p class="progress">no ranking yet</p>${pending}`;
  }
  const agree = snapshot.limit.columns_agree
    ? ""
    : `<p class="warn">limit columns disagree; per-column readings differ</p>`;
  return `${note}
<p class="limit-note">limit method: ${snapshot.limit.method} (${snapshot.limit.steps} steps)</p>
${agree}
<div class="final-bars">
${renderBars(snapshot.limit.priorities, snapshot.limit.ranking)}
</div>
${pending}`;
}

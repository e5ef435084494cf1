// Judgment elicitation: walk the incomplete pairs context by context,
// show entered judgments with their exact reciprocals, and keep the
// consistency gauge in the decision maker's face while they type.

import { escapeHtml, formatCr, formatJudgment } from "./format.js";
import { PALETTE } from "./palette.js";
import type { ContextResult, Snapshot } from "./types.js";

export interface JudgmentPrompt {
  contextId: string;
  pair: [string, string];
  currentValue: number | null;
}

/** Every unanswered pair, in the service's canonical context order. */
export function promptQueue(snapshot: Snapshot): JudgmentPrompt[] {
  const queue: JudgmentPrompt[] = [];
  for (const [contextId, ctx] of Object.entries(snapshot.contexts)) {
    for (const pair of ctx.missing_pairs) {
      queue.push({ contextId, pair, currentValue: null });
    }
  }
  return queue;
}

export function nextPrompt(snapshot: Snapshot): JudgmentPrompt | null {
  const queue = promptQueue(snapshot);
  return queue.length ? queue[0]! : null;
}

function gaugeState(ctx: ContextResult): "green" | "amber" | "red" | "idle" {
  if (!ctx.complete || !ctx.consistency) return "idle";
  if (ctx.consistency.cr_exceeds_threshold) return "red";
  if (ctx.consistency.consistent) return "green";
  return "amber";
}

export function renderGauge(ctx: ContextResult): string {
  const c = ctx.consistency;
  if (!ctx.complete || !c) {
    const left = ctx.required - ctx.provided;
    return `<span class="gauge gauge-idle">${left} judgment${left === 1 ? "" : "s"} to go</span>`;
  }
  const state = gaugeState(ctx);
  let note = `CR ${formatCr(c.cr)}`;
  if (state === "red" && c.suggestion) {
    const [i, j] = c.suggestion.pair;
    const direction =
      c.suggestion.consistent_value < c.suggestion.current ? "lower" : "raise";
    note += ` — ${direction} ${escapeHtml(i)} vs ${escapeHtml(j)} toward ${formatJudgment(
      c.suggestion.consistent_value,
    )}`;
  }
  return `<span class="gauge gauge-${state}">${note}</span>`;
}

function isWorst(ctx: ContextResult, pair: [string, string]): boolean {
  const worst = ctx.consistency?.cr_exceeds_threshold
    ? ctx.consistency.worst_entry
    : null;
  if (!worst) return false;
  const [a, b] = pair;
  return (worst[0] === a && worst[1] === b) || (worst[0] === b && worst[1] === a);
}

function judgmentRows(ctx: ContextResult): string {
  if (!ctx.judgments.length) {
    return `<tr><td colspan="3" class="empty">no judgments yet</td></tr>`;
  }
  return ctx.judgments
    .map((j) => {
      const flag = isWorst(ctx, j.pair) ? ' class="worst"' : "";
      return `<tr${flag} data-pair="${escapeHtml(j.pair[0])}|${escapeHtml(j.pair[1])}">
  <td>${escapeHtml(j.pair[0])} : ${escapeHtml(j.pair[1])}</td>
  <td class="num">${formatJudgment(j.value)}</td>
  <td class="num reciprocal" title="implied ${escapeHtml(j.pair[1])} : ${escapeHtml(j.pair[0])}">${formatJudgment(j.reciprocal)}</td>
</tr>`;
    })
    .join("\n");
}

function paletteOptions(): string {
  return PALETTE.map(
    (p) => `<option value="${p.value}">${p.label}</option>`,
  ).join("");
}

function promptForm(contextId: string, prompt: JudgmentPrompt, disabled: boolean): string {
  const [left, right] = prompt.pair;
  const off = disabled ? " disabled" : "";
  return `<form class="judgment-form" data-context="${escapeHtml(contextId)}" data-left="${escapeHtml(left)}" data-right="${escapeHtml(right)}">
  <label>How strongly does <b>${escapeHtml(left)}</b> outweigh <b>${escapeHtml(right)}</b>?</label>
  <select name="palette"${off}><option value="">palette…</option>${paletteOptions()}</select>
  <input name="free" type="text" inputmode="decimal" placeholder="or any positive value, e.g. 5 or 1/5"${off}>
  <button type="submit"${off}>Save</button>
</form>`;
}

export function renderContext(
  contextId: string,
  ctx: ContextResult,
  pending: boolean,
): string {
  const prompt = ctx.missing_pairs.length
    ? {
        contextId,
        pair: ctx.missing_pairs[0] as [string, string],
        currentValue: null,
      }
    : null;
  const homogeneity = ctx.homogeneity_violations.length
    ? `<p class="warn">outside the comparison bound: ${ctx.homogeneity_violations
        .map(([a, b]) => `${escapeHtml(a)} vs ${escapeHtml(b)}`)
        .join(", ")}</p>`
    : "";
  const errorNote = ctx.error ? `<p class="warn">${escapeHtml(ctx.error)}</p>` : "";
  return `<section class="context-card" data-context="${escapeHtml(contextId)}">
<header><h3>${escapeHtml(contextId)}</h3>${renderGauge(ctx)}</header>
<table class="judgments">
<thead><tr><th>pair</th><th>value</th><th>reciprocal</th></tr></thead>
<tbody>
${judgmentRows(ctx)}
</tbody>
</table>
${homogeneity}${errorNote}
${prompt ? promptForm(contextId, prompt, pending) : '<p class="done">context complete</p>'}
</section>`;
}

export function renderElicit(
  snapshot: Snapshot,
  isPending: (contextId: string) => boolean,
): string {
  const cards = Object.entries(snapshot.contexts)
    .map(([id, ctx]) => renderContext(id, ctx, isPending(id)))
    .join("\n");
  const open = promptQueue(snapshot).length;
  const banner = open
    ? `<p class="progress">${open} pair${open === 1 ? "" : "s"} left to judge</p>`
    : `<p class="progress all-done">all contexts complete</p>`;
  return banner + cards;
}

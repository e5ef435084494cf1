// Entry point: create or resume a session, then keep the three panels
// (elicit, results, what-if) rendered from the latest snapshot. All
// numbers shown come from service responses; this file only routes.

import { ApiError, createSession, getSnapshot, putJudgment, whatIf } from "./api.js";
import { renderElicit } from "./elicit.js";
import { escapeHtml } from "./format.js";
import { parseJudgmentInput } from "./palette.js";
import { renderResults } from "./results.js";
import { SessionState } from "./state.js";
import type { Snapshot, WhatIfAction } from "./types.js";
import { renderComparison, renderWhatIfForms } from "./whatif.js";

const DEMO_MODEL = {
  format_version: 1,
  kind: "hierarchy",
  nodes: [
    { id: "goal", kind: "goal", level: 1 },
    { id: "cost", kind: "criterion", level: 2 },
    { id: "quality", kind: "criterion", level: 2 },
    { id: "apple", kind: "alternative", level: 3 },
    { id: "banana", kind: "alternative", level: 3 },
  ],
  edges: [
    ["goal", "cost"],
    ["goal", "quality"],
    ["cost", "apple"],
    ["cost", "banana"],
    ["quality", "apple"],
    ["quality", "banana"],
  ],
};

let state: SessionState | null = null;

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function showError(err: unknown): void {
  const box = el<HTMLElement>("error-box");
  if (err instanceof ApiError) {
    const extra = err.problems.length
      ? `<ul>${err.problems.map((p) => `<li>${escapeHtml(p)}</li>`).join("")}</ul>`
      : err.issues.length
        ? `<ul>${err.issues.map((i) => `<li>${escapeHtml(i.code)}: ${escapeHtml(i.message)}</li>`).join("")}</ul>`
        : "";
    box.innerHTML = `<p>${escapeHtml(err.message)}</p>${extra}`;
  } else {
    box.textContent = err instanceof Error ? err.message : String(err);
  }
  box.hidden = false;
}

function clearError(): void {
  const box = el<HTMLElement>("error-box");
  box.hidden = true;
  box.innerHTML = "";
}

function render(snapshot: Snapshot): void {
  el("session-meta").textContent =
    `session ${state!.sessionId} · revision ${snapshot.revision} · ${snapshot.kind} · ${snapshot.mode}`;
  el("elicit-panel").innerHTML = renderElicit(snapshot, (ctx) =>
    state!.isPending(ctx),
  );
  el("results-panel").innerHTML = renderResults(snapshot);
  el("whatif-forms").innerHTML = renderWhatIfForms(snapshot);
  if (!snapshot.validation.ok) {
    const issues = snapshot.validation.issues
      .map((i) => `<li>[${i.severity}] ${escapeHtml(i.code)}: ${escapeHtml(i.message)}</li>`)
      .join("");
    el("validation-box").innerHTML = `<ul>${issues}</ul>`;
    el("validation-box").hidden = false;
  } else {
    el("validation-box").hidden = true;
  }
}

async function adoptSession(id: string, snapshot: Snapshot): Promise<void> {
  state = new SessionState(id);
  state.subscribe(render);
  state.accept(snapshot);
  el("setup").hidden = true;
  el("workspace").hidden = false;
  window.location.hash = `s=${id}`;
}

async function boot(): Promise<void> {
  const match = window.location.hash.match(/s=([A-Za-z0-9]+)/);
  if (match) {
    try {
      const snapshot = await getSnapshot(match[1]!);
      await adoptSession(match[1]!, snapshot);
      return;
    } catch {
      window.location.hash = "";
    }
  }
  el("setup").hidden = false;
}

async function onCreate(documentText: string): Promise<void> {
  clearError();
  let doc: unknown;
  try {
    doc = JSON.parse(documentText);
  } catch (err) {
    showError(new Error(`not valid JSON: ${err}`));
    return;
  }
  try {
    const handle = await createSession(doc);
    await adoptSession(handle.id, handle.snapshot);
  } catch (err) {
    showError(err);
  }
}

async function onJudgmentSubmit(form: HTMLFormElement): Promise<void> {
  if (!state) return;
  const contextId = form.dataset.context!;
  if (state.isPending(contextId)) return;
  const left = form.dataset.left!;
  const right = form.dataset.right!;
  const free = (form.elements.namedItem("free") as HTMLInputElement).value;
  const palette = (form.elements.namedItem("palette") as HTMLSelectElement).value;
  const value = parseJudgmentInput(free || palette);
  if (value === null) {
    showError(new Error("enter a positive value (like 5 or 1/5)"));
    return;
  }
  clearError();
  state.markPending(contextId);
  render(state.current()!);
  try {
    const snapshot = await putJudgment(state.sessionId, contextId, [left, right], value);
    state.clearPending(contextId);
    state.accept(snapshot);
  } catch (err) {
    state.clearPending(contextId);
    render(state.current()!);
    showError(err);
  }
}

async function runWhatIf(action: WhatIfAction): Promise<void> {
  if (!state) return;
  clearError();
  try {
    const response = await whatIf(state.sessionId, action);
    el("whatif-result").innerHTML = renderComparison(state.current()!, response);
  } catch (err) {
    showError(err);
  }
}

function wire(): void {
  el<HTMLButtonElement>("load-demo").addEventListener("click", () => {
    el<HTMLTextAreaElement>("model-input").value = JSON.stringify(DEMO_MODEL, null, 2);
  });
  el<HTMLFormElement>("create-form").addEventListener("submit", (ev) => {
    ev.preventDefault();
    void onCreate(el<HTMLTextAreaElement>("model-input").value);
  });
  el("elicit-panel").addEventListener("submit", (ev) => {
    const form = ev.target as HTMLFormElement;
    if (form.classList.contains("judgment-form")) {
      ev.preventDefault();
      void onJudgmentSubmit(form);
    }
  });
  el("results-panel").addEventListener("click", (ev) => {
    const btn = ev.target as HTMLElement;
    if (btn.classList.contains("mode-btn") && state) {
      const mode = btn.dataset.mode as "distributive" | "ideal";
      void (async () => {
        try {
          const response = await whatIf(state!.sessionId, { action: "set_mode", mode });
          el("results-panel").innerHTML = renderResults(
            response.snapshot,
            `previewing ${mode} mode (not saved)`,
          );
        } catch (err) {
          showError(err);
        }
      })();
    }
  });
  el("whatif-forms").addEventListener("submit", (ev) => {
    const form = ev.target as HTMLFormElement;
    ev.preventDefault();
    if (form.id === "whatif-add") {
      const id = (form.elements.namedItem("id") as HTMLInputElement).value.trim();
      const parents = Array.from(
        form.querySelectorAll<HTMLInputElement>('input[name="parent"]:checked'),
      ).map((box) => box.value);
      void runWhatIf({ action: "add_alternative", id, parents });
    } else if (form.id === "whatif-remove") {
      const id = (form.elements.namedItem("id") as HTMLSelectElement).value;
      void runWhatIf({ action: "remove_alternative", id });
    }
  });
  el<HTMLButtonElement>("refresh").addEventListener("click", () => {
    if (!state) return;
    void getSnapshot(state.sessionId).then(
      (snapshot) => state!.accept(snapshot),
      showError,
    );
  });
}

if (typeof document !== "undefined" && document.getElementById("setup")) {
  wire();
  void boot();
}

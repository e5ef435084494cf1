// Thin fetch wrappers over the session service. Every helper throws
// ApiError on non-2xx responses, carrying whatever structured detail
// the service returned so views can surface it inline.

import type {
  SessionHandle,
  Snapshot,
  WhatIfAction,
  WhatIfResponse,
} from "./types.js";

export class ApiError extends Error {
  status: number;
  problems: string[];
  issues: { code: string; message: string }[];

  constructor(status: number, body: Record<string, unknown>) {
    const detail =
      typeof body.detail === "string" ? body.detail : `request failed (${status})`;
    super(detail);
    this.status = status;
    this.problems = Array.isArray(body.problems) ? (body.problems as string[]) : [];
    this.issues = Array.isArray(body.issues)
      ? (body.issues as { code: string; message: string }[])
      : [];
  }
}

let base = "";

/** Point the client at a different service origin (tests, dev server). */
export function setBaseUrl(url: string): void {
  base = url.replace(/\/$/, "");
}

async function request<T>(path: string, init?: RequestInit): Promise<T> {
  const res = await fetch(base + path, {
    headers: { "Content-Type": "application/json" },
    ...init,
  });
  if (!res.ok) {
    const body = await res.json().catch(() => ({}));
    throw new ApiError(res.status, body as Record<string, unknown>);
  }
  return (await res.json()) as T;
}

export function createSession(document: unknown): Promise<SessionHandle> {
  return request<SessionHandle>("/sessions", {
    method: "POST",
    body: JSON.stringify(document),
  });
}

export function getSnapshot(sessionId: string): Promise<Snapshot> {
  return request<Snapshot>(`/sessions/${encodeURIComponent(sessionId)}`);
}

export function putJudgment(
  sessionId: string,
  contextId: string,
  pair: [string, string],
  value: number,
): Promise<Snapshot> {
  return request<Snapshot>(
    `/sessions/${encodeURIComponent(sessionId)}/judgments/${encodeURIComponent(contextId)}`,
    { method: "PUT", body: JSON.stringify({ pair, value }) },
  );
}

export function whatIf(
  sessionId: string,
  action: WhatIfAction,
): Promise<WhatIfResponse> {
  return request<WhatIfResponse>(
    `/sessions/${encodeURIComponent(sessionId)}/what-if`,
    { method: "POST", body: JSON.stringify(action) },
  );
}

export function exportModel(sessionId: string): Promise<unknown> {
  return request<unknown>(`/sessions/${encodeURIComponent(sessionId)}/export`);
}

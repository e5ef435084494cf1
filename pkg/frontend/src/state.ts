// Client-side session state. The only rule that matters: renders derive
// from the highest snapshot revision seen, and late responses for older
// revisions are dropped on the floor (the stale-revision guard).

import type { Snapshot } from "./types.js";

export type Listener = (snapshot: Snapshot) => void;

export class SessionState {
  readonly sessionId: string;
  private snapshot: Snapshot | null = null;
  private listeners: Listener[] = [];
  // contexts with a PUT in flight; submissions there are disabled until
  // the snapshot comes back
  private pending = new Set<string>();

  constructor(sessionId: string) {
    this.sessionId = sessionId;
  }

  current(): Snapshot | null {
    return this.snapshot;
  }

  revision(): number {
    return this.snapshot ? this.snapshot.revision : -1;
  }

  /**
   * Adopt a snapshot unless a newer revision already arrived.
   * Returns true when adopted, false when discarded as stale.
   */
  accept(snapshot: Snapshot): boolean {
    if (this.snapshot && snapshot.revision < this.snapshot.revision) {
      return false;
    }
    this.snapshot = snapshot;
    for (const fn of this.listeners) fn(snapshot);
    return true;
  }

  subscribe(fn: Listener): () => void {
    this.listeners.push(fn);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== fn);
    };
  }

  markPending(contextId: string): void {
    this.pending.add(contextId);
  }

  clearPending(contextId: string): void {
    this.pending.delete(contextId);
  }

  isPending(contextId: string): boolean {
    return this.pending.has(contextId);
  }
}

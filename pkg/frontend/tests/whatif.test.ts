import { describe, expect, it } from "vitest";

import type { WhatIfResponse } from "../src/types.js";
import { alternatives, leafParents, renderComparison, renderWhatIfForms } from "../src/whatif.js";
import { networkSnapshot, workedSnapshot } from "./fixtures.js";

function response(overrides: Partial<WhatIfResponse["rank_changes"]> = {}): WhatIfResponse {
  return {
    action: "add_alternative",
    snapshot: workedSnapshot(),
    rank_changes: { comparable: true, changed: false, reversed_pairs: [], ...overrides },
  };
}

describe("alternatives / leafParents", () => {
  it("lists ranked alternatives sorted", () => {
    expect(alternatives(workedSnapshot())).toEqual(["a1", "a2"]);
    expect(alternatives(networkSnapshot())).toEqual(["a1", "a2"]);
  });

  it("finds the contexts that rank leaves", () => {
    expect(leafParents(workedSnapshot())).toEqual(["c1", "c2"]);
  });
});

describe("renderWhatIfForms", () => {
  it("offers add and remove forms wired to the current model", () => {
    const html = renderWhatIfForms(workedSnapshot());
    expect(html).toContain('id="whatif-add"');
    expect(html).toContain('id="whatif-remove"');
    expect(html).toContain('value="c1" checked');
    expect(html).toContain('value="c2" checked');
    expect(html).toContain('<option value="a1">');
    expect(html).toContain('<option value="a2">');
  });
});

describe("renderComparison", () => {
  it("flags a rank reversal with the flipped pair", () => {
    const html = renderComparison(
      workedSnapshot(),
      response({ reversed_pairs: [["a1", "a2"]] }),
    );
    expect(html).toContain("reversal");
    expect(html).toContain("a1 ↔ a2");
  });

  it("reports unchanged order", () => {
    const html = renderComparison(workedSnapshot(), response());
    expect(html).toContain("unchanged");
    expect(html).not.toContain("reversal:");
  });

  it("reports a change that is not a strict flip", () => {
    const html = renderComparison(workedSnapshot(), response({ changed: true }));
    expect(html).toContain("order changed among originals");
  });

  it("says so when the hypothetical ranking is incomplete", () => {
    const html = renderComparison(
      workedSnapshot(),
      response({ comparable: false, changed: null }),
    );
    expect(html).toContain("nothing to compare");
  });

  it("shows both rankings side by side", () => {
    const html = renderComparison(workedSnapshot(), response());
    expect(html).toContain("<h4>current</h4>");
    expect(html).toContain("hypothetical (add_alternative)");
    expect(html.match(/<ol class="ranking">/g)).toHaveLength(2);
    expect(html).toContain('data-label="a1"');
  });
});

// Display formatting. Judgment values prefer the fraction form the
// decision maker thinks in: 0.2 renders as "1/5", not "0.200".

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

/**
 * Render a judgment value. Values at or above 1 print plainly; values
 * below 1 whose reciprocal is (nearly) a whole number print as "1/k",
 * so entering 5 for (i, j) shows exactly "1/5" opposite.
 */
export function formatJudgment(value: number): string {
  if (!Number.isFinite(value) || value <= 0) return String(value);
  if (value >= 1) {
    return Number.isInteger(value) ? String(value) : trim(value);
  }
  const inverse = 1 / value;
  const rounded = Math.round(inverse);
  if (Math.abs(inverse - rounded) < 1e-9) return `1/${rounded}`;
  return trim(value);
}

/** Priorities shown with three significant digits, bars full precision. */
export function formatWeight(value: number): string {
  return trim(Number(value.toPrecision(3)));
}

export function formatCr(value: number): string {
  return trim(Number(value.toPrecision(2)));
}

function trim(value: number): string {
  const text = String(value);
  // avoid exponent notation for the magnitudes a judgment UI sees
  if (text.includes("e")) return value.toFixed(6).replace(/0+$/, "").replace(/\.$/, "");
  return text;
}

// The judgment palette: the classic 1..9 intensity scale and its
// reciprocals. Free-entry positive values are equally valid; the
// palette is a convenience, not a constraint.

export interface PaletteChoice {
  value: number;
  label: string;
}

const INTENSITIES = [1, 2, 3, 4, 5, 6, 7, 8, 9];

export const PALETTE: PaletteChoice[] = [
  ...INTENSITIES.slice(1)
    .reverse()
    .map((k) => ({ value: 1 / k, label: `1/${k}` })),
  ...INTENSITIES.map((k) => ({ value: k, label: String(k) })),
];

/** Parse a palette label or free-entry text ("5", "1/5", "2.5"). */
export function parseJudgmentInput(text: string): number | null {
  const trimmed = text.trim();
  if (!trimmed) return null;
  const frac = trimmed.match(/^(\d+(?:\.\d+)?)\s*\/\s*(\d+(?:\.\d+)?)$/);
  if (frac) {
    const num = Number(frac[1]);
    const den = Number(frac[2]);
    if (den > 0 && num > 0) return num / den;
    return null;
  }
  const value = Number(trimmed);
  return Number.isFinite(value) && value > 0 ? value : null;
}

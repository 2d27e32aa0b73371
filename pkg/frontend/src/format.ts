// Small presentation helpers. Formatting only; no derived analytics.

export function pct(fraction: number): string {
  const value = fraction * 100;
  const rounded = Math.round(value * 10) / 10;
  return `${Number.isInteger(rounded) ? rounded.toFixed(0) : rounded.toFixed(1)}%`;
}

export function fmtDate(iso: string): string {
  const date = new Date(iso);
  if (Number.isNaN(date.getTime())) return iso;
  return date.toISOString().slice(0, 10);
}

/** "very_likely" -> "very likely" for display. */
export function prettyLabel(label: string): string {
  return label.replace(/_/g, ' ');
}

export function signed(value: number): string {
  const fixed = value.toFixed(2);
  return value > 0 ? `+${fixed}` : fixed;
}

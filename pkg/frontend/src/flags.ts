// An article gets a propaganda flag exactly when its label is one of
// these two buckets. The three lower buckets and unanalyzed articles
// (label null) never show a flag.
export const FLAGGED_LABELS: ReadonlySet<string> = new Set(['likely', 'very_likely']);

export function showsPropagandaFlag(label: string | null): boolean {
  return label !== null && FLAGGED_LABELS.has(label);
}

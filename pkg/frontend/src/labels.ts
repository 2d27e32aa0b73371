import type { PropagandaLabel, StanceLabel } from './types.js';

// Canonical display order for the fixed label sets.
export const PROPAGANDA_ORDER: readonly PropagandaLabel[] = [
  'very_unlikely',
  'unlikely',
  'somehow',
  'likely',
  'very_likely',
];

export const STANCE_ORDER: readonly StanceLabel[] = [
  'agree',
  'disagree',
  'discuss',
  'unrelated',
];

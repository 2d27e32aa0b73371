/**
 * Dependency-free bar charts built from plain divs.
 *
 * Bar widths are scaled against the largest value in the series so the
 * longest bar always fills the track; the numbers shown next to the
 * bars are the response values themselves, untouched.
 */

import { el, link } from './dom.js';
import { pct } from './format.js';

export interface BarDatum {
  label: string;
  value: number;
  display?: string;
  href?: string;
}

export function barChart(
  data: BarDatum[],
  format: (value: number) => string = (v) => String(v),
): HTMLElement {
  const chart = el('div', 'chart');
  const max = Math.max(...data.map((d) => d.value), 0);
  for (const datum of data) {
    const row = el('div', 'chart-row');
    const label = datum.href
      ? link(datum.href, datum.label, 'chart-label')
      : el('span', 'chart-label', datum.label);
    const track = el('div', 'chart-track');
    const fill = el('div', 'chart-fill');
    const share = max > 0 ? (datum.value / max) * 100 : 0;
    fill.style.width = `${share}%`;
    track.append(fill);
    row.append(label, track, el('span', 'chart-value', datum.display ?? format(datum.value)));
    chart.append(row);
  }
  return chart;
}

/** Bar chart over a {label: fraction} distribution, shown as percentages. */
export function distributionChart(
  dist: Record<string, number>,
  order: readonly string[] | null = null,
  labelText: (label: string) => string = (l) => l,
): HTMLElement {
  const labels = order ? [...order] : Object.keys(dist).sort((a, b) => (dist[b] ?? 0) - (dist[a] ?? 0));
  const data = labels
    .filter((label) => label in dist)
    .map((label) => ({ label: labelText(label), value: dist[label] }));
  return barChart(data, pct);
}

/**
 * Diverging bar for a score in [-1, 1]: fills left of center for
 * negative values, right for positive. Deliberately position-based so
 * the political left stays on the visual left under RTL layout too.
 */
export function divergingBar(score: number): HTMLElement {
  const track = el('div', 'diverge-track');
  const fill = el('div', 'diverge-fill');
  const half = Math.min(Math.abs(score), 1) * 50;
  if (score >= 0) {
    fill.style.left = '50%';
  } else {
    fill.style.left = `${50 - half}%`;
  }
  fill.style.width = `${half}%`;
  track.append(el('div', 'diverge-center'), fill);
  return track;
}

/** Single 100% stacked bar for a small distribution, with a legend. */
export function stackedBar(
  dist: Record<string, number>,
  order: readonly string[],
): HTMLElement {
  const wrapper = el('div', 'stacked');
  const bar = el('div', 'stacked-bar');
  const legend = el('div', 'stacked-legend');
  for (const label of order) {
    const value = dist[label] ?? 0;
    if (value <= 0) continue;
    const segment = el('div', `stacked-segment seg-${label}`);
    segment.style.width = `${value * 100}%`;
    segment.title = `${label} ${pct(value)}`;
    bar.append(segment);
    legend.append(el('span', `legend-item seg-${label}`, `${label} ${pct(value)}`));
  }
  wrapper.append(bar, legend);
  return wrapper;
}

/**
 * Topic page: coverage by country and by medium, with propaganda
 * weight, plus the stories under the topic. Absolute and ratio views
 * sit side by side and both read straight from response fields.
 */

import { barChart, distributionChart } from '../charts.js';
import { el, noData, section } from '../dom.js';
import { pct, prettyLabel } from '../format.js';
import { PROPAGANDA_ORDER } from '../labels.js';
import type { TopicPage } from '../types.js';
import { renderStoryCard, type CardSelections } from './card.js';

function pair(left: [string, HTMLElement], right: [string, HTMLElement]): HTMLElement {
  const row = el('div', 'chart-pair');
  for (const [caption, chart] of [left, right]) {
    const cell = el('div', 'chart-cell');
    cell.append(el('h4', '', caption), chart);
    row.append(cell);
  }
  return row;
}

export function renderTopic(topic: TopicPage, selections: CardSelections): HTMLElement {
  const view = el('div', 'view view-topic');
  view.append(el('h1', '', topic.title));
  view.append(
    el(
      'p',
      'profile-subtitle',
      `${topic.total_articles} articles · ${topic.total_propagandistic} flagged as propaganda`,
    ),
  );

  const countries = Object.entries(topic.countries);
  countries.sort((a, b) => b[1] - a[1] || a[0].localeCompare(b[0]));
  if (countries.length) {
    const absolute = barChart(
      countries.map(([country, count]) => ({ label: country, value: count })),
    );
    const ratio = barChart(
      countries.map(([country]) => ({
        label: country,
        value: topic.country_ratio[country] ?? 0,
        display: pct(topic.country_ratio[country] ?? 0),
      })),
    );
    view.append(section('Coverage by country', pair(['articles', absolute], ['share', ratio])));
  } else {
    view.append(section('Coverage by country', noData()));
  }

  if (topic.media.length) {
    const absolute = barChart(
      topic.media.map((row) => ({
        label: row.name,
        value: row.propagandistic_articles,
        href: `#/media/${encodeURIComponent(row.medium_id)}`,
      })),
    );
    const ratio = barChart(
      topic.media.map((row) => ({
        label: row.name,
        value: row.ratio,
        display: pct(row.ratio),
        href: `#/media/${encodeURIComponent(row.medium_id)}`,
      })),
    );
    view.append(
      section(
        'Most propagandistic media',
        pair(['propagandistic articles', absolute], ['share of their coverage', ratio]),
      ),
    );
  } else {
    view.append(section('Most propagandistic media', noData()));
  }

  view.append(
    section(
      'Propaganda across the topic',
      distributionChart(topic.propaganda_distribution, PROPAGANDA_ORDER, prettyLabel),
    ),
  );

  const stories = el('div', 'story-list');
  for (const story of topic.recent_stories) {
    stories.append(renderStoryCard(story, selections));
  }
  view.append(section('Recent stories', topic.recent_stories.length ? stories : noData()));

  return view;
}

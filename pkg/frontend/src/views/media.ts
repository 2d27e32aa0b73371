/**
 * Media profile page: who the outlet is plus every aggregate the API
 * computed for it. Optional fields (factuality, bias, audience) come
 * from operator-provided data and are often absent; each renders as a
 * "no data" placeholder instead of being dropped.
 */

import { barChart, distributionChart, divergingBar, stackedBar } from '../charts.js';
import { el, link, noData, section } from '../dom.js';
import { showsPropagandaFlag } from '../flags.js';
import { fmtDate, pct, prettyLabel, signed } from '../format.js';
import { PROPAGANDA_ORDER, STANCE_ORDER } from '../labels.js';
import type { ArticleSummary, MediaProfile } from '../types.js';

function articleRow(article: ArticleSummary): HTMLElement {
  const row = el('li', 'article-row');
  if (showsPropagandaFlag(article.propaganda_label)) {
    row.append(el('span', 'propaganda-flag', 'propaganda'));
  }
  row.append(
    el('span', 'article-title', article.title),
    el('span', 'card-date', fmtDate(article.published_at)),
  );
  return row;
}

function factRow(term: string, value: HTMLElement | string): HTMLElement {
  const row = el('div', 'fact-row');
  row.append(el('span', 'fact-term', term));
  if (typeof value === 'string') {
    row.append(el('span', 'fact-value', value));
  } else {
    row.append(value);
  }
  return row;
}

export function renderMediaProfile(profile: MediaProfile): HTMLElement {
  const view = el('div', 'view view-media');
  const medium = profile.medium;

  const header = el('header', 'profile-header');
  if (medium.logo_url) {
    const logo = el('img', 'profile-logo');
    logo.src = medium.logo_url;
    logo.alt = '';
    header.append(logo);
  }
  header.append(el('h1', '', medium.name));
  const subtitle = [medium.country, `${profile.article_count} articles`]
    .filter(Boolean)
    .join(' · ');
  header.append(el('p', 'profile-subtitle', subtitle));
  view.append(header);

  const facts = el('div', 'facts');
  facts.append(
    factRow('factuality', profile.factuality ?? 'no data'),
    factRow('bias', profile.bias ? prettyLabel(profile.bias) : 'no data'),
    factRow(
      'hyper-partisanship',
      profile.hyper_partisanship === null ? 'no data' : pct(profile.hyper_partisanship),
    ),
  );
  view.append(section('Source ratings', facts));

  view.append(
    section(
      'Propaganda',
      distributionChart(profile.propaganda_distribution, PROPAGANDA_ORDER, prettyLabel),
    ),
  );

  const frames = Object.fromEntries(
    Object.entries(profile.frame_distribution).filter(([, v]) => v > 0),
  );
  view.append(
    section(
      'Framing',
      Object.keys(frames).length
        ? distributionChart(frames, null, prettyLabel)
        : noData(),
    ),
  );

  const stanceClaims = Object.entries(profile.stance_by_claim);
  const stances = el('div', 'stance-list');
  for (const [claimId, claim] of stanceClaims) {
    const block = el('div', 'stance-block');
    block.append(
      el('h4', 'stance-claim', claimId),
      stackedBar(claim.distribution, STANCE_ORDER),
      el(
        'p',
        'stance-meta',
        `coverage ${pct(claim.coverage)} · ${claim.related_articles} related`,
      ),
    );
    stances.append(block);
  }
  view.append(section('Stance on claims', stanceClaims.length ? stances : noData()));

  const valences = el('div', 'valence-list');
  for (const valence of profile.valences) {
    const row = el('div', 'valence-row');
    row.append(
      link(`#/topic/${encodeURIComponent(valence.topic_id)}`, valence.topic_id, 'valence-topic'),
      divergingBar(valence.score),
      el('span', 'valence-score', `${signed(valence.score)} (${prettyLabel(valence.label)})`),
    );
    valences.append(row);
  }
  view.append(section('Audience valence by topic', profile.valences.length ? valences : noData()));

  view.append(
    section(
      'Audience',
      medium.audience ? barChart(
        Object.entries(medium.audience).map(([label, value]) => ({
          label,
          value,
          display: pct(value),
        })),
      ) : noData(),
    ),
  );

  const recent = el('ul', 'article-list');
  for (const article of profile.recent_articles) {
    recent.append(articleRow(article));
  }
  view.append(section('Recent articles', profile.recent_articles.length ? recent : noData()));

  return view;
}

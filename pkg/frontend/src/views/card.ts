/**
 * A story card on the feed.
 *
 * The card shows one member article at a time; the arrows under the
 * title cycle through the story's articles. All members arrive with
 * the story payload, so cycling is a pure DOM update and never hits
 * the network. With a single article both arrows are disabled.
 */

import { showsPropagandaFlag } from '../flags.js';
import { fmtDate, prettyLabel } from '../format.js';
import { el, link } from '../dom.js';
import type { StoryCard } from '../types.js';

export interface CardSelections {
  get(storyId: string): number | undefined;
  set(storyId: string, index: number): void;
}

export function renderStoryCard(story: StoryCard, selections: CardSelections): HTMLElement {
  const count = story.articles.length;
  const card = el('article', 'story-card');
  card.dataset.storyId = story.story_id;

  const title = el('h2', 'card-title');
  const meta = el('p', 'card-meta');
  const flag = el('span', 'propaganda-flag', 'propaganda');

  const prev = el('button', 'arrow arrow-prev', '‹');
  const next = el('button', 'arrow arrow-next', '›');
  prev.type = 'button';
  next.type = 'button';
  const counter = el('span', 'arrow-counter');
  prev.disabled = next.disabled = count <= 1;

  const update = () => {
    const stored = selections.get(story.story_id) ?? 0;
    const index = stored >= 0 && stored < count ? stored : 0;
    const article = story.articles[index];
    title.replaceChildren(
      link(`#/topic/${encodeURIComponent(story.story_id)}`, article.title),
    );
    meta.replaceChildren(
      link(`#/media/${encodeURIComponent(article.medium.id)}`, article.medium.name, 'card-medium'),
      el('span', 'card-date', fmtDate(article.published_at)),
      el('span', 'card-lang', article.language),
    );
    if (showsPropagandaFlag(article.propaganda_label)) {
      flag.title = prettyLabel(article.propaganda_label as string);
      flag.hidden = false;
    } else {
      flag.hidden = true;
    }
    counter.textContent = `${index + 1} / ${count}`;
  };

  const step = (delta: number) => {
    const current = selections.get(story.story_id) ?? 0;
    selections.set(story.story_id, (current + delta + count) % count);
    update();
  };
  prev.addEventListener('click', () => step(-1));
  next.addEventListener('click', () => step(1));

  const nav = el('div', 'card-nav');
  nav.append(prev, counter, next);
  card.append(flag, title, meta, nav);
  update();
  return card;
}

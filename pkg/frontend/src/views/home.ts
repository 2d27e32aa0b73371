import { el } from '../dom.js';
import { formatHash } from '../state.js';
import type { StoriesPage } from '../types.js';
import { renderStoryCard, type CardSelections } from './card.js';

export function renderHome(page: StoriesPage, selections: CardSelections): HTMLElement {
  const view = el('div', 'view view-home');
  view.append(el('h1', '', 'Latest stories'));
  if (page.items.length === 0) {
    view.append(el('p', 'no-data', 'no stories yet'));
    return view;
  }
  const list = el('div', 'story-list');
  for (const story of page.items) {
    list.append(renderStoryCard(story, selections));
  }
  view.append(list);

  const pages = Math.max(1, Math.ceil(page.total / page.page_size));
  if (pages > 1) {
    const pager = el('nav', 'pager');
    if (page.page > 1) {
      const prev = el('a', 'pager-prev', 'newer');
      prev.href = formatHash({ kind: 'home', page: page.page - 1 });
      pager.append(prev);
    }
    pager.append(el('span', 'pager-status', `page ${page.page} of ${pages}`));
    if (page.page < pages) {
      const next = el('a', 'pager-next', 'older');
      next.href = formatHash({ kind: 'home', page: page.page + 1 });
      pager.append(next);
    }
    view.append(pager);
  }
  return view;
}

import { el, link } from '../dom.js';
import type { SearchResults } from '../types.js';

export function renderSearch(q: string, results: SearchResults): HTMLElement {
  const view = el('div', 'view view-search');
  view.append(el('h1', '', `Search: ${q}`));
  view.append(el('p', 'profile-subtitle', `${results.total} results`));
  if (results.items.length === 0) {
    view.append(el('p', 'no-data', 'nothing found'));
    return view;
  }
  const list = el('ul', 'search-list');
  for (const hit of results.items) {
    const row = el('li', 'search-hit');
    const href =
      hit.type === 'media'
        ? `#/media/${encodeURIComponent(hit.id)}`
        : `#/topic/${encodeURIComponent(hit.id)}`;
    row.append(link(href, hit.name, 'search-name'), el('span', 'search-kind', hit.type));
    list.append(row);
  }
  view.append(list);
  return view;
}

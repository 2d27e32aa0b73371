/**
 * View state: hash routes and the persisted language choice.
 *
 * Routes live in the URL hash so the app works as a static page.
 * Anything unparseable falls back to the home feed rather than a
 * client-side error page.
 */

import type { Lang, SearchKind } from './types.js';

export type Route =
  | { kind: 'home'; page: number }
  | { kind: 'media'; id: string }
  | { kind: 'topic'; slug: string }
  | { kind: 'search'; q: string; type: SearchKind };

export function parseHash(raw: string): Route {
  const hash = raw.startsWith('#') ? raw.slice(1) : raw;
  const splitAt = hash.indexOf('?');
  const path = splitAt >= 0 ? hash.slice(0, splitAt) : hash;
  const query = new URLSearchParams(splitAt >= 0 ? hash.slice(splitAt + 1) : '');
  const parts = path.split('/').filter((p) => p.length > 0);

  if (parts.length === 0) {
    const page = Number(query.get('page') ?? '1');
    return { kind: 'home', page: Number.isInteger(page) && page >= 1 ? page : 1 };
  }
  if (parts[0] === 'media' && parts.length === 2) {
    return { kind: 'media', id: decodeURIComponent(parts[1]) };
  }
  if (parts[0] === 'topic' && parts.length === 2) {
    return { kind: 'topic', slug: decodeURIComponent(parts[1]) };
  }
  if (parts[0] === 'search') {
    const q = (query.get('q') ?? '').trim();
    const type = query.get('type') === 'media' ? 'media' : 'topics';
    if (q) return { kind: 'search', q, type };
  }
  return { kind: 'home', page: 1 };
}

export function formatHash(route: Route): string {
  switch (route.kind) {
    case 'home':
      return route.page > 1 ? `#/?page=${route.page}` : '#/';
    case 'media':
      return `#/media/${encodeURIComponent(route.id)}`;
    case 'topic':
      return `#/topic/${encodeURIComponent(route.slug)}`;
    case 'search': {
      const query = new URLSearchParams({ q: route.q, type: route.type });
      return `#/search?${query.toString()}`;
    }
  }
}

const LANG_KEY = 'newsflow.lang';

export function loadLang(storage: Storage | null): Lang {
  const stored = storage?.getItem(LANG_KEY);
  return stored === 'ar' ? 'ar' : 'en';
}

export function saveLang(storage: Storage | null, lang: Lang): void {
  storage?.setItem(LANG_KEY, lang);
}

/**
 * Top-level controller.
 *
 * One route is on screen at a time. Navigation aborts any in-flight
 * request before issuing the next one, so a slow response for a page
 * the reader already left can never clobber the current view. Load
 * failures show a banner whose retry button re-runs the same route.
 */

import { ApiClient, ApiError, isAbortError } from './api.js';
import { el } from './dom.js';
import { formatHash, loadLang, parseHash, saveLang, type Route } from './state.js';
import type { Lang, SearchKind } from './types.js';
import { renderHome } from './views/home.js';
import { renderMediaProfile } from './views/media.js';
import { renderSearch } from './views/search.js';
import { renderTopic } from './views/topic.js';

const PAGE_SIZE = 20;

export interface AppOptions {
  client: ApiClient;
  root: HTMLElement;
  window: Window;
  storage?: Storage | null;
}

export class App {
  private readonly client: ApiClient;
  private readonly win: Window;
  private readonly storage: Storage | null;
  private readonly main: HTMLElement;
  private readonly banner: HTMLElement;
  private readonly bannerMessage: HTMLElement;
  private readonly langButton: HTMLButtonElement;
  private readonly selections = new Map<string, number>();
  private lang: Lang;
  private inflight: AbortController | null = null;
  private current: Route = { kind: 'home', page: 1 };
  private suppressHashEvent = false;

  constructor(options: AppOptions) {
    this.client = options.client;
    this.win = options.window;
    this.storage = options.storage ?? null;
    this.lang = loadLang(this.storage);

    const header = el('header', 'topbar');
    const brand = el('a', 'brand', 'newsflow');
    brand.href = '#/';

    const form = el('form', 'search-form');
    const input = el('input', 'search-input');
    input.name = 'q';
    input.placeholder = 'find media or topics';
    const select = el('select', 'search-type');
    for (const kind of ['media', 'topics'] as const) {
      const option = el('option', '', kind);
      option.value = kind;
      select.append(option);
    }
    const submit = el('button', 'search-submit', 'search');
    submit.type = 'submit';
    form.append(input, select, submit);
    form.addEventListener('submit', (event) => {
      event.preventDefault();
      const q = input.value.trim();
      if (q) {
        this.navigateTo({ kind: 'search', q, type: select.value as SearchKind });
      }
    });

    this.langButton = el('button', 'lang-toggle');
    this.langButton.type = 'button';
    this.langButton.addEventListener('click', () => this.toggleLang());
    header.append(brand, form, this.langButton);

    this.banner = el('div', 'error-banner');
    this.banner.hidden = true;
    this.bannerMessage = el('span', 'error-message');
    const retry = el('button', 'error-retry', 'retry');
    retry.type = 'button';
    retry.addEventListener('click', () => void this.load(this.current));
    this.banner.append(this.bannerMessage, retry);

    this.main = el('main', 'content');
    options.root.replaceChildren(header, this.banner, this.main);
    this.applyLang();
  }

  start(): void {
    this.win.addEventListener('hashchange', () => {
      if (this.suppressHashEvent) {
        this.suppressHashEvent = false;
        return;
      }
      void this.load(parseHash(this.win.location.hash));
    });
    void this.load(parseHash(this.win.location.hash));
  }

  navigateTo(route: Route): void {
    const hash = formatHash(route);
    if (this.win.location.hash !== hash) {
      // The direct load below already covers this navigation; swallow
      // the hashchange the assignment is about to fire.
      this.suppressHashEvent = true;
      this.win.location.hash = hash;
    }
    void this.load(route);
  }

  private toggleLang(): void {
    this.lang = this.lang === 'en' ? 'ar' : 'en';
    saveLang(this.storage, this.lang);
    this.applyLang();
    void this.load(this.current);
  }

  private applyLang(): void {
    const doc = this.win.document.documentElement;
    doc.lang = this.lang;
    doc.dir = this.lang === 'ar' ? 'rtl' : 'ltr';
    this.langButton.textContent = this.lang === 'en' ? 'العربية' : 'English';
  }

  private async load(route: Route): Promise<void> {
    this.current = route;
    this.inflight?.abort();
    const control = new AbortController();
    this.inflight = control;
    this.hideError();
    this.main.replaceChildren(el('p', 'loading', 'loading...'));
    try {
      const view = await this.fetchView(route, control.signal);
      if (control.signal.aborted) return;
      this.main.replaceChildren(view);
    } catch (err) {
      if (control.signal.aborted || isAbortError(err)) return;
      this.showError(describeError(err));
    }
  }

  private fetchView(route: Route, signal: AbortSignal): Promise<HTMLElement> {
    switch (route.kind) {
      case 'home':
        return this.client
          .stories(this.lang, route.page, PAGE_SIZE, signal)
          .then((page) => renderHome(page, this.selections));
      case 'media':
        return this.client.mediaProfile(route.id, signal).then(renderMediaProfile);
      case 'topic':
        return this.client
          .topic(route.slug, signal)
          .then((topic) => renderTopic(topic, this.selections));
      case 'search':
        return this.client
          .search(route.q, route.type, signal)
          .then((results) => renderSearch(route.q, results));
    }
  }

  private showError(message: string): void {
    this.bannerMessage.textContent = message;
    this.banner.hidden = false;
    this.main.replaceChildren();
  }

  private hideError(): void {
    this.banner.hidden = true;
  }
}

function describeError(err: unknown): string {
  if (err instanceof ApiError) {
    return err.code === 'network' ? 'could not reach the server' : err.message;
  }
  return 'something went wrong';
}

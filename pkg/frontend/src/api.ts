/**
 * Typed client for the /v1 API.
 *
 * Every call takes an optional AbortSignal so the app can cancel
 * in-flight requests on navigation. Failures surface as ApiError with
 * the server's error code where one exists; aborts are re-thrown
 * untouched so callers can tell them apart from real failures.
 */

import type {
  ErrorEnvelope,
  Lang,
  MediaProfile,
  SearchKind,
  SearchResults,
  StoriesPage,
  TopicPage,
} from './types.js';

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
    this.name = 'ApiError';
  }
}

export function isAbortError(err: unknown): boolean {
  return (
    typeof err === 'object' &&
    err !== null &&
    (err as { name?: unknown }).name === 'AbortError'
  );
}

export interface ClientOptions {
  baseUrl?: string;
  fetchFn?: typeof fetch;
}

export class ApiClient {
  private readonly baseUrl: string;
  private readonly fetchFn: typeof fetch;

  constructor(options: ClientOptions = {}) {
    this.baseUrl = options.baseUrl ?? '';
    this.fetchFn = options.fetchFn ?? globalThis.fetch.bind(globalThis);
  }

  stories(
    lang: Lang,
    page = 1,
    pageSize = 20,
    signal?: AbortSignal,
  ): Promise<StoriesPage> {
    return this.get<StoriesPage>(
      '/v1/stories',
      { lang, page: String(page), page_size: String(pageSize) },
      signal,
    );
  }

  mediaProfile(mediumId: string, signal?: AbortSignal): Promise<MediaProfile> {
    return this.get<MediaProfile>(
      `/v1/media/${encodeURIComponent(mediumId)}`, {}, signal,
    );
  }

  topic(slug: string, signal?: AbortSignal): Promise<TopicPage> {
    return this.get<TopicPage>(
      `/v1/topics/${encodeURIComponent(slug)}`, {}, signal,
    );
  }

  search(q: string, type: SearchKind, signal?: AbortSignal): Promise<SearchResults> {
    return this.get<SearchResults>('/v1/search', { q, type }, signal);
  }

  private async get<T>(
    path: string,
    params: Record<string, string>,
    signal?: AbortSignal,
  ): Promise<T> {
    const query = new URLSearchParams(params).toString();
    const url = this.baseUrl + path + (query ? `?${query}` : '');
    let response: Response;
    try {
      response = await this.fetchFn(url, { signal });
    } catch (err) {
      if (isAbortError(err)) throw err;
      throw new ApiError(0, 'network', 'could not reach the server');
    }
    if (!response.ok) {
      throw await this.asApiError(response);
    }
    return (await response.json()) as T;
  }

  private async asApiError(response: Response): Promise<ApiError> {
    try {
      const body = (await response.json()) as ErrorEnvelope;
      return new ApiError(response.status, body.error.code, body.error.message);
    } catch {
      return new ApiError(response.status, 'internal', `HTTP ${response.status}`);
    }
  }
}

/** Canned /v1 payloads used by the mocked server. */

import type {
  ArticleSummary,
  MediaProfile,
  PropagandaLabel,
  SearchResults,
  StoriesPage,
  StoryCard,
  TopicPage,
} from '../src/types.js';

export function article(
  id: string,
  title: string,
  label: PropagandaLabel | null,
  options: Partial<Pick<ArticleSummary, 'language' | 'published_at'>> & {
    mediumId?: string;
    mediumName?: string;
  } = {},
): ArticleSummary {
  return {
    article_id: id,
    title,
    medium: {
      id: options.mediumId ?? 'm1',
      name: options.mediumName ?? 'Daily Signal',
      logo_url: null,
    },
    published_at: options.published_at ?? '2025-08-01T09:00:00+00:00',
    propaganda_label: label,
    language: options.language ?? 'en',
  };
}

export const STORY_RATES: StoryCard = {
  story_id: 's-rates',
  title: 'Central bank raises rates',
  updated_at: '2025-08-02T08:00:00+00:00',
  articles: [
    article('a1', 'Central bank raises rates', 'very_likely'),
    article('a2', 'Rate rise splits economists', 'somehow', {
      mediumId: 'm2',
      mediumName: 'Morning Horizon',
      published_at: '2025-08-01T12:00:00+00:00',
    }),
    article('a3', 'Markets shrug off rate move', null, {
      mediumId: 'm3',
      mediumName: 'Signal Watch',
      published_at: '2025-08-02T08:00:00+00:00',
    }),
  ],
};

export const STORY_FLOODS: StoryCard = {
  story_id: 's-floods',
  title: 'Floods displace thousands',
  updated_at: '2025-08-01T18:00:00+00:00',
  articles: [article('a4', 'Floods displace thousands', 'likely')],
};

export const STORIES_EN: StoriesPage = {
  items: [STORY_RATES, STORY_FLOODS],
  total: 2,
  page: 1,
  page_size: 20,
  lang: 'en',
};

const RATES_AR = 'البنك المركزي يرفع الفائدة';
const FLOODS_AR = 'الفيضانات تشرد الآلاف';

export const STORIES_AR: StoriesPage = {
  items: [
    {
      ...STORY_RATES,
      title: RATES_AR,
      articles: STORY_RATES.articles.map((a, i) => ({
        ...a,
        title: i === 0 ? RATES_AR : a.title,
        language: 'ar',
      })),
    },
    {
      ...STORY_FLOODS,
      title: FLOODS_AR,
      articles: STORY_FLOODS.articles.map((a) => ({
        ...a,
        title: FLOODS_AR,
        language: 'ar',
      })),
    },
  ],
  total: 2,
  page: 1,
  page_size: 20,
  lang: 'ar',
};

export const PROFILE_M1: MediaProfile = {
  medium: {
    id: 'm1',
    name: 'Daily Signal',
    logo_url: null,
    country: 'us',
    audience: { us: 0.7, gb: 0.3 },
  },
  article_count: 12,
  propaganda_distribution: {
    very_unlikely: 0.25,
    unlikely: 0.25,
    somehow: 0.0,
    likely: 0.25,
    very_likely: 0.25,
  },
  frame_distribution: { economic: 0.5, political: 0.3, other: 0.2 },
  stance_by_claim: {
    c1: {
      distribution: { agree: 0.75, disagree: 0.25, discuss: 0.0, unrelated: 0.0 },
      coverage: 0.5,
      related_articles: 4,
    },
  },
  factuality: 'high',
  bias: 'center_right',
  hyper_partisanship: 1 / 3,
  valences: [{ topic_id: 's-rates', score: 0.56, label: 'right' }],
  recent_articles: [article('a1', 'Central bank raises rates', 'very_likely')],
};

export const PROFILE_M2: MediaProfile = {
  medium: { id: 'm2', name: 'Morning Horizon', logo_url: null, country: null, audience: null },
  article_count: 3,
  propaganda_distribution: {
    very_unlikely: 1.0,
    unlikely: 0.0,
    somehow: 0.0,
    likely: 0.0,
    very_likely: 0.0,
  },
  frame_distribution: {},
  stance_by_claim: {},
  factuality: null,
  bias: null,
  hyper_partisanship: null,
  valences: [],
  recent_articles: [],
};

export const TOPIC_RATES: TopicPage = {
  topic_id: 's-rates',
  title: 'Central bank raises rates',
  total_articles: 6,
  total_propagandistic: 2,
  countries: { us: 4, gb: 2 },
  country_ratio: { us: 4 / 6, gb: 2 / 6 },
  media: [
    { medium_id: 'm1', name: 'Daily Signal', articles: 4, propagandistic_articles: 2, ratio: 0.5 },
    { medium_id: 'm2', name: 'Morning Horizon', articles: 2, propagandistic_articles: 0, ratio: 0.0 },
  ],
  frame_distribution: { economic: 0.6, political: 0.4 },
  propaganda_distribution: {
    very_unlikely: 0.5,
    unlikely: 0.0,
    somehow: 1 / 6,
    likely: 1 / 6,
    very_likely: 1 / 6,
  },
  recent_stories: [STORY_RATES],
};

export const SEARCH_SIGNAL: SearchResults = {
  items: [
    { type: 'media', id: 'm3', name: 'Signal Watch' },
    { type: 'media', id: 'm1', name: 'Daily Signal' },
  ],
  total: 2,
};

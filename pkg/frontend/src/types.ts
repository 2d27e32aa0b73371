/**
 * Response shapes for the /v1 API.
 *
 * These mirror the JSON the server sends field for field. The UI never
 * recomputes any of the analytics values; it only formats what arrives.
 */

export type Lang = 'en' | 'ar';

export type PropagandaLabel =
  | 'very_unlikely'
  | 'unlikely'
  | 'somehow'
  | 'likely'
  | 'very_likely';

export type StanceLabel = 'agree' | 'disagree' | 'discuss' | 'unrelated';

export type FactualityLabel = 'low' | 'mixed' | 'high';

export type BiasLabel =
  | 'far_left'
  | 'left'
  | 'center_left'
  | 'center'
  | 'center_right'
  | 'right'
  | 'far_right';

export type ValenceLabel = 'far_left' | 'left' | 'center' | 'right' | 'far_right';

export interface MediumBrief {
  id: string;
  name: string;
  logo_url: string | null;
}

export interface MediumFull extends MediumBrief {
  country: string | null;
  audience: Record<string, number> | null;
}

export interface ArticleSummary {
  article_id: string;
  title: string;
  medium: MediumBrief;
  published_at: string;
  propaganda_label: PropagandaLabel | null;
  language: string;
}

export interface StoryCard {
  story_id: string;
  title: string;
  updated_at: string;
  articles: ArticleSummary[];
}

export interface StoriesPage {
  items: StoryCard[];
  total: number;
  page: number;
  page_size: number;
  lang: Lang;
}

export interface ClaimStance {
  distribution: Record<StanceLabel, number>;
  coverage: number;
  related_articles: number;
}

export interface TopicValence {
  topic_id: string;
  score: number;
  label: ValenceLabel;
}

export interface MediaProfile {
  medium: MediumFull;
  article_count: number;
  propaganda_distribution: Record<PropagandaLabel, number>;
  frame_distribution: Record<string, number>;
  stance_by_claim: Record<string, ClaimStance>;
  factuality: FactualityLabel | null;
  bias: BiasLabel | null;
  hyper_partisanship: number | null;
  valences: TopicValence[];
  recent_articles: ArticleSummary[];
}

export interface TopicMediaRow {
  medium_id: string;
  name: string;
  articles: number;
  propagandistic_articles: number;
  ratio: number;
}

export interface TopicPage {
  topic_id: string;
  title: string;
  total_articles: number;
  total_propagandistic: number;
  countries: Record<string, number>;
  country_ratio: Record<string, number>;
  media: TopicMediaRow[];
  frame_distribution: Record<string, number>;
  propaganda_distribution: Record<PropagandaLabel, number>;
  recent_stories: StoryCard[];
}

export type SearchKind = 'media' | 'topics';

export interface SearchHit {
  type: 'media' | 'topic';
  id: string;
  name: string;
}

export interface SearchResults {
  items: SearchHit[];
  total: number;
}

export interface ErrorEnvelope {
  error: {
    code: 'not_found' | 'bad_request' | 'internal';
    message: string;
  };
}

"""Per-topic coverage statistics."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from newsflow.clustering.topics import Story
from newsflow.errors import NotFound
from newsflow.profiles.media import PROPAGANDISTIC, ArticleAnnotations


@dataclass(frozen=True)
class MediumTopicCount:
    articles: int
    propagandistic_articles: int


@dataclass(frozen=True)
class TopicStats:
    topic_id: str
    countries: Mapping[str, int]
    media: Mapping[str, MediumTopicCount]
    total_articles: int
    total_propagandistic: int


def build_topic_stats(
    topic_id: str,
    stories: Sequence[Story],
    articles: Iterable[ArticleAnnotations],
) -> TopicStats:
    """Country and per-medium counts for one story-backed topic.

    An article counts as propagandistic when its label is likely or
    very_likely. Raises NotFound when no story carries ``topic_id``.
    """
    story = next((s for s in stories if s.id == topic_id), None)
    if story is None:
        raise NotFound(f"unknown topic {topic_id!r}")
    member_ids = story.article_ids
    countries: dict[str, int] = {}
    media: dict[str, list[int]] = {}
    total = 0
    total_prop = 0
    for a in articles:
        if a.article_id not in member_ids:
            continue
        total += 1
        flagged = a.propaganda_label in PROPAGANDISTIC
        total_prop += flagged
        if a.country:
            countries[a.country] = countries.get(a.country, 0) + 1
        slot = media.setdefault(a.medium_id, [0, 0])
        slot[0] += 1
        slot[1] += flagged
    return TopicStats(
        topic_id=topic_id,
        countries=dict(sorted(countries.items())),
        media={
            m: MediumTopicCount(articles=c[0], propagandistic_articles=c[1])
            for m, c in sorted(media.items())
        },
        total_articles=total,
        total_propagandistic=total_prop,
    )

"""Immutable read snapshots for the HTTP layer.

Handlers never touch the live store or the clustering job: they read a
Snapshot, an immutable bundle of everything the API serves. The offline
jobs build a fresh snapshot and swap it into the holder in one atomic
reference assignment, so a reader sees either the old world or the new
one, never a mix.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime, timezone
from types import MappingProxyType
from typing import Iterable, Mapping

from ..clustering.topics import Story
from ..ingest.articles import Article
from ..profiles.media import MediaProfile
from ..profiles.topicstats import TopicStats


@dataclass(frozen=True)
class MediumInfo:
    """Display metadata for a medium; the audience field is a static
    fixture, not something the engine computes."""

    id: str
    name: str
    logo_url: str | None = None
    country: str | None = None
    audience: Mapping[str, float] | None = None


@dataclass(frozen=True)
class Snapshot:
    articles: Mapping[str, Article]
    stories: tuple[Story, ...]
    profiles: Mapping[str, MediaProfile]
    topic_stats: Mapping[str, TopicStats]
    media: Mapping[str, MediumInfo]
    built_at: datetime


def build_snapshot(
    articles: Iterable[Article] = (),
    stories: Iterable[Story] = (),
    profiles: Mapping[str, MediaProfile] | None = None,
    topic_stats: Mapping[str, TopicStats] | None = None,
    media: Mapping[str, MediumInfo] | None = None,
    built_at: datetime | None = None,
) -> Snapshot:
    """Bundle the parts into a Snapshot with read-only mappings."""
    return Snapshot(
        articles=MappingProxyType({a.id: a for a in articles}),
        stories=tuple(stories),
        profiles=MappingProxyType(dict(profiles or {})),
        topic_stats=MappingProxyType(dict(topic_stats or {})),
        media=MappingProxyType(dict(media or {})),
        built_at=built_at or datetime.now(timezone.utc),
    )


def empty_snapshot() -> Snapshot:
    return build_snapshot(built_at=datetime(1970, 1, 1, tzinfo=timezone.utc))


class SnapshotHolder:
    """Atomic published-snapshot cell.

    Reference assignment is atomic, which is the entire trick: swap()
    publishes a complete snapshot or nothing.
    """

    def __init__(self, snapshot: Snapshot | None = None):
        self._snapshot = snapshot or empty_snapshot()

    def get(self) -> Snapshot:
        return self._snapshot

    def swap(self, snapshot: Snapshot) -> None:
        self._snapshot = snapshot

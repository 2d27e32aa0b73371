"""Service wiring: config to store, queue, stages, jobs, and snapshot.

NewsflowService owns every moving part of one engine instance. Raw
documents enter through enqueue() or poll_once(); process() drains the
stage chain; run_clustering_once() regroups stories; run_offline_once()
rebuilds profiles and swaps a fresh API snapshot. start() puts the last
two on timers with the configured cadences.
"""

from __future__ import annotations

import json
import logging
from typing import Iterable, Optional, Sequence

from ..api.snapshot import MediumInfo, Snapshot, SnapshotHolder, build_snapshot
from ..classifiers.serialize import load_model
from ..classifiers.sourcelevel import load_source_labels
from ..clustering.params import ClusteringParams
from ..clustering.topics import ClusterResult, cluster_stories
from ..ingest.articles import Article, RawDocument, raw_document_to_dict
from ..ingest.feeds import FeedSource, load_feed_sources
from ..ingest.fetch import Fetcher, poll_source
from ..ingest.store import ArticleStore
from ..profiles.inputs import aggregate_citations, load_citations, load_claims
from ..profiles.media import ArticleAnnotations, build_media_profile
from ..profiles.topicstats import build_topic_stats
from .config import PipelineConfig
from .queue import MessageQueue
from .scheduler import PeriodicJob
from .stages import TOPIC_RAW, StageRunner, article_stages

log = logging.getLogger(__name__)


def _annotation(article: Article, country: Optional[str], story_id: Optional[str]) -> ArticleAnnotations:
    return ArticleAnnotations(
        article_id=article.id,
        medium_id=article.medium_id,
        section=article.section or "",
        propaganda_index=article.propaganda.index if article.propaganda else 0.0,
        propaganda_label=(
            article.propaganda.label if article.propaganda else "very_unlikely"
        ),
        frame_distribution=dict(article.frame_distribution or {}),
        stances=dict(article.stances),
        country=country,
        story_id=story_id,
        language=article.language,
    )


class NewsflowService:
    """One engine instance: ingestion, analysis, clustering, serving."""

    def __init__(self, config: PipelineConfig | None = None):
        self.config = config or PipelineConfig()
        self.store = ArticleStore(self.config.store_path)
        self.queue = MessageQueue(self.config.queue_dir)
        self.holder = SnapshotHolder()

        self.sources: dict[str, FeedSource] = {}
        if self.config.sources_path:
            for source in load_feed_sources(self.config.sources_path):
                self.sources[source.id] = source
        self.claims = (
            load_claims(self.config.claims_path) if self.config.claims_path else []
        )
        self.citations = (
            aggregate_citations(load_citations(self.config.citations_path))
            if self.config.citations_path
            else []
        )
        self.source_labels = (
            load_source_labels(self.config.source_labels_path)
            if self.config.source_labels_path
            else {}
        )
        section_model = (
            load_model(self.config.section_model_path)
            if self.config.section_model_path
            else None
        )
        propaganda_model = (
            load_model(self.config.propaganda_model_path)
            if self.config.propaganda_model_path
            else None
        )

        self.stages = article_stages(
            self.store,
            sources=self.sources,
            claims=self.claims,
            section_model=section_model,
            propaganda_model=propaganda_model,
            parallelism=self.config.parallelism,
        )
        self.runners = [
            StageRunner(desc, self.queue, max_retries=self.config.max_retries)
            for desc in self.stages
        ]
        self.clusters = ClusterResult((), (), {})
        self._jobs: list[PeriodicJob] = []

    # -- ingestion ---------------------------------------------------

    def enqueue(self, docs: Iterable[RawDocument]) -> int:
        """Publish raw documents onto the intake topic."""
        self.queue.create_topic(TOPIC_RAW)
        count = 0
        for doc in docs:
            payload = json.dumps(raw_document_to_dict(doc)).encode()
            self.queue.publish(TOPIC_RAW, payload)
            count += 1
        return count

    def poll_once(self, fetcher: Fetcher | None = None) -> int:
        """Fetch every configured feed once and enqueue what it yields."""
        fetcher = fetcher or Fetcher()
        enqueued = 0
        for source in self.sources.values():
            try:
                enqueued += self.enqueue(poll_source(source, fetcher))
            except Exception as exc:
                log.warning("polling %s failed: %s", source.id, exc)
        return enqueued

    def process(self) -> int:
        """Drain the stage chain; returns messages consumed."""
        return sum(runner.drain() for runner in self.runners)

    # -- periodic work -----------------------------------------------

    def run_clustering_once(
        self, params: ClusteringParams = ClusteringParams()
    ) -> ClusterResult:
        self.clusters = cluster_stories(self.store.articles(), params)
        return self.clusters

    def run_offline_once(self) -> Snapshot:
        """Rebuild profiles and stats, then publish a fresh snapshot."""
        if not self.clusters.stories and len(self.store):
            self.run_clustering_once()
        articles = self.store.articles()
        countries = self._medium_countries()
        annotations = [
            _annotation(
                a, countries.get(a.medium_id), self.clusters.assignments.get(a.id)
            )
            for a in articles
        ]
        media_ids = sorted(
            {a.medium_id for a in articles} | set(self.source_labels)
        )
        profiles = {
            medium_id: build_media_profile(
                medium_id,
                annotations,
                citations=self.citations,
                source_labels=self.source_labels,
            )
            for medium_id in media_ids
        }
        topic_stats = {
            story.id: build_topic_stats(story.id, self.clusters.stories, annotations)
            for story in self.clusters.stories
        }
        snapshot = build_snapshot(
            articles=articles,
            stories=self.clusters.stories,
            profiles=profiles,
            topic_stats=topic_stats,
            media=self._medium_directory(countries),
        )
        self.holder.swap(snapshot)
        return snapshot

    def _medium_countries(self) -> dict[str, str]:
        countries: dict[str, str] = {}
        for source_id in sorted(self.sources):
            source = self.sources[source_id]
            countries.setdefault(source.medium_id, source.country)
        return countries

    def _medium_directory(self, countries: dict[str, str]) -> dict[str, MediumInfo]:
        media_ids = {s.medium_id for s in self.sources.values()}
        return {
            medium_id: MediumInfo(
                medium_id, medium_id, country=countries.get(medium_id)
            )
            for medium_id in sorted(media_ids)
        }

    # -- lifecycle ---------------------------------------------------

    def start(self) -> None:
        """Start the clustering and offline aggregation timers."""
        if self._jobs:
            return
        self._jobs = [
            PeriodicJob(
                "clustering", self.run_clustering_once, self.config.clustering_interval
            ),
            PeriodicJob("offline", self.run_offline_once, self.config.offline_interval),
        ]
        for job in self._jobs:
            job.start()

    def stop(self) -> None:
        for job in self._jobs:
            job.stop()
        self._jobs = []
        self.queue.close()
        self.store.close()

    def __enter__(self) -> "NewsflowService":
        return self

    def __exit__(self, *exc) -> None:
        self.stop()

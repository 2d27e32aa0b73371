"""Streaming stages over the message queue.

Delivery is at-least-once: a stage commits its consumer offset only
after every output and dead-letter entry for the batch is durably
published, so a crash anywhere before the commit redelivers the whole
batch. Handlers are therefore required to be idempotent with respect
to article id; every built-in handler writes store fields whose values
are a deterministic function of the article, so reprocessing converges
to the same store state.
"""

from __future__ import annotations

import json
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Mapping, Optional, Sequence

from ..classifiers.frames import classify_frame
from ..classifiers.maxent import LinearModel
from ..classifiers.section import categorize_section
from ..classifiers.propaganda import propaganda_score
from ..classifiers.stance import classify_stance
from ..errors import ExtractError, InvalidUrl
from ..ingest.articles import (
    Article,
    article_id,
    dedup_key,
    raw_document_from_dict,
)
from ..ingest.extract import Extractor, extract_article
from ..ingest.feeds import FeedSource
from ..ingest.store import ArticleStore
from ..ingest.urls import canonicalize_url
from ..profiles.inputs import Claim
from .queue import MessageQueue

log = logging.getLogger(__name__)

Handler = Callable[[bytes], Optional[bytes]]


@dataclass(frozen=True)
class StageDescriptor:
    """One streaming stage: consume input topic, publish to output topic.

    The handler returns the output message, or None to drop the input
    without producing anything. It must be idempotent per article id.
    """

    name: str
    input_topic: str
    output_topic: str | None
    handler: Handler
    parallelism: int = 1

    def __post_init__(self):
        if self.parallelism < 1:
            raise ValueError("parallelism must be positive")

    @property
    def dead_letter_topic(self) -> str:
        return f"{self.name}.dlq"


class StageRunner:
    """Drives one stage against the queue.

    Each message is attempted at most ``max_retries`` times within a
    runner's lifetime; a message that keeps failing is parked on the
    stage's dead-letter topic and the stage moves on. A crash resets
    the attempt count, which is the at-least-once trade-off.
    """

    def __init__(
        self,
        desc: StageDescriptor,
        queue: MessageQueue,
        max_retries: int = 3,
        batch_size: int = 64,
    ):
        if max_retries < 1:
            raise ValueError("max_retries must be positive")
        self.desc = desc
        self._queue = queue
        self._max_retries = max_retries
        self._batch_size = batch_size
        queue.create_topic(desc.input_topic)
        if desc.output_topic is not None:
            queue.create_topic(desc.output_topic)
        queue.create_topic(desc.dead_letter_topic)

    def _attempt(self, message: bytes) -> tuple[Optional[bytes], Optional[Exception]]:
        error: Optional[Exception] = None
        for _ in range(self._max_retries):
            try:
                return self.desc.handler(message), None
            except Exception as exc:
                error = exc
        return None, error

    def step(self) -> int:
        """Process one batch; returns how many messages were consumed."""
        desc = self.desc
        start = self._queue.committed(desc.input_topic, desc.name)
        batch = self._queue.read(desc.input_topic, start, self._batch_size)
        if not batch:
            return 0
        if desc.parallelism > 1:
            with ThreadPoolExecutor(max_workers=desc.parallelism) as pool:
                results = list(pool.map(self._attempt, (m for _, m in batch)))
        else:
            results = [self._attempt(message) for _, message in batch]
        # Publish everything the batch produced, in input order, before
        # committing; a crash in here redelivers the whole batch.
        for (offset, message), (output, error) in zip(batch, results):
            if error is not None:
                log.warning("stage %s: message %d dead-lettered: %s",
                            desc.name, offset, error)
                self._queue.publish(desc.dead_letter_topic, message)
            elif output is not None and desc.output_topic is not None:
                self._queue.publish(desc.output_topic, output)
        self._queue.commit(desc.input_topic, desc.name, batch[-1][0] + 1)
        return len(batch)

    def drain(self) -> int:
        """Run until the input topic is exhausted; returns messages consumed."""
        total = 0
        while True:
            consumed = self.step()
            if consumed == 0:
                return total
            total += consumed


def run_stage(desc: StageDescriptor, queue: MessageQueue,
              max_retries: int = 3) -> StageRunner:
    """Prepare a runner for the stage (topics created, offsets resumed)."""
    return StageRunner(desc, queue, max_retries=max_retries)


# ---------------------------------------------------------------------------
# The standard article-analysis stage chain.

TOPIC_RAW = "docs.raw"
TOPIC_EXTRACTED = "articles.extracted"
TOPIC_TRANSLATED = "articles.translated"
TOPIC_CATEGORIZED = "articles.categorized"
TOPIC_PROPAGANDA = "articles.propaganda"
TOPIC_FRAMED = "articles.framed"
TOPIC_ANALYZED = "articles.analyzed"


def _extract_handler(
    store: ArticleStore,
    sources: Mapping[str, FeedSource],
    extractor: Extractor,
) -> Handler:
    def handle(message: bytes) -> Optional[bytes]:
        doc = raw_document_from_dict(json.loads(message))
        try:
            canonical = canonicalize_url(doc.fetch_url)
            title, body = extractor(doc.body_html)
        except (ExtractError, InvalidUrl) as exc:
            log.warning("dropping %s: %s", doc.fetch_url, exc)
            return None
        if not body:
            return None
        source = sources.get(doc.source_id)
        article = Article(
            id=article_id(canonical),
            canonical_url=canonical,
            medium_id=source.medium_id if source else doc.source_id,
            title=title,
            body=body,
            language=source.language if source else "en",
            published_at=doc.published_at or doc.fetched_at,
        )
        store.insert_if_absent(article)
        # Forward whichever row won, so a redelivered duplicate still
        # pushes the surviving article down the chain.
        stored_id = store.resolve(dedup_key(article))
        return stored_id.encode() if stored_id else None

    return handle


def _load_article(store: ArticleStore, message: bytes) -> Article:
    aid = message.decode()
    article = store.get(aid)
    if article is None:
        raise LookupError(f"article {aid!r} not in store")
    return article


def _categorize_handler(store: ArticleStore, model: Optional[LinearModel]) -> Handler:
    def handle(message: bytes) -> Optional[bytes]:
        if model is not None:
            article = _load_article(store, message)
            store.set_section(article.id, categorize_section(article, model))
        return message

    return handle


def _propaganda_handler(store: ArticleStore, model: Optional[LinearModel]) -> Handler:
    def handle(message: bytes) -> Optional[bytes]:
        if model is not None:
            article = _load_article(store, message)
            store.set_propaganda(article.id, propaganda_score(article, model))
        return message

    return handle


def _frame_handler(store: ArticleStore) -> Handler:
    def handle(message: bytes) -> Optional[bytes]:
        article = _load_article(store, message)
        store.set_frames(article.id, classify_frame(article.body))
        return message

    return handle


def _stance_handler(store: ArticleStore, claims: Sequence[Claim]) -> Handler:
    def handle(message: bytes) -> Optional[bytes]:
        if claims:
            article = _load_article(store, message)
            stances = {
                claim.claim_id: classify_stance(article.body, claim.text)
                for claim in claims
            }
            store.set_stances(article.id, stances)
        return message

    return handle


def article_stages(
    store: ArticleStore,
    sources: Mapping[str, FeedSource] | None = None,
    claims: Sequence[Claim] = (),
    section_model: Optional[LinearModel] = None,
    propaganda_model: Optional[LinearModel] = None,
    extractor: Extractor = extract_article,
    parallelism: Mapping[str, int] | None = None,
) -> list[StageDescriptor]:
    """The standard stage chain, in execution order.

    Stages whose model or inputs are absent (no section model, no
    claims) pass articles through without annotating. The translate
    slot is a pass-through: content flows on tagged with its original
    language.
    """
    width = dict(parallelism or {})

    def stage(name, input_topic, output_topic, handler):
        return StageDescriptor(name, input_topic, output_topic, handler,
                               parallelism=width.get(name, 1))

    identity: Handler = lambda message: message
    return [
        stage("extract", TOPIC_RAW, TOPIC_EXTRACTED,
              _extract_handler(store, sources or {}, extractor)),
        stage("translate", TOPIC_EXTRACTED, TOPIC_TRANSLATED, identity),
        stage("categorize", TOPIC_TRANSLATED, TOPIC_CATEGORIZED,
              _categorize_handler(store, section_model)),
        stage("propaganda", TOPIC_CATEGORIZED, TOPIC_PROPAGANDA,
              _propaganda_handler(store, propaganda_model)),
        stage("frame", TOPIC_PROPAGANDA, TOPIC_FRAMED, _frame_handler(store)),
        stage("stance", TOPIC_FRAMED, TOPIC_ANALYZED,
              _stance_handler(store, claims)),
    ]

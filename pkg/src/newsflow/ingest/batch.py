"""Batch ingestion: extract, de-duplicate, persist."""

from __future__ import annotations

import logging
from typing import Iterable, Mapping

from ..errors import ExtractError, InvalidUrl
from .articles import Article, RawDocument, article_id
from .extract import Extractor, extract_article
from .feeds import FeedSource
from .store import ArticleStore
from .urls import canonicalize_url

log = logging.getLogger(__name__)


def ingest_batch(
    docs: Iterable[RawDocument],
    store: ArticleStore,
    sources: Mapping[str, FeedSource] | None = None,
    extractor: Extractor = extract_article,
) -> list[Article]:
    """Extract each document and persist the ones not seen before.

    Returns only newly inserted articles, so delivering the same batch
    twice returns an empty list the second time. Documents that fail
    extraction are logged and skipped; the batch continues. ``sources``
    maps source ids to their FeedSource so articles inherit the medium
    and language; documents with an unknown source fall back to using
    the source id as the medium and default to English.
    """
    sources = sources or {}
    new: list[Article] = []
    for doc in docs:
        try:
            canonical = canonicalize_url(doc.fetch_url)
            title, body = extractor(doc.body_html)
        except (ExtractError, InvalidUrl) as exc:
            log.warning("skipping %s: %s", doc.fetch_url, exc)
            continue
        if not body:
            log.warning("skipping %s: extractor returned empty body", doc.fetch_url)
            continue
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
        if store.insert_if_absent(article):
            new.append(article)
    return new

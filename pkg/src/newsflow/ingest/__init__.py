"""Feed crawling, content extraction, de-duplication, and persistence."""

from .articles import (
    LANGUAGES,
    Article,
    DedupKey,
    RawDocument,
    article_from_dict,
    article_id,
    article_to_dict,
    content_fingerprint,
    dedup_key,
    raw_document_from_dict,
    raw_document_to_dict,
)
from .batch import ingest_batch
from .extract import Extractor, extract_article
from .feeds import (
    FEED_KINDS,
    FeedEntry,
    FeedSource,
    SourceList,
    load_feed_sources,
    parse_feed,
)
from .fetch import Fetcher, poll_source
from .store import ArticleStore
from .translate import IdentityTranslator, Translation, Translator
from .urls import canonicalize_url

__all__ = [
    "LANGUAGES",
    "Article",
    "DedupKey",
    "RawDocument",
    "article_from_dict",
    "article_id",
    "article_to_dict",
    "content_fingerprint",
    "dedup_key",
    "raw_document_from_dict",
    "raw_document_to_dict",
    "ingest_batch",
    "Extractor",
    "extract_article",
    "FEED_KINDS",
    "FeedEntry",
    "FeedSource",
    "SourceList",
    "load_feed_sources",
    "parse_feed",
    "Fetcher",
    "poll_source",
    "ArticleStore",
    "IdentityTranslator",
    "Translation",
    "Translator",
    "canonicalize_url",
]

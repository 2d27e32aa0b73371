"""Article domain types, identifiers, and de-duplication keys."""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import datetime, timezone
from hashlib import sha256
from typing import Mapping

from ..classifiers.propaganda import PropagandaResult
from ..errors import ParseError
from ..util import fnv1a64

LANGUAGES = ("en", "ar")


def article_id(canonical_url: str) -> str:
    """Stable content-derived identifier: 64 bits of SHA-256 over the
    canonical URL, hex-encoded."""
    return sha256(canonical_url.encode("utf-8")).hexdigest()[:16]


def content_fingerprint(title: str, body: str) -> int:
    """64-bit FNV-1a hash of the casefolded, whitespace-collapsed text.

    Equal for articles that differ only in case or in whitespace layout,
    which is what syndicated copies of the same wire story look like.
    """
    normalized = " ".join((title + " " + body).casefold().split())
    return fnv1a64(normalized.encode("utf-8"))


@dataclass(frozen=True)
class RawDocument:
    """A fetched page before extraction.

    ``published_at`` carries the feed-provided timestamp when the feed had
    one; otherwise the ingested article falls back to ``fetched_at``.
    """

    fetch_url: str
    fetched_at: datetime
    body_html: str
    source_id: str
    published_at: datetime | None = None

    def __post_init__(self):
        if not self.body_html:
            raise ValueError("body_html must be non-empty")


@dataclass(frozen=True)
class Article:
    """One ingested news item plus its analysis annotations.

    Annotation fields (section, propaganda, stances, frame_distribution)
    start empty and are filled in by the pipeline stages. Timestamps are
    normalized to UTC; naive datetimes are taken to already be UTC.
    """

    id: str
    canonical_url: str
    medium_id: str
    title: str
    body: str
    language: str
    published_at: datetime
    section: str | None = None
    propaganda: PropagandaResult | None = None
    stances: Mapping[str, str] = field(default_factory=dict)
    frame_distribution: Mapping[str, float] | None = None

    def __post_init__(self):
        if not self.body:
            raise ValueError("body must be non-empty")
        if self.language not in LANGUAGES:
            raise ValueError(f"unsupported language: {self.language!r}")
        if self.id != article_id(self.canonical_url):
            raise ValueError("id does not match canonical_url")
        stamp = self.published_at
        if stamp.tzinfo is None:
            stamp = stamp.replace(tzinfo=timezone.utc)
        object.__setattr__(self, "published_at", stamp.astimezone(timezone.utc))
        if self.frame_distribution is not None:
            total = sum(self.frame_distribution.values())
            if abs(total - 1.0) > 1e-9:
                raise ValueError(f"frame distribution sums to {total}, not 1")

    @classmethod
    def create(cls, canonical_url: str, **fields) -> "Article":
        """Build an article with the id derived from its canonical URL."""
        return cls(id=article_id(canonical_url), canonical_url=canonical_url, **fields)


@dataclass(frozen=True)
class DedupKey:
    """Composite de-duplication key: two articles are duplicates when
    either the URL hash or the content fingerprint matches."""

    url_hash: str
    fingerprint: int

    def collides(self, other: "DedupKey") -> bool:
        return self.url_hash == other.url_hash or self.fingerprint == other.fingerprint


def dedup_key(article: Article) -> DedupKey:
    return DedupKey(article.id, content_fingerprint(article.title, article.body))


def raw_document_to_dict(doc: RawDocument) -> dict:
    return {
        "fetch_url": doc.fetch_url,
        "fetched_at": doc.fetched_at.isoformat(),
        "body_html": doc.body_html,
        "source_id": doc.source_id,
        "published_at": doc.published_at.isoformat() if doc.published_at else None,
    }


def raw_document_from_dict(data: Mapping) -> RawDocument:
    try:
        return RawDocument(
            fetch_url=data["fetch_url"],
            fetched_at=datetime.fromisoformat(data["fetched_at"]),
            body_html=data["body_html"],
            source_id=data["source_id"],
            published_at=(
                datetime.fromisoformat(data["published_at"])
                if data.get("published_at")
                else None
            ),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed raw document record: {exc}") from None


def article_to_dict(article: Article) -> dict:
    """JSON-serializable form used by the JSONL export and the API."""
    return {
        "id": article.id,
        "canonical_url": article.canonical_url,
        "medium_id": article.medium_id,
        "title": article.title,
        "body": article.body,
        "language": article.language,
        "published_at": article.published_at.isoformat(),
        "section": article.section,
        "propaganda": (
            {"index": article.propaganda.index, "label": article.propaganda.label}
            if article.propaganda is not None
            else None
        ),
        "stances": dict(article.stances),
        "frame_distribution": (
            dict(article.frame_distribution)
            if article.frame_distribution is not None
            else None
        ),
    }


def article_from_dict(data: Mapping) -> Article:
    """Inverse of article_to_dict. Raises ParseError on malformed records."""
    required = ("id", "canonical_url", "medium_id", "title", "body",
                "language", "published_at")
    missing = [key for key in required if key not in data]
    if missing:
        raise ParseError(f"article record missing fields: {', '.join(missing)}")
    propaganda = data.get("propaganda")
    try:
        return Article(
            id=data["id"],
            canonical_url=data["canonical_url"],
            medium_id=data["medium_id"],
            title=data["title"],
            body=data["body"],
            language=data["language"],
            published_at=datetime.fromisoformat(data["published_at"]),
            section=data.get("section"),
            propaganda=(
                PropagandaResult(propaganda["index"], propaganda["label"])
                if propaganda is not None
                else None
            ),
            stances=dict(data.get("stances") or {}),
            frame_distribution=(
                dict(data["frame_distribution"])
                if data.get("frame_distribution") is not None
                else None
            ),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed article record: {exc}") from None

"""SQLite-backed article store with race-free de-duplication.

Both de-duplication channels are UNIQUE indexes, so insert-if-absent is
a single INSERT OR IGNORE and concurrent fetchers cannot double-insert.
Analysis annotations are plain column updates keyed by article id; the
stages that write them are deterministic, so redelivery rewrites the
same value and the store converges either way.
"""

from __future__ import annotations

import json
import sqlite3
import threading
from datetime import datetime
from pathlib import Path
from typing import Mapping

from ..classifiers.propaganda import PropagandaResult
from ..errors import NotFound, ParseError
from .articles import Article, article_from_dict, article_to_dict, dedup_key

_SCHEMA = """
CREATE TABLE IF NOT EXISTS articles (
    id TEXT PRIMARY KEY,
    canonical_url TEXT NOT NULL,
    medium_id TEXT NOT NULL,
    title TEXT NOT NULL,
    body TEXT NOT NULL,
    language TEXT NOT NULL,
    published_at TEXT NOT NULL,
    fingerprint TEXT NOT NULL,
    section TEXT,
    propaganda_index REAL,
    propaganda_label TEXT,
    stances TEXT NOT NULL DEFAULT '{}',
    frames TEXT
);
CREATE UNIQUE INDEX IF NOT EXISTS articles_by_url ON articles(canonical_url);
CREATE UNIQUE INDEX IF NOT EXISTS articles_by_fingerprint ON articles(fingerprint);
"""

_COLUMNS = ("id, canonical_url, medium_id, title, body, language, "
            "published_at, fingerprint, section, propaganda_index, "
            "propaganda_label, stances, frames")


def _row_to_article(row) -> Article:
    (aid, url, medium, title, body, language, published, _fp,
     section, p_index, p_label, stances, frames) = row
    return Article(
        id=aid,
        canonical_url=url,
        medium_id=medium,
        title=title,
        body=body,
        language=language,
        published_at=datetime.fromisoformat(published),
        section=section,
        propaganda=PropagandaResult(p_index, p_label) if p_label is not None else None,
        stances=json.loads(stances),
        frame_distribution=json.loads(frames) if frames is not None else None,
    )


class ArticleStore:
    """Embedded article store. Pass ":memory:" for an ephemeral one."""

    def __init__(self, path: str | Path = ":memory:"):
        self._conn = sqlite3.connect(str(path), check_same_thread=False)
        self._lock = threading.Lock()
        self._conn.executescript(_SCHEMA)

    def insert_if_absent(self, article: Article) -> bool:
        """Insert the article and report whether it was new.

        Articles matching an existing row on canonical URL or on content
        fingerprint are silently ignored.
        """
        key = dedup_key(article)
        row = (
            article.id,
            article.canonical_url,
            article.medium_id,
            article.title,
            article.body,
            article.language,
            article.published_at.isoformat(),
            f"{key.fingerprint:016x}",
            article.section,
            article.propaganda.index if article.propaganda is not None else None,
            article.propaganda.label if article.propaganda is not None else None,
            json.dumps(dict(article.stances), sort_keys=True),
            json.dumps(dict(article.frame_distribution), sort_keys=True)
            if article.frame_distribution is not None
            else None,
        )
        with self._lock, self._conn:
            cursor = self._conn.execute(
                "INSERT OR IGNORE INTO articles VALUES (?,?,?,?,?,?,?,?,?,?,?,?,?)",
                row,
            )
        return cursor.rowcount == 1

    def get(self, article_id: str) -> Article | None:
        with self._lock:
            row = self._conn.execute(
                f"SELECT {_COLUMNS} FROM articles WHERE id = ?", (article_id,)
            ).fetchone()
        return _row_to_article(row) if row is not None else None

    def resolve(self, key) -> str | None:
        """Id of the stored article colliding with ``key`` on either
        de-duplication channel, or None. Lets redelivered duplicates be
        mapped back to the row that won the original insert."""
        with self._lock:
            row = self._conn.execute(
                "SELECT id FROM articles WHERE id = ? OR fingerprint = ? "
                "ORDER BY id LIMIT 1",
                (key.url_hash, f"{key.fingerprint:016x}"),
            ).fetchone()
        return row[0] if row is not None else None

    def articles(self) -> list[Article]:
        """All articles, ordered by id for deterministic output."""
        with self._lock:
            rows = self._conn.execute(
                f"SELECT {_COLUMNS} FROM articles ORDER BY id"
            ).fetchall()
        return [_row_to_article(row) for row in rows]

    def __len__(self) -> int:
        with self._lock:
            (count,) = self._conn.execute("SELECT COUNT(*) FROM articles").fetchone()
        return count

    # -- analysis annotations, one writer per field ----------------------

    def set_section(self, article_id: str, label: str) -> None:
        self._update(article_id, "section = ?", (label,))

    def set_propaganda(self, article_id: str, result: PropagandaResult) -> None:
        self._update(
            article_id,
            "propaganda_index = ?, propaganda_label = ?",
            (result.index, result.label),
        )

    def set_frames(self, article_id: str, distribution: Mapping[str, float]) -> None:
        total = sum(distribution.values())
        if abs(total - 1.0) > 1e-9:
            raise ValueError(f"frame distribution sums to {total}, not 1")
        self._update(
            article_id, "frames = ?",
            (json.dumps(dict(distribution), sort_keys=True),),
        )

    def set_stances(self, article_id: str, stances: Mapping[str, str]) -> None:
        self._update(
            article_id, "stances = ?",
            (json.dumps(dict(stances), sort_keys=True),),
        )

    def _update(self, article_id: str, assignment: str, values: tuple) -> None:
        with self._lock, self._conn:
            cursor = self._conn.execute(
                f"UPDATE articles SET {assignment} WHERE id = ?",
                values + (article_id,),
            )
        if cursor.rowcount == 0:
            raise NotFound(f"no article {article_id!r}")

    # -- JSON Lines export/import ----------------------------------------

    def export_jsonl(self, path) -> int:
        """Write every article as one JSON object per line. Returns count."""
        count = 0
        with open(path, "w", encoding="utf-8") as handle:
            for article in self.articles():
                handle.write(json.dumps(article_to_dict(article),
                                        ensure_ascii=False, sort_keys=True))
                handle.write("\n")
                count += 1
        return count

    def import_jsonl(self, path) -> int:
        """Load articles written by export_jsonl; returns how many were new.

        Importing the same file twice inserts nothing the second time.
        """
        inserted = 0
        with open(path, encoding="utf-8") as handle:
            for lineno, line in enumerate(handle, start=1):
                if not line.strip():
                    continue
                try:
                    data = json.loads(line)
                except json.JSONDecodeError as exc:
                    raise ParseError(f"line {lineno}: {exc.msg}", offset=exc.pos) from None
                if self.insert_if_absent(article_from_dict(data)):
                    inserted += 1
        return inserted

    def close(self) -> None:
        self._conn.close()

    def __enter__(self) -> "ArticleStore":
        return self

    def __exit__(self, *exc) -> None:
        self.close()

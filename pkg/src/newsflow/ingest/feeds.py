"""Feed source descriptions and feed/list-page parsing."""

from __future__ import annotations

import json
from dataclasses import dataclass
from datetime import datetime, timezone
from email.utils import parsedate_to_datetime
from html.parser import HTMLParser
from pathlib import Path
from typing import NamedTuple
from urllib.parse import urljoin, urlsplit
from xml.etree import ElementTree
from xml.parsers import expat

from ..errors import ConfigError, ParseError, UnsupportedKind

FEED_KINDS = ("rss", "atom", "list-page")

_ATOM = "{http://www.w3.org/2005/Atom}"


class FeedEntry(NamedTuple):
    title: str
    link: str
    published_at: datetime | None


@dataclass(frozen=True)
class FeedSource:
    """One polled feed. Several sources may belong to the same medium."""

    id: str
    medium_id: str
    kind: str
    url: str
    poll_interval: int
    country: str
    language: str

    def __post_init__(self):
        if self.kind not in FEED_KINDS:
            raise ValueError(f"unknown feed kind: {self.kind!r}")
        parts = urlsplit(self.url)
        if not parts.scheme or not parts.netloc:
            raise ValueError(f"feed url must be absolute: {self.url!r}")
        if self.poll_interval < 60:
            raise ValueError("poll_interval must be at least 60 seconds")
        if len(self.country) != 2 or not self.country.isalpha():
            raise ValueError(f"country must be ISO-3166 alpha-2: {self.country!r}")
        if self.language not in ("en", "ar"):
            raise ValueError(f"unsupported language: {self.language!r}")


def _xml_error_offset(raw: bytes) -> int:
    # Re-parse with expat, which reports exact byte positions.
    parser = expat.ParserCreate()
    try:
        parser.Parse(raw, True)
    except expat.ExpatError:
        return parser.ErrorByteIndex
    return -1


def _parse_xml(raw: bytes) -> ElementTree.Element:
    try:
        return ElementTree.fromstring(raw)
    except ElementTree.ParseError as exc:
        raise ParseError(f"malformed feed XML: {exc}", offset=_xml_error_offset(raw)) from None


def _rfc822(text: str | None) -> datetime | None:
    if not text:
        return None
    try:
        parsed = parsedate_to_datetime(text)
    except (TypeError, ValueError):
        return None
    if parsed.tzinfo is None:
        parsed = parsed.replace(tzinfo=timezone.utc)
    return parsed.astimezone(timezone.utc)


def _iso8601(text: str | None) -> datetime | None:
    if not text:
        return None
    text = text.strip()
    if text.endswith(("Z", "z")):
        text = text[:-1] + "+00:00"
    try:
        parsed = datetime.fromisoformat(text)
    except ValueError:
        return None
    if parsed.tzinfo is None:
        parsed = parsed.replace(tzinfo=timezone.utc)
    return parsed.astimezone(timezone.utc)


def _parse_rss(raw: bytes, feed_url: str) -> list[FeedEntry]:
    entries = []
    for item in _parse_xml(raw).iter("item"):
        link = (item.findtext("link") or "").strip()
        if not link:
            continue
        title = " ".join((item.findtext("title") or "").split())
        entries.append(
            FeedEntry(title, urljoin(feed_url, link), _rfc822(item.findtext("pubDate")))
        )
    return entries


def _atom_link(entry: ElementTree.Element) -> str:
    fallback = ""
    for link in entry.iter(f"{_ATOM}link"):
        href = (link.get("href") or "").strip()
        if not href:
            continue
        if link.get("rel", "alternate") == "alternate":
            return href
        fallback = fallback or href
    return fallback


def _parse_atom(raw: bytes, feed_url: str) -> list[FeedEntry]:
    entries = []
    for entry in _parse_xml(raw).iter(f"{_ATOM}entry"):
        href = _atom_link(entry)
        if not href:
            continue
        title = " ".join((entry.findtext(f"{_ATOM}title") or "").split())
        stamp = _iso8601(entry.findtext(f"{_ATOM}published")) or _iso8601(
            entry.findtext(f"{_ATOM}updated")
        )
        entries.append(FeedEntry(title, urljoin(feed_url, href), stamp))
    return entries


class _LinkParser(HTMLParser):
    """Collects anchor text and hrefs, skipping script/style content."""

    def __init__(self):
        super().__init__(convert_charrefs=True)
        self.links: list[tuple[str, list[str]]] = []
        self._href: str | None = None
        self._text: list[str] = []
        self._skip = 0

    def handle_starttag(self, tag, attrs):
        if tag in ("script", "style"):
            self._skip += 1
        elif tag == "a" and not self._skip:
            href = (dict(attrs).get("href") or "").strip()
            if href and not href.startswith(("#", "mailto:", "javascript:")):
                self._href = href
                self._text = []

    def handle_endtag(self, tag):
        if tag in ("script", "style"):
            self._skip = max(0, self._skip - 1)
        elif tag == "a" and self._href is not None:
            self.links.append((self._href, self._text))
            self._href = None

    def handle_data(self, data):
        if self._href is not None and not self._skip:
            self._text.append(data)


def _parse_list_page(raw: bytes, feed_url: str) -> list[FeedEntry]:
    parser = _LinkParser()
    parser.feed(raw.decode("utf-8", errors="replace"))
    parser.close()
    seen = set()
    entries = []
    for href, chunks in parser.links:
        title = " ".join("".join(chunks).split())
        link = urljoin(feed_url, href)
        if not title or link in seen:
            continue
        seen.add(link)
        entries.append(FeedEntry(title, link, None))
    return entries


def parse_feed(raw: bytes, kind: str, feed_url: str = "") -> list[FeedEntry]:
    """Parse one fetched feed document into (title, link, published_at) rows.

    Links are resolved against ``feed_url``. RSS and atom input must be
    well-formed XML; malformed XML raises ParseError with the byte offset
    of the first error. List pages go through the tolerant HTML parser and
    yield every titled link once, in document order, with no timestamp.
    """
    if kind == "rss":
        return _parse_rss(raw, feed_url)
    if kind == "atom":
        return _parse_atom(raw, feed_url)
    if kind == "list-page":
        return _parse_list_page(raw, feed_url)
    raise UnsupportedKind(f"unsupported feed kind: {kind!r}")


_SOURCE_FIELDS = ("id", "medium_id", "kind", "url", "poll_interval", "country", "language")


def load_feed_sources(path) -> list[FeedSource]:
    """Read a feed source list: a JSON array of objects with the FeedSource
    fields (id, medium_id, kind, url, poll_interval, country, language).

    Malformed JSON raises ParseError; structurally valid JSON with bad
    field values raises ConfigError.
    """
    text = Path(path).read_text("utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed source list: {exc.msg}", offset=exc.pos) from None
    if not isinstance(data, list):
        raise ConfigError("source list must be a JSON array")
    sources = []
    for row in data:
        if not isinstance(row, dict):
            raise ConfigError(f"source entry must be an object, got {type(row).__name__}")
        missing = [name for name in _SOURCE_FIELDS if name not in row]
        if missing:
            raise ConfigError(f"source entry missing fields: {', '.join(missing)}")
        try:
            sources.append(FeedSource(**{name: row[name] for name in _SOURCE_FIELDS}))
        except (TypeError, ValueError) as exc:
            raise ConfigError(str(exc)) from None
    return sources


class SourceList:
    """Feed source file that reloads itself when the file changes."""

    def __init__(self, path):
        self._path = Path(path)
        self._stamp: tuple[int, int] | None = None
        self._sources: tuple[FeedSource, ...] = ()

    def current(self) -> tuple[FeedSource, ...]:
        stat = self._path.stat()
        stamp = (stat.st_mtime_ns, stat.st_size)
        if stamp != self._stamp:
            self._sources = tuple(load_feed_sources(self._path))
            self._stamp = stamp
        return self._sources

    def by_id(self) -> dict[str, FeedSource]:
        return {source.id: source for source in self.current()}

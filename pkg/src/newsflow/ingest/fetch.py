"""Polite HTTP fetching and feed polling."""

from __future__ import annotations

import time
import urllib.request
from datetime import datetime, timezone
from typing import Callable
from urllib.parse import urlsplit

from .articles import RawDocument
from .feeds import FeedSource, parse_feed

USER_AGENT = "newsflow/0.1"


def _default_transport(url: str) -> bytes:
    request = urllib.request.Request(url, headers={"User-Agent": USER_AGENT})
    with urllib.request.urlopen(request, timeout=30) as response:
        return response.read()


class Fetcher:
    """HTTP fetcher enforcing a fixed minimum delay between requests to
    the same host. The transport is injectable for testing."""

    def __init__(
        self,
        transport: Callable[[str], bytes] | None = None,
        host_delay: float = 1.0,
        clock: Callable[[], float] = time.monotonic,
        sleep: Callable[[float], None] = time.sleep,
    ):
        self._transport = transport or _default_transport
        self._delay = host_delay
        self._clock = clock
        self._sleep = sleep
        self._last: dict[str, float] = {}

    def fetch(self, url: str) -> bytes:
        host = urlsplit(url).netloc.lower()
        last = self._last.get(host)
        if last is not None:
            wait = self._delay - (self._clock() - last)
            if wait > 0:
                self._sleep(wait)
        try:
            return self._transport(url)
        finally:
            self._last[host] = self._clock()


def poll_source(source: FeedSource, fetcher: Fetcher) -> list[RawDocument]:
    """Fetch one source's feed and every article page it lists.

    Pages that fail to download are skipped; the poll continues. Feed
    timestamps ride along on the documents as the published_at hint.
    """
    entries = parse_feed(fetcher.fetch(source.url), source.kind, source.url)
    docs = []
    for entry in entries:
        fetched_at = datetime.now(timezone.utc)
        try:
            page = fetcher.fetch(entry.link)
        except OSError:
            continue
        body = page.decode("utf-8", errors="replace")
        if not body:
            continue
        docs.append(
            RawDocument(entry.link, fetched_at, body, source.id,
                        published_at=entry.published_at)
        )
    return docs

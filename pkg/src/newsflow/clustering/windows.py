"""Sliding time windows over articles."""

from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime, timedelta, timezone
from typing import Any, Sequence

from newsflow.clustering.params import ClusteringParams


@dataclass(frozen=True)
class Window:
    start: datetime
    end: datetime
    article_ids: tuple[str, ...]

    def covers(self, ts: datetime) -> bool:
        return self.start <= _as_utc(ts) < self.end


def _as_utc(ts: datetime) -> datetime:
    if ts.tzinfo is None:
        return ts.replace(tzinfo=timezone.utc)
    return ts.astimezone(timezone.utc)


def make_windows(articles: Sequence[Any], params: ClusteringParams) -> list[Window]:
    """Slice articles into overlapping windows.

    Windows span ``window_days`` and step by ``window_days − overlap``,
    anchored at UTC midnight of the earliest published_at. An article
    belongs to every window covering its timestamp, so with the default
    6/3 geometry each lands in at most two. Windows are generated while
    their start does not exceed the latest timestamp; empty mid-span
    windows are kept so window indices track calendar time.
    """
    if not articles:
        return []
    stamped = sorted(
        ((_as_utc(a.published_at), a.id) for a in articles), key=lambda p: (p[0], p[1])
    )
    first = stamped[0][0]
    last = stamped[-1][0]
    anchor = first.replace(hour=0, minute=0, second=0, microsecond=0)
    span = timedelta(days=params.window_days)
    step = timedelta(days=params.step_days)

    windows = []
    k = 0
    while True:
        start = anchor + k * step
        if start > last:
            break
        end = start + span
        members = tuple(aid for ts, aid in stamped if start <= ts < end)
        windows.append(Window(start, end, members))
        k += 1
    return windows

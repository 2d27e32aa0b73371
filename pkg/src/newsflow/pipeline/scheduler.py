"""Periodic jobs with coalesced ticks."""

from __future__ import annotations

import logging
import threading
from typing import Callable, Iterable, Sequence

log = logging.getLogger(__name__)


class PeriodicJob:
    """Runs a function on a fixed cadence.

    A tick that arrives while a run is still in flight is coalesced:
    it is skipped rather than queued, so at most one run executes at a
    time and a slow run never builds a backlog of stale runs behind it.
    """

    def __init__(self, name: str, fn: Callable[[], None], interval: float):
        if interval <= 0:
            raise ValueError("interval must be positive")
        self.name = name
        self.interval = interval
        self._fn = fn
        self._gate = threading.Lock()
        self._halt = threading.Event()
        self._thread: threading.Thread | None = None
        self.completed = 0
        self.skipped = 0

    def trigger(self) -> bool:
        """Run now unless a run is already in flight; True if it ran."""
        if not self._gate.acquire(blocking=False):
            self.skipped += 1
            return False
        try:
            self._fn()
            self.completed += 1
        except Exception:
            log.exception("job %s failed", self.name)
        finally:
            self._gate.release()
        return True

    def _loop(self) -> None:
        while not self._halt.wait(self.interval):
            self.trigger()

    def start(self) -> "PeriodicJob":
        if self._thread is None:
            self._halt.clear()
            self._thread = threading.Thread(
                target=self._loop, name=f"job-{self.name}", daemon=True
            )
            self._thread.start()
        return self

    def stop(self) -> None:
        self._halt.set()
        if self._thread is not None:
            self._thread.join()
            self._thread = None


def schedule_clustering(fn: Callable[[], None], every: float = 1800.0) -> PeriodicJob:
    """Clustering on a 30-minute cadence by default; runs never overlap."""
    return PeriodicJob("clustering", fn, every).start()


def schedule_offline(
    jobs: Iterable[tuple[str, Callable[[], None]]], every: float = 86400.0
) -> Sequence[PeriodicJob]:
    """Offline aggregation jobs, daily by default."""
    return [PeriodicJob(name, fn, every).start() for name, fn in jobs]

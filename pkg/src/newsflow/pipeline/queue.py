"""Embedded durable message log with consumer-group offsets.

One append-only file per topic. Each record is a 4-byte big-endian
length, the payload, and a CRC32 of the payload; a torn tail (partial
or corrupt final record, as left behind by a crash mid-append) is
detected on open and truncated away. Committed offsets live in one
small file per (topic, consumer group), replaced atomically, so a
commit is either fully visible or not at all and never goes backwards.

The interface is broker-shaped on purpose: publish/read/commit with
monotonically increasing offsets, so an external queue can be swapped
in without touching the stages.
"""

from __future__ import annotations

import os
import re
import struct
import threading
import zlib
from pathlib import Path

from ..errors import NoTopic

_NAME = re.compile(r"^[A-Za-z0-9._-]+$")
_HEADER = struct.Struct(">I")


def _check_name(name: str, what: str) -> str:
    if not _NAME.match(name):
        raise ValueError(f"{what} name {name!r} must match {_NAME.pattern}")
    return name


def _scan_log(path: Path) -> list[bytes]:
    """All intact records in the file; stops at the first torn record."""
    try:
        data = path.read_bytes()
    except FileNotFoundError:
        return []
    messages = []
    pos = 0
    while pos + 8 <= len(data):
        (length,) = _HEADER.unpack_from(data, pos)
        end = pos + 4 + length + 4
        if end > len(data):
            break
        payload = data[pos + 4 : pos + 4 + length]
        (crc,) = _HEADER.unpack_from(data, pos + 4 + length)
        if crc != zlib.crc32(payload):
            break
        messages.append(payload)
        pos = end
    if pos < len(data):
        with open(path, "r+b") as handle:
            handle.truncate(pos)
    return messages


class MessageQueue:
    """Durable topic logs under one directory.

    ``fsync=True`` makes every append and commit survive a machine
    crash; the default flushes to the OS, which is durable across
    process crashes and is what the tests simulate.
    """

    def __init__(self, root: str | Path, fsync: bool = False):
        self._root = Path(root)
        self._fsync = fsync
        self._lock = threading.RLock()
        self._messages: dict[str, list[bytes]] = {}
        self._logs: dict[str, object] = {}
        (self._root / "logs").mkdir(parents=True, exist_ok=True)
        (self._root / "offsets").mkdir(parents=True, exist_ok=True)
        for path in sorted((self._root / "logs").glob("*.log")):
            self._open_topic(path.stem)

    def _log_path(self, topic: str) -> Path:
        return self._root / "logs" / f"{topic}.log"

    def _offset_path(self, topic: str, group: str) -> Path:
        return self._root / "offsets" / f"{topic}@{group}"

    def _open_topic(self, topic: str) -> None:
        self._messages[topic] = _scan_log(self._log_path(topic))
        self._logs[topic] = open(self._log_path(topic), "ab")

    def create_topic(self, name: str) -> None:
        """Create a topic; creating an existing topic is a no-op."""
        _check_name(name, "topic")
        with self._lock:
            if name not in self._messages:
                self._open_topic(name)

    def topics(self) -> list[str]:
        with self._lock:
            return sorted(self._messages)

    def _require(self, topic: str) -> list[bytes]:
        messages = self._messages.get(topic)
        if messages is None:
            raise NoTopic(f"unknown topic {topic!r}")
        return messages

    def publish(self, topic: str, message: bytes) -> int:
        """Durably append one message; returns its offset."""
        with self._lock:
            messages = self._require(topic)
            log = self._logs[topic]
            log.write(_HEADER.pack(len(message)))
            log.write(message)
            log.write(_HEADER.pack(zlib.crc32(message)))
            log.flush()
            if self._fsync:
                os.fsync(log.fileno())
            messages.append(bytes(message))
            return len(messages) - 1

    def read(self, topic: str, offset: int, max_messages: int = 1024) -> list[tuple[int, bytes]]:
        """Messages at offsets [offset, offset + max_messages)."""
        with self._lock:
            messages = self._require(topic)
            end = min(len(messages), offset + max_messages)
            return [(i, messages[i]) for i in range(max(offset, 0), end)]

    def end_offset(self, topic: str) -> int:
        with self._lock:
            return len(self._require(topic))

    def committed(self, topic: str, group: str) -> int:
        """Next offset the group should consume; 0 when never committed."""
        with self._lock:
            self._require(topic)
            try:
                return int(self._offset_path(topic, group).read_text())
            except FileNotFoundError:
                return 0

    def commit(self, topic: str, group: str, offset: int) -> None:
        """Atomically record the group's next offset. Never rewinds: a
        commit below the current one is ignored."""
        _check_name(group, "group")
        with self._lock:
            self._require(topic)
            if offset <= self.committed(topic, group):
                return
            self._write_offset(topic, group, offset)

    def replay(self, topic: str, group: str, offset: int = 0) -> None:
        """Operator override: rewind the group to ``offset`` so messages
        from there on are delivered again. Not reachable from commit()."""
        _check_name(group, "group")
        with self._lock:
            end = len(self._require(topic))
            if not 0 <= offset <= end:
                raise ValueError(f"offset {offset} outside [0, {end}]")
            self._write_offset(topic, group, offset)

    def _write_offset(self, topic: str, group: str, offset: int) -> None:
        path = self._offset_path(topic, group)
        temp = path.with_name(path.name + ".tmp")
        temp.write_text(str(offset))
        if self._fsync:
            fd = os.open(temp, os.O_RDONLY)
            try:
                os.fsync(fd)
            finally:
                os.close(fd)
        os.replace(temp, path)

    def lag(self, topic: str, group: str) -> int:
        """How many messages the group has not consumed yet."""
        with self._lock:
            return self.end_offset(topic) - self.committed(topic, group)

    def groups(self, topic: str) -> list[str]:
        """Consumer groups that have committed anything on the topic."""
        with self._lock:
            self._require(topic)
            prefix = f"{topic}@"
            return sorted(
                p.name[len(prefix):]
                for p in (self._root / "offsets").iterdir()
                if p.name.startswith(prefix) and not p.name.endswith(".tmp")
            )

    def close(self) -> None:
        with self._lock:
            for log in self._logs.values():
                log.close()
            self._logs.clear()
            self._messages.clear()

    def __enter__(self) -> "MessageQueue":
        return self

    def __exit__(self, *exc) -> None:
        self.close()

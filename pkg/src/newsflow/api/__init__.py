"""HTTP API: immutable snapshots and the /v1 FastAPI application."""

from .app import ApiException, create_app
from .snapshot import (
    MediumInfo,
    Snapshot,
    SnapshotHolder,
    build_snapshot,
    empty_snapshot,
)

__all__ = [
    "ApiException",
    "MediumInfo",
    "Snapshot",
    "SnapshotHolder",
    "build_snapshot",
    "create_app",
    "empty_snapshot",
]

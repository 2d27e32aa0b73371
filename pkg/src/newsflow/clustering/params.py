"""Clustering parameters with their defaults."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ClusteringParams:
    """Two-stage clustering knobs.

    window_days/window_overlap_days shape the sliding windows; t1 is the
    similarity-graph edge threshold; t2 the topic-merge threshold.
    weighted_edges keeps cosine weights on graph edges for modularity
    (set False for a binary graph). min_df prunes hapax vocabulary.
    """

    window_days: int = 6
    window_overlap_days: int = 3
    t1: float = 0.31
    t2: float = 0.8
    seed: int = 0
    weighted_edges: bool = True
    min_df: int = 2

    def __post_init__(self) -> None:
        if not 0 < self.window_overlap_days < self.window_days:
            raise ValueError("need 0 < overlap < window_days")
        if not (0 <= self.t1 <= 1 and 0 <= self.t2 <= 1):
            raise ValueError("thresholds must lie in [0, 1]")
        if self.min_df < 1:
            raise ValueError("min_df must be >= 1")

    @property
    def step_days(self) -> int:
        return self.window_days - self.window_overlap_days

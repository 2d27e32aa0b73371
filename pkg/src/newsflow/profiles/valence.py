"""Per-topic political valence of media from group citation counts."""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterable, Sequence

from newsflow.errors import RangeError, UndefinedValence

VALENCE_LABELS = ("far_left", "left", "center", "right", "far_right")
_BOUNDARIES = (-0.6, -0.2, 0.2, 0.6)

MIN_CITATIONS = 10


@dataclass(frozen=True)
class GroupCitationCounts:
    """How often the two user groups cite one medium within one topic."""

    medium_id: str
    topic_id: str
    tf_c0: int
    tf_c1: int
    total_c0: int
    total_c1: int

    def __post_init__(self) -> None:
        for name in ("tf_c0", "tf_c1", "total_c0", "total_c1"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")
        if self.tf_c0 > self.total_c0 or self.tf_c1 > self.total_c1:
            raise ValueError("per-medium citations cannot exceed group totals")

    @property
    def citations(self) -> int:
        return self.tf_c0 + self.tf_c1


@dataclass(frozen=True)
class ValenceRecord:
    medium_id: str
    topic_id: str
    score: float
    label: str


def valence(c: GroupCitationCounts) -> float:
    """Valence V = 2·r0/(r0 + r1) − 1 with r_i the group citation ratios.

    Computed as (r0 − r1)/(r0 + r1), which is the same quantity but is
    exactly antisymmetric under swapping the groups in floating point.
    Raises UndefinedValence when a group total is zero or the medium was
    never cited by either group.
    """
    if c.total_c0 <= 0 or c.total_c1 <= 0:
        raise UndefinedValence("group totals must both be positive")
    if c.tf_c0 == 0 and c.tf_c1 == 0:
        raise UndefinedValence("medium cited by neither group")
    r0 = c.tf_c0 / c.total_c0
    r1 = c.tf_c1 / c.total_c1
    return (r0 - r1) / (r0 + r1)


def valence_label(v: float, *, c0_is_right: bool = True) -> str:
    """Map a valence to one of five equal-width ranges over [−1, 1].

    Lower buckets are half-open (a boundary belongs to the bucket above
    it); the top bucket is closed at 1. The default orientation reads
    group C0 as the right-leaning one; pass c0_is_right=False to flip.
    """
    if not -1.0 <= v <= 1.0:
        raise RangeError(f"valence {v!r} outside [-1, 1]")
    if not c0_is_right:
        v = -v
        if v == 0.0:  # normalize -0.0 from the flip
            v = 0.0
    return VALENCE_LABELS[bisect_right(_BOUNDARIES, v)]


def valence_record(
    c: GroupCitationCounts, *, c0_is_right: bool = True
) -> ValenceRecord:
    score = valence(c)
    return ValenceRecord(
        c.medium_id, c.topic_id, score, valence_label(score, c0_is_right=c0_is_right)
    )


def compute_valences(
    counts: Iterable[GroupCitationCounts],
    *,
    min_citations: int = MIN_CITATIONS,
    c0_is_right: bool = True,
) -> list[ValenceRecord]:
    """ValenceRecords for media with at least ``min_citations`` citations.

    Output is sorted by (medium_id, topic_id). Counts failing the
    precondition (zero totals, never cited) are skipped, not fatal.
    """
    records = []
    for c in sorted(counts, key=lambda c: (c.medium_id, c.topic_id)):
        if c.citations < min_citations:
            continue
        try:
            records.append(valence_record(c, c0_is_right=c0_is_right))
        except UndefinedValence:
            continue
    return records

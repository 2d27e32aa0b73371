"""Per-medium profile aggregation."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Collection, Iterable, Mapping, Optional, Sequence

from newsflow.classifiers.frames import FRAME_LABELS
from newsflow.classifiers.propaganda import LABELS as PROPAGANDA_LABELS
from newsflow.classifiers.sourcelevel import SourceLabels
from newsflow.errors import NotFound
from newsflow.profiles.valence import (
    MIN_CITATIONS,
    GroupCitationCounts,
    ValenceRecord,
    compute_valences,
)

PROPAGANDISTIC = ("likely", "very_likely")
RELATED_STANCES = ("agree", "disagree", "discuss")


@dataclass(frozen=True)
class ArticleAnnotations:
    """One article's classifier outputs, as consumed by aggregation."""

    article_id: str
    medium_id: str
    section: str = ""
    propaganda_index: float = 0.0
    propaganda_label: str = "very_unlikely"
    frame_distribution: Mapping[str, float] = field(default_factory=dict)
    stances: Mapping[str, str] = field(default_factory=dict)  # claim_id -> label
    country: Optional[str] = None
    story_id: Optional[str] = None
    language: str = "en"


@dataclass(frozen=True)
class ClaimStance:
    """Stance histogram over a medium's related articles for one claim."""

    distribution: Mapping[str, float]  # agree/disagree/discuss, sums to 1
    coverage: float  # 1 − fraction of unrelated articles
    related_articles: int


@dataclass(frozen=True)
class MediaProfile:
    medium_id: str
    article_count: int
    propaganda_distribution: Mapping[str, float]
    frame_distribution: Mapping[str, float]
    stance_by_claim: Mapping[str, ClaimStance]
    factuality: Optional[str] = None
    bias: Optional[str] = None
    valences: tuple[ValenceRecord, ...] = ()


def _propaganda_distribution(articles: Sequence[ArticleAnnotations]) -> dict[str, float]:
    counts = {label: 0 for label in PROPAGANDA_LABELS}
    for a in articles:
        counts[a.propaganda_label] += 1
    n = len(articles)
    return {label: (c / n if n else 0.0) for label, c in counts.items()}


def _frame_distribution(articles: Sequence[ArticleAnnotations]) -> dict[str, float]:
    if not articles:
        return {frame: 0.0 for frame in FRAME_LABELS}
    acc = {frame: 0.0 for frame in FRAME_LABELS}
    for a in articles:
        for frame in FRAME_LABELS:
            acc[frame] += float(a.frame_distribution.get(frame, 0.0))
    return {frame: total / len(articles) for frame, total in acc.items()}


def _stance_by_claim(articles: Sequence[ArticleAnnotations]) -> dict[str, ClaimStance]:
    per_claim: dict[str, dict[str, int]] = {}
    for a in articles:
        for claim_id, label in a.stances.items():
            hist = per_claim.setdefault(
                claim_id, {"agree": 0, "disagree": 0, "discuss": 0, "unrelated": 0}
            )
            hist[label] += 1
    out: dict[str, ClaimStance] = {}
    for claim_id, hist in sorted(per_claim.items()):
        total = sum(hist.values())
        related = total - hist["unrelated"]
        coverage = related / total if total else 0.0
        if related:
            dist = {label: hist[label] / related for label in RELATED_STANCES}
        else:
            dist = {label: 0.0 for label in RELATED_STANCES}
        out[claim_id] = ClaimStance(dist, coverage, related)
    return out


def build_media_profile(
    medium_id: str,
    articles: Iterable[ArticleAnnotations],
    *,
    citations: Iterable[GroupCitationCounts] = (),
    source_labels: Mapping[str, SourceLabels] | None = None,
    known_media: Collection[str] | None = None,
    min_citations: int = MIN_CITATIONS,
    c0_is_right: bool = True,
) -> MediaProfile:
    """Aggregate classifier annotations into a medium's profile.

    Articles belonging to other media are filtered out, so the full
    annotation set may be passed. ``known_media``, when given, is the
    registry used to reject unknown medium ids with NotFound; a known
    medium with zero articles yields an empty profile. Factuality and
    bias come from the operator labels when present.
    """
    if known_media is not None and medium_id not in known_media:
        raise NotFound(f"unknown medium {medium_id!r}")
    own = sorted(
        (a for a in articles if a.medium_id == medium_id),
        key=lambda a: a.article_id,
    )
    labels = (source_labels or {}).get(medium_id)
    valences = tuple(
        r
        for r in compute_valences(
            citations, min_citations=min_citations, c0_is_right=c0_is_right
        )
        if r.medium_id == medium_id
    )
    return MediaProfile(
        medium_id=medium_id,
        article_count=len(own),
        propaganda_distribution=_propaganda_distribution(own),
        frame_distribution=_frame_distribution(own),
        stance_by_claim=_stance_by_claim(own),
        factuality=labels.factuality if labels else None,
        bias=labels.bias if labels else None,
        valences=valences,
    )

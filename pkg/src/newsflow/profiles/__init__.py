"""Media and topic profile aggregation."""

from newsflow.profiles.valence import (
    MIN_CITATIONS,
    VALENCE_LABELS,
    GroupCitationCounts,
    ValenceRecord,
    compute_valences,
    valence,
    valence_label,
    valence_record,
)
from newsflow.profiles.inputs import (
    Claim,
    CitationRow,
    aggregate_citations,
    load_citations,
    load_claims,
)
from newsflow.profiles.media import (
    PROPAGANDISTIC,
    ArticleAnnotations,
    ClaimStance,
    MediaProfile,
    build_media_profile,
)
from newsflow.profiles.topicstats import (
    MediumTopicCount,
    TopicStats,
    build_topic_stats,
)

__all__ = [
    "ArticleAnnotations",
    "CitationRow",
    "Claim",
    "ClaimStance",
    "GroupCitationCounts",
    "MIN_CITATIONS",
    "MediaProfile",
    "MediumTopicCount",
    "PROPAGANDISTIC",
    "TopicStats",
    "VALENCE_LABELS",
    "ValenceRecord",
    "aggregate_citations",
    "build_media_profile",
    "build_topic_stats",
    "compute_valences",
    "load_citations",
    "load_claims",
    "valence",
    "valence_label",
    "valence_record",
]

"""Media frame detection with a keyword-lexicon baseline."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources
from typing import Callable, Mapping, Optional

from newsflow.textproc import preprocess

FRAME_LABELS = (
    "economic",
    "capacity_and_resources",
    "morality",
    "fairness_and_equality",
    "legality_constitutionality_jurisprudence",
    "policy_prescription_and_evaluation",
    "crime_and_punishment",
    "security_and_defense",
    "health_and_safety",
    "quality_of_life",
    "cultural_identity",
    "public_opinion",
    "political",
    "external_regulation_and_reputation",
    "other",
)

FrameBackend = Callable[[str], Mapping[str, float]]

_registered_backend: Optional[FrameBackend] = None


@lru_cache(maxsize=1)
def _lexicon() -> dict[str, frozenset[str]]:
    raw = json.loads(
        resources.files("newsflow.textproc")
        .joinpath("data", "frame_lexicon_en.json")
        .read_text("utf-8")
    )
    return {frame: frozenset(words) for frame, words in raw.items()}


def register_frame_backend(backend: Optional[FrameBackend]) -> None:
    """Install (or with None, remove) the process-wide frame plugin."""
    global _registered_backend
    _registered_backend = backend


def baseline_frames(article_body: str, language: str = "en") -> dict[str, float]:
    """Normalized keyword hit counts per frame; uniform when no hits."""
    tokens = preprocess(article_body, language)
    lexicon = _lexicon()
    hits = {
        frame: sum(1 for t in tokens if t in lexicon.get(frame, frozenset()))
        for frame in FRAME_LABELS
    }
    total = sum(hits.values())
    if total == 0:
        uniform = 1.0 / len(FRAME_LABELS)
        return {frame: uniform for frame in FRAME_LABELS}
    return {frame: count / total for frame, count in hits.items()}


def classify_frame(
    article_body: str, impl: Optional[FrameBackend] = None
) -> dict[str, float]:
    """Frame probability map over the fixed label set, summing to 1."""
    backend = impl or _registered_backend
    if backend is not None:
        raw = dict(backend(article_body))
        out = {frame: max(float(raw.get(frame, 0.0)), 0.0) for frame in FRAME_LABELS}
        total = sum(out.values())
        if total <= 0:
            uniform = 1.0 / len(FRAME_LABELS)
            return {frame: uniform for frame in FRAME_LABELS}
        return {frame: v / total for frame, v in out.items()}
    return baseline_frames(article_body)

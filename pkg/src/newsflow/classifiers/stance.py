"""Stance of an article body toward a claim.

The real work is expected from a registered plugin (the interface is a
plain callable). The shipped baseline is lexical: relatedness by
IDF-weighted token Jaccard computed per sentence, then agree/disagree by
a polarity-lexicon score over the claim-adjacent sentences, with a
neutral band mapping to "discuss".
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Callable, Optional

from newsflow.errors import NoStanceBackend
from newsflow.textproc import preprocess, split_sentences

STANCE_LABELS = ("agree", "disagree", "discuss", "unrelated")

StanceBackend = Callable[[str, str], str]

_registered_backend: Optional[StanceBackend] = None


@dataclass(frozen=True)
class StanceConfig:
    theta_u: float = 0.05
    neutral_band: tuple[float, float] = (-0.1, 0.1)
    language: str = "en"
    use_baseline: bool = True


DEFAULT_CONFIG = StanceConfig()


@lru_cache(maxsize=None)
def _polarity_lexicon(sign: str) -> frozenset[str]:
    name = f"polarity_{sign}_en.txt"
    text = resources.files("newsflow.textproc").joinpath("data", name).read_text("utf-8")
    return frozenset(
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.startswith("#")
    )


def register_stance_backend(backend: Optional[StanceBackend]) -> None:
    """Install (or with None, remove) the process-wide stance plugin."""
    global _registered_backend
    _registered_backend = backend


def _sentence_overlaps(
    sentences: list[list[str]], claim_tokens: set[str]
) -> list[float]:
    """IDF-weighted Jaccard between each sentence and the claim.

    IDF comes from sentence-level document frequencies within the
    article itself, so the computation needs no external corpus.
    """
    n = len(sentences)
    df: dict[str, int] = {}
    for tokens in sentences:
        for t in set(tokens):
            df[t] = df.get(t, 0) + 1

    def weight(token: str) -> float:
        return math.log((1 + n) / (1 + df.get(token, 0))) + 1.0

    overlaps = []
    for tokens in sentences:
        ts = set(tokens)
        union = ts | claim_tokens
        if not union:
            overlaps.append(0.0)
            continue
        inter = ts & claim_tokens
        overlaps.append(
            sum(weight(t) for t in inter) / sum(weight(t) for t in union)
        )
    return overlaps


def polarity_score(tokens: list[str]) -> float:
    """Signed lexicon score in [-1, 1]; 0 when no polar tokens occur."""
    pos = sum(1 for t in tokens if t in _polarity_lexicon("positive"))
    neg = sum(1 for t in tokens if t in _polarity_lexicon("negative"))
    if pos + neg == 0:
        return 0.0
    return (pos - neg) / (pos + neg)


def baseline_stance(
    article_body: str, claim: str, config: StanceConfig = DEFAULT_CONFIG
) -> str:
    """Deterministic lexical stance baseline; total over UTF-8 inputs."""
    claim_tokens = set(preprocess(claim, config.language))
    if not claim_tokens:
        return "unrelated"
    raw_sentences = split_sentences(article_body)
    sentences = [preprocess(s, config.language) for s in raw_sentences]
    overlaps = _sentence_overlaps(sentences, claim_tokens)
    best = max(overlaps, default=0.0)
    if best < config.theta_u:
        return "unrelated"
    adjacent: list[str] = []
    for tokens, overlap in zip(sentences, overlaps):
        if overlap >= config.theta_u:
            adjacent.extend(tokens)
    score = polarity_score(adjacent)
    low, high = config.neutral_band
    if low <= score <= high:
        return "discuss"
    return "agree" if score > high else "disagree"


def classify_stance(
    article_body: str,
    claim: str,
    impl: Optional[StanceBackend] = None,
    config: StanceConfig = DEFAULT_CONFIG,
) -> str:
    """Stance of ``article_body`` toward ``claim``.

    Resolution order: explicit ``impl``, then the registered backend,
    then the baseline unless disabled, else NoStanceBackend.
    """
    backend = impl or _registered_backend
    if backend is not None:
        label = backend(article_body, claim)
        if label not in STANCE_LABELS:
            raise ValueError(f"stance backend returned unknown label {label!r}")
        return label
    if not config.use_baseline:
        raise NoStanceBackend("no stance plugin registered and baseline disabled")
    return baseline_stance(article_body, claim, config)

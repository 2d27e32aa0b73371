"""Propaganda index: stylometric binary classifier plus label buckets."""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Any, Sequence

import scipy.sparse as sp

from newsflow.classifiers.maxent import LinearModel, predict_proba, train_maxent
from newsflow.classifiers.section import article_text
from newsflow.classifiers.serialize import FeatureSpace
from newsflow.errors import NotFitted, RangeError
from newsflow.textproc.style import style_features
from newsflow.util import fnv1a64

LABELS = ("very_unlikely", "unlikely", "somehow", "likely", "very_likely")
BOUNDARIES = (0.2, 0.4, 0.6, 0.8)
CLASSES = ("non_propagandistic", "propagandistic")

NGRAM_BITS = 18
NGRAM_DIM = 1 << NGRAM_BITS
N_STYLE = 6
FEATURE_DIM = N_STYLE + NGRAM_DIM


@dataclass(frozen=True)
class PropagandaResult:
    index: float
    label: str


def propaganda_label(p: float) -> str:
    """Bucket a propaganda index; boundaries belong to the upper bucket."""
    if not 0.0 <= p <= 1.0:
        raise RangeError(f"propaganda index {p!r} outside [0, 1]")
    return LABELS[bisect_right(BOUNDARIES, p)]


def propaganda_features(text: str) -> sp.csr_matrix:
    """Style scalars joined with hashed char n-gram frequencies.

    N-gram counts are hashed into a fixed 2^18 slot block (FNV-1a mod
    table size) and L1-normalized so feature scale does not track
    document length.
    """
    sf = style_features(text)
    entries: dict[int, float] = {}
    style_block = (
        sf.type_token_ratio,
        sf.hapax_ratio,
        sf.avg_sentence_length,
        sf.avg_word_length,
        sf.flesch_reading_ease / 100.0,
        sf.long_word_ratio,
    )
    for i, value in enumerate(style_block):
        if value != 0.0:
            entries[i] = value
    total = sum(sf.char_ngram_counts.values())
    if total:
        for gram, count in sf.char_ngram_counts.items():
            slot = N_STYLE + (fnv1a64(gram.encode("utf-8")) % NGRAM_DIM)
            entries[slot] = entries.get(slot, 0.0) + count / total
    items = sorted(entries.items())
    indices = [i for i, _ in items]
    data = [w for _, w in items]
    return sp.csr_matrix((data, indices, [0, len(data)]), shape=(1, FEATURE_DIM))


def propaganda_feature_space() -> FeatureSpace:
    return FeatureSpace(
        "style_ngrams",
        FEATURE_DIM,
        {"n_style": N_STYLE, "ngram_bits": NGRAM_BITS},
    )


def train_propaganda_model(
    samples: Sequence[tuple[str, bool]],
    *,
    l2: float = 1e-4,
    max_iter: int = 300,
    tol: float = 1e-5,
) -> LinearModel:
    """Train the binary stylometric model from (text, is_propaganda) pairs."""
    rows = [
        (propaganda_features(text), CLASSES[1] if flag else CLASSES[0])
        for text, flag in samples
    ]
    return train_maxent(
        rows, l2=l2, max_iter=max_iter, tol=tol, feature_space=propaganda_feature_space()
    )


def propaganda_score(article: Any, model: LinearModel) -> PropagandaResult:
    """Propaganda index (probability of the propagandistic class) + label."""
    if model is None:
        raise NotFitted("no propaganda model")
    if model.feature_space.kind != "style_ngrams":
        raise NotFitted(
            f"expected a style_ngrams model, got {model.feature_space.kind!r}"
        )
    probs = predict_proba(model, propaganda_features(article_text(article)))
    p = float(probs[model.classes.index(CLASSES[1])])
    return PropagandaResult(index=p, label=propaganda_label(p))

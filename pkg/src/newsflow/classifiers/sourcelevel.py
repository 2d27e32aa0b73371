"""Source-level factuality and bias classification.

A medium is represented by the mean of its articles' stylometric feature
vectors; training labels come from an operator-supplied CSV file
(medium_id,factuality,bias).
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping, Sequence

import scipy.sparse as sp

from newsflow.classifiers.maxent import LinearModel, predict, train_maxent
from newsflow.classifiers.propaganda import propaganda_feature_space, propaganda_features
from newsflow.errors import ParseError

FACTUALITY_LABELS = ("low", "mixed", "high")
BIAS_LABELS = (
    "far_left",
    "left",
    "center_left",
    "center",
    "center_right",
    "right",
    "far_right",
)
_BIAS_INDEX = {label: i for i, label in enumerate(BIAS_LABELS)}
_BIAS_CENTER = len(BIAS_LABELS) // 2


@dataclass(frozen=True)
class SourceLabels:
    factuality: str
    bias: str


def medium_features(article_texts: Iterable[str]) -> sp.csr_matrix:
    """Mean of the per-article stylometric feature rows."""
    rows = [propaganda_features(t) for t in article_texts]
    if not rows:
        return sp.csr_matrix((1, propaganda_feature_space().dim))
    return sp.csr_matrix(sp.vstack(rows).mean(axis=0))


def load_source_labels(path: str | Path) -> dict[str, SourceLabels]:
    """Parse the operator labels CSV: medium_id,factuality,bias."""
    out: dict[str, SourceLabels] = {}
    with open(path, newline="", encoding="utf-8") as fh:
        for row_no, row in enumerate(csv.reader(fh), start=1):
            if not row or row[0].startswith("#"):
                continue
            if row_no == 1 and [c.strip().lower() for c in row[:3]] == [
                "medium_id", "factuality", "bias",
            ]:
                continue
            if len(row) != 3:
                raise ParseError(f"labels row {row_no}: expected 3 fields, got {len(row)}")
            medium_id, factuality, bias = (c.strip() for c in row)
            if factuality not in FACTUALITY_LABELS:
                raise ParseError(f"labels row {row_no}: unknown factuality {factuality!r}")
            if bias not in BIAS_LABELS:
                raise ParseError(f"labels row {row_no}: unknown bias {bias!r}")
            out[medium_id] = SourceLabels(factuality, bias)
    return out


def train_source_model(
    media_texts: Mapping[str, Sequence[str]],
    labels: Mapping[str, SourceLabels],
    target: str,
    *,
    l2: float = 1e-3,
    max_iter: int = 300,
) -> LinearModel:
    """Train the factuality or bias model over labeled media.

    ``target`` is "factuality" or "bias"; media without a label are
    skipped.
    """
    if target not in ("factuality", "bias"):
        raise ValueError(f"unknown target {target!r}")
    samples = []
    for medium_id, texts in sorted(media_texts.items()):
        lab = labels.get(medium_id)
        if lab is None:
            continue
        samples.append((medium_features(texts), getattr(lab, target)))
    return train_maxent(
        samples, l2=l2, max_iter=max_iter, feature_space=propaganda_feature_space()
    )


def classify_source(model: LinearModel, article_texts: Sequence[str]) -> str:
    return predict(model, medium_features(article_texts))


def hyper_partisanship(bias: str) -> float:
    """Distance of a bias label from center, scaled to [0, 1]."""
    if bias not in _BIAS_INDEX:
        raise ValueError(f"unknown bias label {bias!r}")
    return abs(_BIAS_INDEX[bias] - _BIAS_CENTER) / _BIAS_CENTER

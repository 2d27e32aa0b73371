"""TF-IDF vectorization and cosine similarity.

Vectors are sparse, index-sorted, and L2-normalized at construction, so
cosine similarity reduces to a sparse dot product. The IDF is the
smoothed variant ln((1 + N) / (1 + df)); terms present in every document
therefore get zero weight and are dropped from the vector.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from newsflow.errors import EmptyCorpus


@dataclass(frozen=True)
class SparseVector:
    """An L2-normalized sparse vector with strictly increasing indices."""

    indices: tuple[int, ...] = ()
    weights: tuple[float, ...] = ()

    def __post_init__(self) -> None:
        if len(self.indices) != len(self.weights):
            raise ValueError("indices and weights must have equal length")
        if any(b <= a for a, b in zip(self.indices, self.indices[1:])):
            raise ValueError("indices must be strictly increasing")
        if any(w == 0.0 for w in self.weights):
            raise ValueError("zero weights must not be stored")

    def __len__(self) -> int:
        return len(self.indices)

    def norm(self) -> float:
        return math.sqrt(math.fsum(w * w for w in self.weights))

    @classmethod
    def from_mapping(cls, entries: Mapping[int, float], normalize: bool = True) -> "SparseVector":
        """Build a vector from an index -> weight map, dropping zeros."""
        items = sorted((i, w) for i, w in entries.items() if w != 0.0)
        if not items:
            return cls()
        if normalize:
            norm = math.sqrt(math.fsum(w * w for _, w in items))
            if norm == 0.0:  # squares of subnormal weights underflow
                return cls()
            items = [(i, w / norm) for i, w in items]
            items = [(i, w) for i, w in items if w != 0.0]
        return cls(tuple(i for i, _ in items), tuple(w for _, w in items))


@dataclass(frozen=True)
class Vocabulary:
    """Term -> index map with exact document frequencies.

    Indices are dense in [0, len(terms)) and assigned in lexicographic
    term order, which keeps fitting deterministic across runs.
    """

    terms: tuple[str, ...]
    document_frequency: tuple[int, ...]
    n_docs: int
    index: Mapping[str, int] = field(repr=False, compare=False, default=None)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "index", {t: i for i, t in enumerate(self.terms)}
        )

    def __len__(self) -> int:
        return len(self.terms)

    def __contains__(self, term: str) -> bool:
        return term in self.index

    def df(self, term: str) -> int:
        i = self.index.get(term)
        return 0 if i is None else self.document_frequency[i]


def fit_vocabulary(docs: Sequence[Iterable[str]], min_df: int = 1) -> Vocabulary:
    """Fit a vocabulary over tokenized documents.

    Terms occurring in fewer than ``min_df`` documents are excluded.
    Raises EmptyCorpus when ``docs`` is empty.
    """
    if not docs:
        raise EmptyCorpus("cannot fit a vocabulary on an empty corpus")
    df: Counter[str] = Counter()
    n_docs = 0
    for doc in docs:
        n_docs += 1
        df.update(set(doc))
    terms = tuple(sorted(t for t, c in df.items() if c >= min_df))
    return Vocabulary(terms, tuple(df[t] for t in terms), n_docs)


def tfidf(doc: Iterable[str], vocab: Vocabulary) -> SparseVector:
    """Compute the L2-normalized TF-IDF vector of a tokenized document.

    weight(t) = tf(t) * ln((1 + n_docs) / (1 + df(t))); out-of-vocabulary
    terms and zero weights are dropped. A document with no weighted terms
    yields the empty vector.
    """
    tf = Counter(doc)
    entries: dict[int, float] = {}
    for term, count in tf.items():
        i = vocab.index.get(term)
        if i is None:
            continue
        idf = math.log((1 + vocab.n_docs) / (1 + vocab.document_frequency[i]))
        if idf != 0.0:
            entries[i] = count * idf
    return SparseVector.from_mapping(entries)


def cosine(a: SparseVector, b: SparseVector) -> float:
    """Dot product of two normalized sparse vectors; 0 if either is empty."""
    if not a.indices or not b.indices:
        return 0.0
    dot = 0.0
    i = j = 0
    ai, bi = a.indices, b.indices
    aw, bw = a.weights, b.weights
    while i < len(ai) and j < len(bi):
        if ai[i] == bi[j]:
            dot += aw[i] * bw[j]
            i += 1
            j += 1
        elif ai[i] < bi[j]:
            i += 1
        else:
            j += 1
    return dot

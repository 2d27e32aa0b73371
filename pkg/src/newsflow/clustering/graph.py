"""All-pairs similarity graphs over article vectors."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np
import scipy.sparse as sp

from newsflow.textproc.vectorize import SparseVector, cosine

DENSE_PAIR_CUTOFF = 64  # below this, plain pairwise loops beat matrix setup


@dataclass(frozen=True)
class SimilarityGraph:
    """Undirected weighted graph; every edge weight is >= the threshold."""

    nodes: tuple[str, ...]
    edges: tuple[tuple[str, str, float], ...]
    adjacency: Mapping[str, Mapping[str, float]] = field(
        repr=False, compare=False, default=None  # type: ignore[assignment]
    )

    def __post_init__(self) -> None:
        adj: dict[str, dict[str, float]] = {n: {} for n in self.nodes}
        for a, b, w in self.edges:
            if a == b:
                raise ValueError("self-loops are not allowed")
            adj[a][b] = w
            adj[b][a] = w
        object.__setattr__(self, "adjacency", adj)

    def neighbors(self, node: str) -> Mapping[str, float]:
        return self.adjacency[node]

    @property
    def total_weight(self) -> float:
        return sum(w for _, _, w in self.edges)


def build_graph(
    article_ids: Iterable[str],
    vectors: Mapping[str, SparseVector],
    t1: float = 0.31,
    *,
    weighted: bool = True,
) -> SimilarityGraph:
    """Connect article pairs whose cosine similarity reaches t1.

    The threshold is inclusive. With ``weighted`` False all edges get
    weight 1 instead of the similarity.
    """
    ids = sorted(set(article_ids))
    edges: list[tuple[str, str, float]] = []
    if len(ids) >= DENSE_PAIR_CUTOFF:
        dim = max((v.indices[-1] + 1 for v in (vectors[i] for i in ids) if v.indices),
                  default=0)
        rows = []
        for aid in ids:
            v = vectors[aid]
            rows.append(
                sp.csr_matrix(
                    (v.weights, v.indices, [0, len(v.indices)]), shape=(1, dim)
                )
            )
        M = sp.vstack(rows, format="csr")
        sims = (M @ M.T).tocoo()
        for i, j, w in zip(sims.row, sims.col, sims.data):
            if i < j and w >= t1:
                edges.append((ids[i], ids[j], float(w) if weighted else 1.0))
        edges.sort()
    else:
        for i, a in enumerate(ids):
            va = vectors[a]
            for b in ids[i + 1 :]:
                w = cosine(va, vectors[b])
                if w >= t1:
                    edges.append((a, b, w if weighted else 1.0))
    return SimilarityGraph(tuple(ids), tuple(edges))

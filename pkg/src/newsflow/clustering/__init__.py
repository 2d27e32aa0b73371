"""Two-stage event clustering and its evaluation metrics."""

from newsflow.clustering.params import ClusteringParams
from newsflow.clustering.windows import Window, make_windows
from newsflow.clustering.graph import SimilarityGraph, build_graph
from newsflow.clustering.louvain import louvain, modularity
from newsflow.clustering.topics import (
    ClusterResult,
    Story,
    Topic,
    cluster_stories,
    cluster_window,
    merge_topics,
    merge_windows,
)
from newsflow.clustering.metrics import bcubed_f1, pairwise_f1

__all__ = [
    "ClusterResult",
    "ClusteringParams",
    "SimilarityGraph",
    "Story",
    "Topic",
    "Window",
    "bcubed_f1",
    "build_graph",
    "cluster_stories",
    "cluster_window",
    "louvain",
    "make_windows",
    "merge_topics",
    "merge_windows",
    "modularity",
    "pairwise_f1",
]

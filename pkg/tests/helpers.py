"""Shared test oracles, implemented independently of the library code.

Everything here trades speed for obvious correctness: exhaustive
enumeration and per-item double loops, used to cross-check the
production implementations.
"""

from functools import lru_cache
from itertools import combinations

import numpy as np


def all_partitions(items):
    """Yield every set partition of ``items`` as a list of sets."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in all_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [part[i] | {first}] + part[i + 1 :]
        yield part + [{first}]


def partition_mapping(blocks):
    """list-of-sets partition -> item -> block-index mapping."""
    return {item: i for i, block in enumerate(blocks) for item in block}


@lru_cache(maxsize=None)
def rgs_matrix(n: int) -> np.ndarray:
    """All set partitions of n items as restricted-growth label rows."""
    if n == 0:
        return np.zeros((1, 0), dtype=np.int8)
    rows = []

    def grow(prefix, maximum):
        if len(prefix) == n:
            rows.append(prefix)
            return
        for label in range(maximum + 2):
            grow(prefix + [label], max(maximum, label))

    grow([0], 0)
    return np.array(rows, dtype=np.int8)


def exhaustive_best_modularity(graph):
    """Maximum modularity over every partition, by brute force.

    Returns (best_q, best_mapping). Vectorized over the full partition
    table so graphs up to ~10 nodes stay fast.
    """
    nodes = list(graph.nodes)
    n = len(nodes)
    index = {node: i for i, node in enumerate(nodes)}
    m = graph.total_weight
    table = rgs_matrix(n)
    if m == 0:
        return 0.0, {node: i for i, node in enumerate(nodes)}
    A = np.zeros((n, n))
    k = np.zeros(n)
    for a, b, w in graph.edges:
        i, j = index[a], index[b]
        A[i, j] = A[j, i] = w
        k[i] += w
        k[j] += w
    q = np.full(table.shape[0], -float((k * k).sum()) / (4 * m * m))
    for i, j in combinations(range(n), 2):
        contrib = (A[i, j] - k[i] * k[j] / (2 * m)) / m
        if contrib != 0.0:
            q[table[:, i] == table[:, j]] += contrib
    best = int(np.argmax(q))
    mapping = {node: int(table[best, index[node]]) for node in nodes}
    return float(q[best]), mapping


def bcubed_reference(predicted, gold):
    """Per-item double-loop BCubed, straight from the definition."""
    items = list(predicted)
    n = len(items)
    if n == 0:
        return {"precision": 1.0, "recall": 1.0, "f1": 1.0}
    precision = 0.0
    recall = 0.0
    for i in items:
        same_pred = [j for j in items if predicted[j] == predicted[i]]
        same_gold = [j for j in items if gold[j] == gold[i]]
        both = [j for j in same_pred if gold[j] == gold[i]]
        precision += len(both) / len(same_pred)
        recall += len([j for j in same_gold if predicted[j] == predicted[i]]) / len(
            same_gold
        )
    precision /= n
    recall /= n
    f1 = 0.0 if precision + recall == 0 else 2 * precision * recall / (precision + recall)
    return {"precision": precision, "recall": recall, "f1": f1}


def pairwise_reference(predicted, gold):
    """Pair-by-pair loop over all unordered item pairs."""
    items = list(predicted)
    tp = fp = fn = 0
    for a, b in combinations(items, 2):
        same_p = predicted[a] == predicted[b]
        same_g = gold[a] == gold[b]
        tp += same_p and same_g
        fp += same_p and not same_g
        fn += same_g and not same_p
    precision = tp / (tp + fp) if tp + fp else 1.0
    recall = tp / (tp + fn) if tp + fn else 1.0
    f1 = 0.0 if precision + recall == 0 else 2 * precision * recall / (precision + recall)
    return {"precision": precision, "recall": recall, "f1": f1}

"""Clustering evaluation: BCubed and pairwise precision/recall/F1."""

from __future__ import annotations

from collections import Counter
from typing import Hashable, Mapping

from newsflow.errors import PartitionMismatch

Partition = Mapping[Hashable, Hashable]


def _check_items(predicted: Partition, gold: Partition) -> None:
    if set(predicted) != set(gold):
        only_p = len(set(predicted) - set(gold))
        only_g = len(set(gold) - set(predicted))
        raise PartitionMismatch(
            f"item sets differ: {only_p} only predicted, {only_g} only gold"
        )


def _f1(p: float, r: float) -> float:
    if p + r == 0:
        return 0.0
    return 2 * p * r / (p + r)


def bcubed_f1(predicted: Partition, gold: Partition) -> dict[str, float]:
    """BCubed precision/recall/F1 of a predicted clustering.

    Per-item precision is the fraction of the item's predicted cluster
    sharing its gold label (self included); recall swaps the roles. Both
    are averaged over items. Computed here from the cluster × label
    contingency table: the average collapses to
    (1/N) Σ_c Σ_g n_cg² / |c| for precision and dually for recall.
    Empty partitions compare equal with all scores 1.
    """
    _check_items(predicted, gold)
    n = len(predicted)
    if n == 0:
        return {"precision": 1.0, "recall": 1.0, "f1": 1.0}
    pred_sizes: Counter = Counter(predicted.values())
    gold_sizes: Counter = Counter(gold.values())
    joint: Counter = Counter((predicted[i], gold[i]) for i in predicted)
    precision = sum(c * c / pred_sizes[pc] for (pc, _), c in joint.items()) / n
    recall = sum(c * c / gold_sizes[gc] for (_, gc), c in joint.items()) / n
    return {"precision": precision, "recall": recall, "f1": _f1(precision, recall)}


def pairwise_f1(predicted: Partition, gold: Partition) -> dict[str, float]:
    """Pair-counting precision/recall/F1.

    Unordered item pairs co-clustered in the prediction form the
    positive predictions; pairs co-clustered in gold form the positive
    ground truth. A side with no positive pairs contributes 1.0
    (vacuous truth), so two all-singleton partitions score F1 = 1.
    """
    _check_items(predicted, gold)

    def same_pairs(sizes: Counter) -> int:
        return sum(c * (c - 1) // 2 for c in sizes.values())

    pred_pairs = same_pairs(Counter(predicted.values()))
    gold_pairs = same_pairs(Counter(gold.values()))
    true_pairs = same_pairs(Counter((predicted[i], gold[i]) for i in predicted))
    precision = true_pairs / pred_pairs if pred_pairs else 1.0
    recall = true_pairs / gold_pairs if gold_pairs else 1.0
    return {"precision": precision, "recall": recall, "f1": _f1(precision, recall)}

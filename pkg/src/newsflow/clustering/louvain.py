"""Weighted-modularity Louvain community detection.

Deterministic by construction: node visit order comes from a seeded
shuffle, equal-gain moves break toward the lowest community id, and
aggregation renumbers communities by first appearance in node order.
"""

from __future__ import annotations

import random
from typing import Mapping

from newsflow.clustering.graph import SimilarityGraph


def modularity(graph: SimilarityGraph, partition: Mapping[str, int]) -> float:
    """Weighted Newman modularity of a node -> community assignment.

    Q = (1/2m) Σ_ij [A_ij − k_i k_j / 2m] δ(c_i, c_j); graphs without
    edges get Q = 0 by convention.
    """
    m = graph.total_weight
    if m == 0:
        return 0.0
    internal: dict[int, float] = {}
    degree_sum: dict[int, float] = {}
    for node in graph.nodes:
        c = partition[node]
        k = sum(graph.adjacency[node].values())
        degree_sum[c] = degree_sum.get(c, 0.0) + k
    for a, b, w in graph.edges:
        if partition[a] == partition[b]:
            internal[partition[a]] = internal.get(partition[a], 0.0) + w
    q = 0.0
    for c, tot in degree_sum.items():
        q += internal.get(c, 0.0) / m - (tot / (2 * m)) ** 2
    return q


class _Working:
    """Aggregated graph state during Louvain passes."""

    def __init__(self, adjacency: dict[int, dict[int, float]], loops: dict[int, float]):
        self.adj = adjacency  # neighbor weights, no self entries
        self.loops = loops  # self-loop weight per node (counted once)
        self.degree = {
            i: sum(nbrs.values()) + 2 * loops.get(i, 0.0)
            for i, nbrs in adjacency.items()
        }
        self.m = sum(self.degree.values()) / 2


def _local_move(work: _Working, rng: random.Random) -> tuple[dict[int, int], bool]:
    """One phase of greedy node moves; returns (community map, moved?)."""
    nodes = sorted(work.adj)
    community = {i: i for i in nodes}
    # tot[c] = sum of degrees of nodes in community c
    tot = {i: work.degree[i] for i in nodes}
    order = list(nodes)
    rng.shuffle(order)
    m = work.m
    moved_any = False
    improved = True
    while improved:
        improved = False
        for node in order:
            home = community[node]
            k = work.degree[node]
            # weights from node to each neighboring community
            links: dict[int, float] = {}
            for nbr, w in work.adj[node].items():
                c = community[nbr]
                links[c] = links.get(c, 0.0) + w
            tot[home] -= k
            community[node] = -1
            best_c = home
            best_gain = links.get(home, 0.0) / m - tot[home] * k / (2 * m * m)
            for c in sorted(links):
                gain = links[c] / m - tot[c] * k / (2 * m * m)
                if gain > best_gain or (gain == best_gain and c < best_c):
                    best_gain = gain
                    best_c = c
            community[node] = best_c
            tot[best_c] += k
            if best_c != home:
                improved = True
                moved_any = True
    return community, moved_any


def _aggregate(work: _Working, community: dict[int, int]) -> tuple[_Working, dict[int, int]]:
    """Collapse communities into supernodes; returns (graph, node -> supernode)."""
    relabel: dict[int, int] = {}
    for node in sorted(community):
        c = community[node]
        if c not in relabel:
            relabel[c] = len(relabel)
    mapping = {node: relabel[community[node]] for node in community}
    adj: dict[int, dict[int, float]] = {c: {} for c in range(len(relabel))}
    loops: dict[int, float] = {}
    for node, nbrs in work.adj.items():
        a = mapping[node]
        for nbr, w in nbrs.items():
            b = mapping[nbr]
            if a == b:
                if node < nbr:
                    loops[a] = loops.get(a, 0.0) + w
            else:
                adj[a][b] = adj[a].get(b, 0.0) + w
    for node, w in work.loops.items():
        a = mapping[node]
        loops[a] = loops.get(a, 0.0) + w
    return _Working(adj, loops), mapping


def louvain(
    graph: SimilarityGraph,
    seed: int = 0,
    trace: list[float] | None = None,
) -> dict[str, int]:
    """Partition graph nodes into communities maximizing modularity.

    Isolated nodes become singletons. Community ids are dense, numbered
    by first appearance in the graph's node order. When ``trace`` is
    given, the modularity of the partition at the start and after each
    pass is appended to it; the sequence never decreases because every
    accepted move strictly increases Q.
    """
    nodes = graph.nodes
    if not nodes:
        return {}
    index = {n: i for i, n in enumerate(nodes)}
    if not graph.edges:
        if trace is not None:
            trace.append(0.0)
        return {n: i for i, n in enumerate(nodes)}

    adj: dict[int, dict[int, float]] = {i: {} for i in range(len(nodes))}
    for a, b, w in graph.edges:
        adj[index[a]][index[b]] = w
        adj[index[b]][index[a]] = w
    work = _Working(adj, {})
    rng = random.Random(seed)

    # node -> current supernode, refined each pass; every accepted move
    # strictly increases Q, so each pass shrinks the aggregated graph
    # and the loop terminates.
    assign = {i: i for i in range(len(nodes))}
    if trace is not None:
        trace.append(modularity(graph, {n: index[n] for n in nodes}))
    while True:
        community, moved = _local_move(work, rng)
        if not moved:
            break
        work, mapping = _aggregate(work, community)
        assign = {i: mapping[assign[i]] for i in assign}
        if trace is not None:
            trace.append(modularity(graph, {n: assign[index[n]] for n in nodes}))

    # renumber communities by first appearance in node order
    relabel: dict[int, int] = {}
    out: dict[str, int] = {}
    for i, n in enumerate(nodes):
        c = assign[i]
        if c not in relabel:
            relabel[c] = len(relabel)
        out[n] = relabel[c]
    return out

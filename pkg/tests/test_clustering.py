"""Windows, similarity graphs, Louvain, merging, and metrics."""

import math
from dataclasses import dataclass
from datetime import datetime, timedelta, timezone
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import (
    all_partitions,
    bcubed_reference,
    exhaustive_best_modularity,
    pairwise_reference,
    partition_mapping,
)
from newsflow.clustering import (
    ClusteringParams,
    SimilarityGraph,
    Topic,
    Window,
    bcubed_f1,
    build_graph,
    cluster_stories,
    louvain,
    make_windows,
    merge_topics,
    merge_windows,
    modularity,
    pairwise_f1,
)
from newsflow.errors import PartitionMismatch
from newsflow.textproc import SparseVector

UTC = timezone.utc
DAY0 = datetime(2025, 3, 1, tzinfo=UTC)


@dataclass(frozen=True)
class Art:
    id: str
    published_at: datetime
    title: str = ""
    body: str = ""
    language: str = "en"


def at_day(day: float) -> datetime:
    return DAY0 + timedelta(days=day)


def unit(entries):
    return SparseVector.from_mapping(entries)


# ------------------------------------------------------------------- windows

def test_single_day_corpus_single_window():
    arts = [Art("a", at_day(0.25)), Art("b", at_day(0.5))]
    windows = make_windows(arts, ClusteringParams())
    assert len(windows) == 1
    assert windows[0].article_ids == ("a", "b")
    assert windows[0].start == DAY0


def test_day4_article_in_two_windows():
    # Oracle: window arithmetic by hand. Windows [0,6) and [3,9) both
    # cover day 4; [6,12) does not.
    arts = [Art("early", at_day(0.1)), Art("mid", at_day(4)), Art("late", at_day(7))]
    windows = make_windows(arts, ClusteringParams())
    covering = [w for w in windows if "mid" in w.article_ids]
    assert len(covering) == 2
    assert [w.start for w in covering] == [at_day(0), at_day(3)]


def test_every_article_in_at_most_two_windows():
    params = ClusteringParams()
    arts = [Art(f"a{i}", at_day(i * 0.7)) for i in range(40)]
    windows = make_windows(arts, params)
    for art in arts:
        count = sum(1 for w in windows if art.id in w.article_ids)
        assert 1 <= count <= 2


def test_windows_empty_input():
    assert make_windows([], ClusteringParams()) == []


def test_window_alignment_utc_midnight():
    arts = [Art("x", datetime(2025, 3, 5, 17, 45, tzinfo=UTC))]
    (w,) = make_windows(arts, ClusteringParams())
    assert w.start == datetime(2025, 3, 5, tzinfo=UTC)
    assert w.end - w.start == timedelta(days=6)


def test_params_validation():
    with pytest.raises(ValueError):
        ClusteringParams(window_days=3, window_overlap_days=3)
    with pytest.raises(ValueError):
        ClusteringParams(t1=1.5)


# --------------------------------------------------------------------- graph

def test_identical_articles_edge_weight_one():
    v = unit({0: 1.0, 3: 2.0})
    g = build_graph(["a", "b"], {"a": v, "b": v}, 0.31)
    assert len(g.edges) == 1
    a, b, w = g.edges[0]
    assert {a, b} == {"a", "b"}
    assert w == pytest.approx(1.0, abs=1e-12)


def test_threshold_inclusive_at_t1():
    # dot product is exactly the float 0.31
    va = SparseVector((0,), (1.0,))
    vb = SparseVector((0, 1), (0.31, math.sqrt(1 - 0.31**2)))
    g = build_graph(["a", "b"], {"a": va, "b": vb}, 0.31)
    assert len(g.edges) == 1
    assert g.edges[0][2] == 0.31


def test_disjoint_vocabulary_no_edge():
    g = build_graph(
        ["a", "b"], {"a": unit({0: 1.0}), "b": unit({1: 1.0})}, 0.31
    )
    assert g.edges == ()


def test_graph_matrix_path_matches_pairwise():
    # 70 nodes forces the sparse-matrix route; compare against the
    # pairwise route run on the same vectors in small batches.
    vecs = {}
    for i in range(70):
        vecs[f"n{i:02d}"] = unit({i % 7: 1.0, 7 + (i % 3): 0.5})
    big = build_graph(sorted(vecs), vecs, 0.31)
    small = build_graph(sorted(vecs)[:40], vecs, 0.31)  # pairwise route
    big_sub = {
        (a, b) for a, b, _ in big.edges
        if a in small.adjacency and b in small.adjacency
    }
    assert {(a, b) for a, b, _ in small.edges} == big_sub


def test_unweighted_graph_option():
    v = unit({0: 1.0})
    g = build_graph(["a", "b"], {"a": v, "b": v}, 0.31, weighted=False)
    assert g.edges[0][2] == 1.0


# ------------------------------------------------------------------- louvain

def clique_graph():
    """Two 4-cliques joined by a single 0.31 edge."""
    edges = []
    left = [f"a{i}" for i in range(4)]
    right = [f"b{i}" for i in range(4)]
    for group in (left, right):
        for i, x in enumerate(group):
            for y in group[i + 1 :]:
                edges.append((x, y, 1.0))
    edges.append(("a0", "b0", 0.31))
    return SimilarityGraph(tuple(left + right), tuple(edges))


def test_two_cliques_recovered_exactly():
    g = clique_graph()
    part = louvain(g, seed=0)
    left = {part[f"a{i}"] for i in range(4)}
    right = {part[f"b{i}"] for i in range(4)}
    assert len(left) == 1 and len(right) == 1
    assert left != right
    # and this is the exhaustive modularity optimum
    best_q, _ = exhaustive_best_modularity(g)
    assert modularity(g, part) == pytest.approx(best_q, abs=1e-12)


def test_louvain_empty_and_singleton():
    assert louvain(SimilarityGraph((), ())) == {}
    assert louvain(SimilarityGraph(("only",), ())) == {"only": 0}


def test_isolated_nodes_are_singletons():
    g = SimilarityGraph(("a", "b", "c"), (("a", "b", 0.9),))
    part = louvain(g)
    assert part["a"] == part["b"]
    assert part["c"] not in (part["a"],)


def test_louvain_deterministic():
    g = clique_graph()
    assert louvain(g, seed=0) == louvain(g, seed=0)


def test_louvain_near_optimal_on_random_graphs():
    import random as pyrandom

    rng = pyrandom.Random(123)
    for trial in range(20):
        n = rng.randint(2, 8)
        nodes = tuple(f"n{i}" for i in range(n))
        edges = []
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < 0.5:
                    edges.append((nodes[i], nodes[j], round(rng.uniform(0.31, 1.0), 3)))
        g = SimilarityGraph(nodes, tuple(edges))
        part = louvain(g, seed=0)
        got = modularity(g, part)
        best, _ = exhaustive_best_modularity(g)
        assert got >= best - 0.05
        assert -0.5 - 1e-9 <= got <= 1 + 1e-9


def test_louvain_scale_invariant_powers_of_two():
    # powers of two rescale floats exactly, so tie behavior is stable
    g = clique_graph()
    base = louvain(g, seed=0)
    for factor in (0.25, 4.0, 64.0):
        scaled = SimilarityGraph(
            g.nodes, tuple((a, b, w * factor) for a, b, w in g.edges)
        )
        assert louvain(scaled, seed=0) == base


def test_final_q_not_below_singletons():
    g = clique_graph()
    singles = {n: i for i, n in enumerate(g.nodes)}
    assert modularity(g, louvain(g)) >= modularity(g, singles)


# ------------------------------------------------------------------- merging

def window_at(day, ids):
    return Window(at_day(day), at_day(day + 6), tuple(ids))


def test_merge_windows_unions_on_shared_articles():
    vecs = {
        "a": unit({0: 1.0}),
        "b": unit({0: 1.0, 1: 0.2}),
        "c": unit({5: 1.0}),
    }
    w1 = window_at(0, ["a", "b"])
    topics = merge_windows([], w1, {"a": 0, "b": 0}, vecs)
    assert len(topics) == 1
    w2 = window_at(3, ["b", "c"])
    topics = merge_windows(topics, w2, {"b": 0, "c": 1}, vecs)
    by_members = {frozenset(t.article_ids) for t in topics}
    assert by_members == {frozenset({"a", "b"}), frozenset({"c"})}
    merged = [t for t in topics if "a" in t.article_ids][0]
    assert merged.window_span == (at_day(0), at_day(9))


def test_merge_windows_transitive_union():
    # one community overlapping two existing topics merges them
    vecs = {x: unit({i: 1.0}) for i, x in enumerate("abcd")}
    t1 = Topic.build(frozenset({"a"}), vecs, (at_day(0), at_day(6)))
    t2 = Topic.build(frozenset({"b"}), vecs, (at_day(0), at_day(6)))
    w = window_at(3, ["a", "b", "c"])
    topics = merge_windows([t1, t2], w, {"a": 0, "b": 0, "c": 0}, vecs)
    assert len(topics) == 1
    assert topics[0].article_ids == frozenset({"a", "b", "c"})


def test_merge_windows_incremental_equals_batch():
    vecs = {f"x{i}": unit({i // 2: 1.0, 10 + i: 0.1}) for i in range(8)}
    windows = [
        (window_at(0, ["x0", "x1", "x2"]), {"x0": 0, "x1": 0, "x2": 1}),
        (window_at(3, ["x2", "x3", "x4"]), {"x2": 0, "x3": 0, "x4": 1}),
        (window_at(6, ["x4", "x5", "x6", "x7"]), {"x4": 0, "x5": 0, "x6": 1, "x7": 1}),
    ]
    incremental = []
    for w, part in windows:
        incremental = merge_windows(incremental, w, part, vecs)
    scratch = []
    for w, part in windows:
        scratch = merge_windows(scratch, w, part, vecs)
    assert [t.article_ids for t in incremental] == [t.article_ids for t in scratch]
    assert [t.id for t in incremental] == [t.id for t in scratch]


def test_merge_topics_identical_centroids_one_story():
    vecs = {"a": unit({0: 1.0}), "b": unit({0: 1.0})}
    ta = Topic.build(frozenset({"a"}), vecs, (at_day(0), at_day(6)))
    tb = Topic.build(frozenset({"b"}), vecs, (at_day(3), at_day(9)))
    stories = merge_topics([ta, tb], 0.8)
    assert len(stories) == 1
    assert stories[0].article_ids == frozenset({"a", "b"})


def test_merge_topics_below_threshold_stay_apart():
    # centroid cosine 0.79 < 0.8
    c = 0.79
    vecs = {
        "a": SparseVector((0,), (1.0,)),
        "b": SparseVector((0, 1), (c, math.sqrt(1 - c * c))),
    }
    ta = Topic.build(frozenset({"a"}), vecs, (at_day(0), at_day(6)))
    tb = Topic.build(frozenset({"b"}), vecs, (at_day(0), at_day(6)))
    assert len(merge_topics([ta, tb], 0.8)) == 2
    assert len(merge_topics([ta], 0.8)) == 1


def test_merge_topics_titles_from_centroid_closest():
    # a and b sit on the dominant axis; c is tilted away, so the
    # centroid is closest to a/b and the tie breaks to the smaller id.
    vecs = {
        "a": unit({0: 1.0}),
        "b": unit({0: 1.0}),
        "c": unit({0: 1.0, 1: 0.8}),
    }
    titles = {"a": "Exact match", "b": "Duplicate", "c": "Tilted"}
    ta = Topic.build(frozenset({"a", "b", "c"}), vecs, (at_day(0), at_day(6)))
    (story,) = merge_topics([ta], 0.8, vectors=vecs, titles=titles)
    assert story.title == "Exact match"


# ------------------------------------------------------------------- metrics

def test_bcubed_identical_is_one():
    part = {"a": 0, "b": 0, "c": 1}
    scores = bcubed_f1(part, {"a": 9, "b": 9, "c": 4})
    assert scores == {"precision": 1.0, "recall": 1.0, "f1": 1.0}


def test_bcubed_two_singletons_merged():
    # Oracle: hand evaluation. P = mean(1/2, 1/2) = 0.5, R = 1.
    scores = bcubed_f1({"x": 0, "y": 0}, {"x": 0, "y": 1})
    assert scores["precision"] == pytest.approx(0.5)
    assert scores["recall"] == pytest.approx(1.0)
    assert scores["f1"] == pytest.approx(2 / 3)


def test_bcubed_matches_reference_on_all_4_item_pairs():
    items = ["w", "x", "y", "z"]
    partitions = [partition_mapping(p) for p in all_partitions(items)]
    for pred, gold in product(partitions, repeat=2):
        got = bcubed_f1(pred, gold)
        want = bcubed_reference(pred, gold)
        for key in ("precision", "recall", "f1"):
            assert got[key] == pytest.approx(want[key], abs=1e-12)


def test_pairwise_matches_reference_on_all_4_item_pairs():
    items = ["w", "x", "y", "z"]
    partitions = [partition_mapping(p) for p in all_partitions(items)]
    for pred, gold in product(partitions, repeat=2):
        got = pairwise_f1(pred, gold)
        want = pairwise_reference(pred, gold)
        for key in ("precision", "recall", "f1"):
            assert got[key] == pytest.approx(want[key], abs=1e-12)


def test_metrics_item_mismatch():
    with pytest.raises(PartitionMismatch):
        bcubed_f1({"a": 0}, {"b": 0})
    with pytest.raises(PartitionMismatch):
        pairwise_f1({"a": 0, "b": 0}, {"a": 0})


def test_metrics_empty_partitions():
    assert bcubed_f1({}, {})["f1"] == 1.0
    assert pairwise_f1({}, {})["f1"] == 1.0


@st.composite
def two_partitions(draw):
    n = draw(st.integers(min_value=1, max_value=7))
    items = [f"i{k}" for k in range(n)]
    pred = {i: draw(st.integers(0, 3)) for i in items}
    gold = {i: draw(st.integers(0, 3)) for i in items}
    return pred, gold


def canonical(partition):
    blocks = {}
    for item, label in partition.items():
        blocks.setdefault(label, set()).add(item)
    return frozenset(frozenset(b) for b in blocks.values())


@given(two_partitions())
@settings(deadline=None, max_examples=80)
def test_f1_one_iff_identical_up_to_relabeling(pair):
    pred, gold = pair
    same = canonical(pred) == canonical(gold)
    assert (bcubed_f1(pred, gold)["f1"] == 1.0) == same
    assert (pairwise_f1(pred, gold)["f1"] == 1.0) == same


# ---------------------------------------------------------------- end-to-end

def test_cluster_stories_separates_disjoint_themes():
    themes = {
        "storm": "hurricane landfall coast evacuation storm surge flooding",
        "chess": "grandmaster tournament chess opening endgame blitz title",
    }
    arts = []
    for theme, words in themes.items():
        for d in range(4):
            arts.append(
                Art(
                    id=f"{theme}{d}",
                    published_at=at_day(d * 1.5),
                    title=f"{theme} briefing",
                    # the memo token is unique per article, so min_df=2
                    # keeps vectors purely thematic
                    body=f"{words} memo{theme}{d}",
                )
            )
    result = cluster_stories(arts, ClusteringParams(min_df=2))
    assert len(result.stories) == 2
    groups = {
        frozenset(a for a in s.article_ids) for s in result.stories
    }
    assert groups == {
        frozenset({f"storm{d}" for d in range(4)}),
        frozenset({f"chess{d}" for d in range(4)}),
    }
    assert set(result.assignments) == {a.id for a in arts}
    # determinism end to end
    again = cluster_stories(arts, ClusteringParams(min_df=2))
    assert [s.id for s in again.stories] == [s.id for s in result.stories]


def test_cluster_stories_empty():
    result = cluster_stories([], ClusteringParams())
    assert result.stories == () and result.topics == ()

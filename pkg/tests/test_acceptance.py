"""Acceptance suite: one test per release gate.

Every expected value here is re-derived independently of the code under
test, by exhaustive enumeration, arbitrary-precision arithmetic, or a
synthetic corpus with known structure. Runtime budgets are asserted
where latency is part of the contract.
"""

import json
import math
import random
import time
from collections import Counter, defaultdict
from datetime import datetime, timedelta, timezone
from fractions import Fraction
from types import SimpleNamespace

import numpy as np
from fastapi.testclient import TestClient

from newsflow.api import SnapshotHolder, create_app
from newsflow.classifiers.maxent import loss_and_gradient, predict, train_maxent
from newsflow.classifiers.propaganda import propaganda_label
from newsflow.classifiers.section import (
    SECTIONS,
    categorize_section,
    train_section_model,
)
from newsflow.clustering.graph import SimilarityGraph
from newsflow.clustering.louvain import louvain, modularity
from newsflow.clustering.metrics import bcubed_f1, pairwise_f1
from newsflow.clustering.params import ClusteringParams
from newsflow.clustering.topics import cluster_stories
from newsflow.ingest import ArticleStore, FeedSource, RawDocument, raw_document_to_dict
from newsflow.ingest.articles import article_to_dict
from newsflow.pipeline import (
    TOPIC_RAW,
    MessageQueue,
    StageDescriptor,
    StageRunner,
    article_stages,
)
from newsflow.profiles import Claim
from newsflow.profiles.valence import GroupCitationCounts, valence

from test_api import (
    A1,
    GOLDEN_PROFILE_M1,
    GOLDEN_SEARCH_SIG,
    GOLDEN_STORIES,
    GOLDEN_TOPIC_S1,
    M1_FULL,
    S1,
    fixture_snapshot,
)


def enumerate_partitions(n):
    """Yield every partition of n items as a restricted growth string."""
    labels = [0] * n

    def rec(i, used):
        if i == n:
            yield tuple(labels)
            return
        for lab in range(used + 1):
            labels[i] = lab
            yield from rec(i + 1, used + 1 if lab == used else used)

    yield from rec(0, 0)


# ------------------------------------------------------------------ valence


def test_valence_matches_arbitrary_precision_oracle():
    """1,000 random counts agree with an exact rational evaluation."""
    rng = random.Random(3)
    cases = []
    while len(cases) < 1000:
        total0 = rng.randint(1, 10**6)
        total1 = rng.randint(1, 10**6)
        tf0 = rng.randint(0, total0)
        tf1 = rng.randint(0, total1)
        if tf0 == 0 and tf1 == 0:
            continue
        cases.append(GroupCitationCounts("m", "t", tf0, tf1, total0, total1))

    start = time.perf_counter()
    values = [valence(c) for c in cases]
    elapsed = time.perf_counter() - start

    tol = Fraction(1, 10**12)
    for c, got in zip(cases, values):
        r0 = Fraction(c.tf_c0, c.total_c0)
        r1 = Fraction(c.tf_c1, c.total_c1)
        exact = 2 * r0 / (r0 + r1) - 1
        assert abs(Fraction(got) - exact) < tol

    # swapping the groups flips the sign bit-exactly, not approximately
    for c in cases[:200]:
        flipped = GroupCitationCounts(
            "m", "t", c.tf_c1, c.tf_c0, c.total_c1, c.total_c0
        )
        assert valence(flipped) == -valence(c)

    # scaling either group's counts by a common factor changes nothing,
    # again bit-exactly: the real quotients are unchanged and still round
    # to the same doubles
    for c in cases[:200]:
        k0 = rng.randint(2, 1000)
        k1 = rng.randint(2, 1000)
        scaled = GroupCitationCounts(
            "m", "t", c.tf_c0 * k0, c.tf_c1 * k1, c.total_c0 * k0, c.total_c1 * k1
        )
        assert valence(scaled) == valence(c)

    assert valence(GroupCitationCounts("m", "t", 7, 0, 50, 80)) == 1.0
    assert valence(GroupCitationCounts("m", "t", 10, 5, 100, 50)) == 0.0
    assert abs(valence(GroupCitationCounts("m", "t", 30, 10, 100, 100)) - 0.5) < 1e-12
    assert elapsed < 1.0


# --------------------------------------------------------------- propaganda


def test_propaganda_labels_match_interval_table():
    """Boundary points and 10,000 random scores agree with the bucket table."""

    table = (
        (0.0, 0.2, "very_unlikely"),
        (0.2, 0.4, "unlikely"),
        (0.4, 0.6, "somehow"),
        (0.6, 0.8, "likely"),
        (0.8, 1.0, "very_likely"),
    )

    def oracle(p):
        if p == 1.0:
            return "very_likely"
        for lo, hi, label in table:
            if lo <= p < hi:
                return label
        raise AssertionError(f"score out of range: {p}")

    just_under = math.nextafter(0.2, 0.0)
    rng = random.Random(5)
    points = [0.0, just_under, 0.2, 0.4, 0.6, 0.8, 1.0]
    points += [rng.random() for _ in range(10_000)]
    mismatches = [p for p in points if propaganda_label(p) != oracle(p)]
    assert mismatches == []


# ------------------------------------------------------------------- bcubed


def test_bcubed_matches_brute_force_on_all_small_partitions():
    """Exhaustive check against a Fraction-arithmetic oracle, n <= 6."""

    def oracle(pred, gold, items):
        n = len(items)
        pred_cluster = defaultdict(set)
        gold_cluster = defaultdict(set)
        for i in items:
            pred_cluster[pred[i]].add(i)
            gold_cluster[gold[i]].add(i)
        overlap = {
            i: len(pred_cluster[pred[i]] & gold_cluster[gold[i]]) for i in items
        }
        p = sum(Fraction(overlap[i], len(pred_cluster[pred[i]])) for i in items) / n
        r = sum(Fraction(overlap[i], len(gold_cluster[gold[i]])) for i in items) / n
        f = Fraction(0) if p + r == 0 else 2 * p * r / (p + r)
        return p, r, f

    start = time.perf_counter()
    pairs = 0
    worst = 0.0
    for n in range(1, 7):
        items = [f"i{k}" for k in range(n)]
        parts = [dict(zip(items, labs)) for labs in enumerate_partitions(n)]
        for pred in parts:
            for gold in parts:
                pairs += 1
                got = bcubed_f1(pred, gold)
                p, r, f = oracle(pred, gold, items)
                worst = max(
                    worst,
                    abs(got["precision"] - float(p)),
                    abs(got["recall"] - float(r)),
                    abs(got["f1"] - float(f)),
                )
    elapsed = time.perf_counter() - start

    # Bell(1..6) = 1, 2, 5, 15, 52, 203; sum of squares = 44,168
    assert pairs == 44_168
    assert worst < 1e-12
    assert elapsed < 30.0


# ------------------------------------------------------------------ louvain


def test_louvain_near_exhaustive_optimum_with_monotone_trace():
    """100 random graphs: within 0.05 of the true optimum, trace monotone."""

    def best_modularity(n, edges):
        if not edges:
            return 0.0
        A = np.zeros((n, n))
        for a, b, w in edges:
            i, j = int(a[1:]), int(b[1:])
            A[i, j] = A[j, i] = w
        k = A.sum(axis=1)
        two_m = A.sum()
        B = A - np.outer(k, k) / two_m
        best = -1.0
        for labs in enumerate_partitions(n):
            lab = np.asarray(labs)
            mask = lab[:, None] == lab[None, :]
            best = max(best, B[mask].sum() / two_m)
        return best

    rng = random.Random(42)
    sizes = [rng.randint(2, 8) for _ in range(90)] + [9] * 5 + [10] * 5
    rng.shuffle(sizes)
    worst_gap = -1.0
    for n in sizes:
        nodes = tuple(f"n{i}" for i in range(n))
        edges = []
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < 0.5:
                    edges.append((f"n{i}", f"n{j}", rng.uniform(0.1, 1.0)))
        graph = SimilarityGraph(nodes, tuple(edges))
        trace = []
        part = louvain(graph, seed=0, trace=trace)
        worst_gap = max(worst_gap, best_modularity(n, edges) - modularity(graph, part))
        assert all(b >= a - 1e-12 for a, b in zip(trace, trace[1:]))
    assert worst_gap <= 0.05

    # two 4-cliques joined by one weak edge split exactly at the bridge
    def clique(names):
        return [(a, b, 1.0) for i, a in enumerate(names) for b in names[i + 1 :]]

    left = tuple(f"l{i}" for i in range(4))
    right = tuple(f"r{i}" for i in range(4))
    bridge = [("l0", "r0", 0.31)]
    graph = SimilarityGraph(left + right, tuple(clique(left) + clique(right) + bridge))
    communities = defaultdict(set)
    for node, comm in louvain(graph, seed=0).items():
        communities[comm].add(node)
    assert sorted(communities.values(), key=sorted) == [set(left), set(right)]


# --------------------------------------------------------------- clustering


def test_two_stage_clustering_recovers_synthetic_topics():
    """Five disjoint-vocabulary topics come back with F1 >= 0.95, twice."""
    rng = random.Random(0)
    epoch = datetime(2025, 7, 1, tzinfo=timezone.utc)
    shared = [f"noise{k}" for k in range(30)]
    articles, gold = [], {}
    for t in range(5):
        vocab = [f"topic{t}word{k}" for k in range(40)]
        for j in range(20):
            tokens = rng.choices(vocab, k=36) + rng.choices(shared, k=4)
            rng.shuffle(tokens)
            aid = f"t{t}a{j}"
            articles.append(
                SimpleNamespace(
                    id=aid,
                    title=f"topic{t}word0 update {j}",
                    body=" ".join(tokens),
                    published_at=epoch + timedelta(days=rng.uniform(0, 12)),
                    language="en",
                )
            )
            gold[aid] = f"g{t}"

    start = time.perf_counter()
    result = cluster_stories(articles, ClusteringParams())
    elapsed = time.perf_counter() - start

    predicted = {a.id: result.assignments.get(a.id, a.id) for a in articles}
    assert bcubed_f1(predicted, gold)["f1"] >= 0.95
    assert pairwise_f1(predicted, gold)["f1"] >= 0.95
    assert elapsed < 5.0

    again = cluster_stories(articles, ClusteringParams())
    assert again.assignments == result.assignments


# ------------------------------------------------------------------- maxent


def test_maxent_gradient_matches_finite_differences_and_separates():
    """Analytic gradient vs central differences; separable data fits exactly."""
    rng = np.random.default_rng(7)
    step = 1e-5
    worst = 0.0
    for _ in range(20):
        n = int(rng.integers(4, 12))
        d = int(rng.integers(2, 6))
        k = int(rng.integers(2, 5))
        X = rng.normal(size=(n, d))
        Y = np.zeros((n, k))
        Y[np.arange(n), rng.integers(0, k, size=n)] = 1.0
        W = rng.normal(size=(k, d))
        b = rng.normal(size=k)
        l2 = float(rng.uniform(0.0, 0.5))
        _, grad_w, grad_b = loss_and_gradient(W, b, X, Y, l2)

        def loss_at(weights, bias):
            return loss_and_gradient(weights, bias, X, Y, l2)[0]

        num_w = np.zeros_like(W)
        for i in range(k):
            for j in range(d):
                up, down = W.copy(), W.copy()
                up[i, j] += step
                down[i, j] -= step
                num_w[i, j] = (loss_at(up, b) - loss_at(down, b)) / (2 * step)
        num_b = np.zeros_like(b)
        for i in range(k):
            up, down = b.copy(), b.copy()
            up[i] += step
            down[i] -= step
            num_b[i] = (loss_at(W, up) - loss_at(W, down)) / (2 * step)

        analytic = np.concatenate([grad_w.ravel(), grad_b.ravel()])
        numeric = np.concatenate([num_w.ravel(), num_b.ravel()])
        scale = max(np.abs(analytic).max(), np.abs(numeric).max(), 1e-8)
        worst = max(worst, float(np.abs(numeric - analytic).max() / scale))
    assert worst < 1e-4

    one_d = [(np.array([-1.0]), "a"), (np.array([1.0]), "b")]
    planar = [
        (np.array([0.0, 1.0]), "up"),
        (np.array([0.2, 0.9]), "up"),
        (np.array([1.0, 0.0]), "down"),
        (np.array([0.9, 0.2]), "down"),
    ]
    for samples in (one_d, planar):
        model = train_maxent(samples, max_iter=500)
        assert [predict(model, x) for x, _ in samples] == [lab for _, lab in samples]
        trace = model.loss_trace
        assert all(b2 <= a2 for a2, b2 in zip(trace, trace[1:]))


# ----------------------------------------------------------------- sections


def test_section_model_beats_baseline_on_held_out_corpus():
    """Macro-F1 >= 0.9 on synthetic sections and >= baseline + 0.4."""
    rng = random.Random(11)
    filler = [f"common{k}" for k in range(12)]
    train, test = [], []
    for s, section in enumerate(SECTIONS):
        core = [f"sect{s}word{k}" for k in range(50)]
        for j in range(500):
            tokens = rng.choices(core, k=30) + rng.choices(filler, k=5)
            rng.shuffle(tokens)
            row = (tokens, section)
            (train if j < 400 else test).append(row)

    model = train_section_model(train, min_df=2)

    def macro_f1(pairs):
        tp, fp, fn = Counter(), Counter(), Counter()
        for predicted, actual in pairs:
            if predicted == actual:
                tp[actual] += 1
            else:
                fp[predicted] += 1
                fn[actual] += 1
        scores = []
        for label in SECTIONS:
            p_den = tp[label] + fp[label]
            r_den = tp[label] + fn[label]
            p = tp[label] / p_den if p_den else 0.0
            r = tp[label] / r_den if r_den else 0.0
            scores.append(2 * p * r / (p + r) if p + r else 0.0)
        return sum(scores) / len(scores)

    pairs = []
    for tokens, actual in test:
        article = SimpleNamespace(title="", body=" ".join(tokens), language="en")
        pairs.append((categorize_section(article, model), actual))
    score = macro_f1(pairs)

    majority = max(SECTIONS, key=lambda s: sum(1 for _, a in train if a == s))
    baseline = macro_f1([(majority, actual) for _, actual in test])
    assert score >= 0.9
    assert score >= baseline + 0.4


# ----------------------------------------------------------------- pipeline


REPLAY_STAGES = ("extract", "translate", "categorize", "propaganda", "frame", "stance")
REPLAY_NOW = datetime(2025, 8, 1, 12, 0, tzinfo=timezone.utc)
REPLAY_SOURCES = {
    "s1": FeedSource(
        id="s1",
        medium_id="m1",
        kind="rss",
        url="https://news.example/feed",
        poll_interval=900,
        country="us",
        language="en",
    )
}
REPLAY_CLAIMS = (Claim("c1", "The central bank raised interest rates", "t1"),)


class Kill(BaseException):
    """Bypasses the retry wrapper the way a killed process would."""


def replay_page(n):
    return (
        f"<html><head><title>Story {n}</title></head><body>"
        f"<p>Quarter {n} results improved and analysts reacted.</p>"
        f"<p>Detail paragraph number {n} covering the sector.</p></body></html>"
    )


def replay_docs():
    originals = [
        RawDocument(f"https://news.example/{n}", REPLAY_NOW, replay_page(n), "s1")
        for n in range(1000)
    ]
    mirrors = [
        RawDocument(f"https://mirror.example/{n}", REPLAY_NOW, replay_page(n), "s1")
        for n in range(20)
    ]
    return originals + mirrors


def publish_raw(queue, docs):
    queue.create_topic(TOPIC_RAW)
    for doc in docs:
        queue.publish(TOPIC_RAW, json.dumps(raw_document_to_dict(doc)).encode())


def drain_stages(queue, store, counters, armed):
    """Run every stage to completion, crashing once per armed threshold.

    counters persist across restarts so each stage dies exactly once,
    mid-stream, at its scheduled handler call.
    """

    def wrap(desc):
        def handler(message, _inner=desc.handler, _name=desc.name):
            counters[_name] += 1
            if armed.get(_name) == counters[_name]:
                del armed[_name]
                raise Kill()
            return _inner(message)

        return StageDescriptor(
            desc.name, desc.input_topic, desc.output_topic, handler, desc.parallelism
        )

    for desc in article_stages(store, REPLAY_SOURCES, claims=REPLAY_CLAIMS):
        StageRunner(wrap(desc), queue).drain()


def test_pipeline_replay_with_stage_crashes_is_lossless(tmp_path):
    """Killing every stage once leaves the store byte-identical."""
    docs = replay_docs()
    baseline = tmp_path / "baseline.jsonl"
    with MessageQueue(tmp_path / "q0") as queue, ArticleStore() as store:
        publish_raw(queue, docs)
        drain_stages(queue, store, Counter(), {})
        store.export_jsonl(baseline)

    counters = Counter()
    armed = {name: (i + 1) * 120 for i, name in enumerate(REPLAY_STAGES)}
    crashes = 0
    with ArticleStore(tmp_path / "faulty.db") as store:
        with MessageQueue(tmp_path / "q1") as queue:
            publish_raw(queue, docs)
        done = False
        while not done:
            # reopen the queue each time: a restarted process recovers
            # its position from committed offsets alone
            with MessageQueue(tmp_path / "q1") as queue:
                try:
                    drain_stages(queue, store, counters, armed)
                    done = True
                except Kill:
                    crashes += 1
        faulty = tmp_path / "faulty.jsonl"
        store.export_jsonl(faulty)
        assert crashes == len(REPLAY_STAGES)
        assert len(store) == 1000
        assert faulty.read_bytes() == baseline.read_bytes()

        # a second full delivery of every raw document changes nothing
        with MessageQueue(tmp_path / "q1") as queue:
            publish_raw(queue, docs)
            drain_stages(queue, store, Counter(), {})
        redelivered = tmp_path / "redelivered.jsonl"
        store.export_jsonl(redelivered)
        assert redelivered.read_bytes() == baseline.read_bytes()


# ---------------------------------------------------------------------- api


def test_api_golden_responses_and_error_codes():
    """All five endpoints match golden fixtures; errors use the envelope."""
    app = create_app(SnapshotHolder(fixture_snapshot()))

    @app.get("/v1/boom")
    def boom():
        raise RuntimeError("synthetic failure")

    client = TestClient(app, raise_server_exceptions=False)

    assert client.get("/v1/stories").json() == GOLDEN_STORIES
    assert client.get("/v1/media/m1").json() == GOLDEN_PROFILE_M1
    assert client.get(f"/v1/topics/{S1.id}").json() == GOLDEN_TOPIC_S1
    search = client.get("/v1/search", params={"q": "sig", "type": "media"})
    assert search.json() == GOLDEN_SEARCH_SIG
    assert client.get(f"/v1/articles/{A1.id}").json() == {
        "article": article_to_dict(A1),
        "medium": M1_FULL,
    }

    def expect_error(response, status, code):
        assert response.status_code == status
        body = response.json()
        assert set(body) == {"error"}
        assert set(body["error"]) == {"code", "message"}
        assert body["error"]["code"] == code

    expect_error(client.get("/v1/stories", params={"lang": "de"}), 400, "bad_request")
    expect_error(client.get("/v1/stories", params={"page": 0}), 400, "bad_request")
    expect_error(
        client.get("/v1/stories", params={"page_size": 101}), 400, "bad_request"
    )
    expect_error(client.get("/v1/media/absent"), 404, "not_found")
    expect_error(client.get("/v1/topics/absent"), 404, "not_found")
    expect_error(client.get("/v1/articles/absent"), 404, "not_found")
    expect_error(
        client.get("/v1/search", params={"q": " ", "type": "media"}),
        400,
        "bad_request",
    )
    expect_error(
        client.get("/v1/search", params={"q": "x", "type": "users"}),
        400,
        "bad_request",
    )
    expect_error(client.get("/v1/boom"), 500, "internal")

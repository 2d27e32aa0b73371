"""Maxent training/inference and the article-level analyzers."""

import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from newsflow.classifiers import (
    BIAS_LABELS,
    FRAME_LABELS,
    FeatureSpace,
    LinearModel,
    PROPAGANDA_LABELS,
    SECTIONS,
    baseline_frames,
    categorize_section,
    classify_frame,
    classify_source,
    classify_stance,
    hyper_partisanship,
    load_model,
    load_source_labels,
    loss_and_gradient,
    model_from_dict,
    model_to_dict,
    predict,
    predict_proba,
    propaganda_label,
    propaganda_score,
    register_stance_backend,
    save_model,
    train_maxent,
    train_propaganda_model,
    train_section_model,
    train_source_model,
)
from newsflow.classifiers.stance import StanceConfig
from newsflow.errors import (
    DegenerateLabels,
    NoStanceBackend,
    NotFitted,
    ParseError,
    RangeError,
    ShapeError,
)
from newsflow.textproc import SparseVector

DATA = Path(__file__).parent / "data"


@dataclass
class FakeArticle:
    title: str = ""
    body: str = ""
    language: str = "en"


# -------------------------------------------------------------------- maxent

def test_separable_points_fit_exactly():
    samples = [(np.array([-1.0]), "neg"), (np.array([1.0]), "pos")]
    model = train_maxent(samples, max_iter=300)
    assert predict(model, np.array([-1.0])) == "neg"
    assert predict(model, np.array([1.0])) == "pos"


def test_zero_model_loss_is_ln2():
    # Uniform predictive distribution on balanced binary data.
    X = np.array([[0.5], [-0.5], [1.0], [-1.0]])
    Y = np.array([[1.0, 0.0], [0.0, 1.0], [1.0, 0.0], [0.0, 1.0]])
    loss, _, _ = loss_and_gradient(np.zeros((2, 1)), np.zeros(2), X, Y, l2=0.0)
    assert loss == pytest.approx(math.log(2), abs=1e-12)


def test_gradient_matches_finite_differences():
    # Oracle: central finite differences with h=1e-5 on a random 5x4
    # problem (seeded).
    rng = np.random.default_rng(7)
    X = rng.normal(size=(5, 4))
    y_idx = rng.integers(0, 3, size=5)
    Y = np.zeros((5, 3))
    Y[np.arange(5), y_idx] = 1.0
    W = rng.normal(size=(3, 4))
    b = rng.normal(size=3)
    l2 = 0.1
    _, grad_w, grad_b = loss_and_gradient(W, b, X, Y, l2)

    h = 1e-5
    num_w = np.zeros_like(W)
    for i in range(W.shape[0]):
        for j in range(W.shape[1]):
            up, down = W.copy(), W.copy()
            up[i, j] += h
            down[i, j] -= h
            lu, _, _ = loss_and_gradient(up, b, X, Y, l2)
            ld, _, _ = loss_and_gradient(down, b, X, Y, l2)
            num_w[i, j] = (lu - ld) / (2 * h)
    num_b = np.zeros_like(b)
    for i in range(b.size):
        up, down = b.copy(), b.copy()
        up[i] += h
        down[i] -= h
        lu, _, _ = loss_and_gradient(W, up, X, Y, l2)
        ld, _, _ = loss_and_gradient(W, down, X, Y, l2)
        num_b[i] = (lu - ld) / (2 * h)

    scale_w = np.maximum(np.abs(num_w), 1e-8)
    scale_b = np.maximum(np.abs(num_b), 1e-8)
    assert (np.abs(grad_w - num_w) / scale_w).max() < 1e-4
    assert (np.abs(grad_b - num_b) / scale_b).max() < 1e-4


def test_loss_trace_non_increasing():
    rng = np.random.default_rng(3)
    X = rng.normal(size=(30, 5))
    labels = ["a" if x[0] + x[1] > 0 else "b" for x in X]
    model = train_maxent(list(zip(X, labels)), l2=1e-3, max_iter=100)
    trace = model.loss_trace
    assert len(trace) >= 2
    assert all(b <= a + 1e-12 for a, b in zip(trace, trace[1:]))


def test_training_is_deterministic():
    rng = np.random.default_rng(5)
    X = rng.normal(size=(20, 3))
    labels = ["a" if x[2] > 0 else "b" for x in X]
    m1 = train_maxent(list(zip(X, labels)), l2=1e-2, max_iter=50)
    m2 = train_maxent(list(zip(X, labels)), l2=1e-2, max_iter=50)
    assert np.array_equal(m1.weights, m2.weights)
    assert np.array_equal(m1.bias, m2.bias)


def test_feature_scaling_keeps_train_argmax():
    rng = np.random.default_rng(11)
    X = rng.normal(size=(24, 3))
    labels = ["a" if x[0] > 0.2 else ("b" if x[1] > 0 else "c") for x in X]
    base = train_maxent(list(zip(X, labels)), l2=0.0, max_iter=400, tol=1e-8)
    scaled = train_maxent(list(zip(X * 4.0, labels)), l2=0.0, max_iter=400, tol=1e-8)
    for x in X:
        assert predict(base, x) == predict(scaled, x * 4.0)


def test_degenerate_labels():
    with pytest.raises(DegenerateLabels):
        train_maxent([(np.array([1.0]), "only")])
    with pytest.raises(DegenerateLabels):
        train_maxent([])


def test_predict_proba_shape_checks():
    model = train_maxent([(np.array([0.0, 1.0]), "a"), (np.array([1.0, 0.0]), "b")])
    with pytest.raises(ShapeError):
        predict_proba(model, np.array([1.0, 2.0, 3.0]))
    with pytest.raises(ShapeError):
        predict_proba(model, SparseVector((5,), (1.0,)))


def test_predict_proba_strictly_positive_and_normalized():
    space = FeatureSpace("dense", 1)
    model = LinearModel(("a", "b"), np.array([[2000.0], [-2000.0]]), np.zeros(2), space)
    probs = predict_proba(model, np.array([1.0]))
    assert probs.sum() == pytest.approx(1.0, abs=1e-9)
    assert (probs > 0).all()


def test_sparse_vector_training_matches_dense():
    dense = [np.array([1.0, 0.0]), np.array([0.0, 1.0]), np.array([1.0, 1.0])]
    sparse = [
        SparseVector((0,), (1.0,)),
        SparseVector((1,), (1.0,)),
        SparseVector((0, 1), (1.0, 1.0)),
    ]
    labels = ["a", "b", "a"]
    space = FeatureSpace("dense", 2)
    md = train_maxent(list(zip(dense, labels)), max_iter=50, feature_space=space)
    ms = train_maxent(list(zip(sparse, labels)), max_iter=50, feature_space=space)
    assert np.allclose(md.weights, ms.weights, atol=1e-12)


@given(
    st.lists(
        st.tuples(
            st.lists(st.floats(-3, 3), min_size=2, max_size=2),
            st.sampled_from(["x", "y"]),
        ),
        min_size=4,
        max_size=12,
    )
)
@settings(deadline=None, max_examples=25)
def test_proba_always_a_distribution(rows):
    labels = {lab for _, lab in rows}
    if len(labels) < 2:
        rows = rows + [([0.0, 0.0], "x"), ([1.0, 1.0], "y")]
    model = train_maxent([(np.array(v), lab) for v, lab in rows], max_iter=20)
    probs = predict_proba(model, np.array([0.3, -0.7]))
    assert probs.sum() == pytest.approx(1.0, abs=1e-9)
    assert (probs > 0).all()


# ------------------------------------------------------------- serialization

def test_model_roundtrip_bit_exact(tmp_path):
    rng = np.random.default_rng(2)
    X = rng.normal(size=(12, 4))
    labels = ["a" if x[0] > 0 else "b" for x in X]
    model = train_maxent(list(zip(X, labels)), l2=1e-3, max_iter=60)
    path = tmp_path / "model.json"
    save_model(model, path)
    loaded = load_model(path)
    assert loaded.classes == model.classes
    assert np.array_equal(loaded.weights, model.weights)  # bit-exact
    assert np.array_equal(loaded.bias, model.bias)
    assert loaded.feature_space == model.feature_space
    assert loaded.loss_trace == model.loss_trace


def test_model_container_rejects_unknown():
    model = train_maxent([(np.array([0.0]), "a"), (np.array([1.0]), "b")])
    blob = model_to_dict(model)
    with pytest.raises(ParseError):
        model_from_dict({**blob, "format": "something-else"})
    with pytest.raises(ParseError):
        model_from_dict({**blob, "version": 99})


# ------------------------------------------------------------------ sections

def test_hand_built_model_predicts_sports():
    # One feature that fires only for sports; argmax by construction.
    vocab_terms = ["goal"]
    space = FeatureSpace(
        "tfidf",
        1,
        {"terms": vocab_terms, "document_frequency": [1], "n_docs": 2},
    )
    weights = np.zeros((len(SECTIONS), 1))
    weights[SECTIONS.index("sports"), 0] = 5.0
    model = LinearModel(tuple(SECTIONS), weights, np.zeros(len(SECTIONS)), space)
    article = FakeArticle(title="goal goal", body="goal")
    assert categorize_section(article, model) == "sports"


def test_empty_body_uses_bias():
    space = FeatureSpace(
        "tfidf", 1, {"terms": ["x"], "document_frequency": [1], "n_docs": 2}
    )
    bias = np.zeros(len(SECTIONS))
    bias[SECTIONS.index("health")] = 1.0
    model = LinearModel(
        tuple(SECTIONS), np.zeros((len(SECTIONS), 1)), bias, space
    )
    assert categorize_section(FakeArticle(), model) == "health"


def test_categorize_requires_model():
    with pytest.raises(NotFitted):
        categorize_section(FakeArticle(body="x"), None)
    wrong = train_maxent([(np.array([0.0]), "a"), (np.array([1.0]), "b")])
    with pytest.raises(NotFitted):
        categorize_section(FakeArticle(body="x"), wrong)


def test_train_section_model_learns_disjoint_vocab():
    docs = []
    words = {
        "business": ["market", "stock", "profit"],
        "sports": ["match", "goal", "league"],
        "health": ["clinic", "vaccine", "doctor"],
        "politics": ["senate", "minister", "vote"],
        "technology": ["software", "chip", "startup"],
        "entertainment": ["film", "concert", "actor"],
    }
    for section, vocab in words.items():
        for i in range(4):
            docs.append((vocab + [vocab[i % 3]], section))
    model = train_section_model(docs, max_iter=200)
    for section, vocab in words.items():
        assert categorize_section(FakeArticle(body=" ".join(vocab)), model) == section


def test_train_section_model_rejects_unknown_label():
    with pytest.raises(ValueError):
        train_section_model([(["a"], "weather"), (["b"], "sports")])


# ---------------------------------------------------------------- propaganda

def test_propaganda_label_paper_boundaries():
    assert propaganda_label(0.1) == "very_unlikely"
    assert propaganda_label(0.2) == "unlikely"
    assert propaganda_label(0.59999) == "somehow"
    assert propaganda_label(0.8) == "very_likely"
    assert propaganda_label(0.0) == "very_unlikely"
    assert propaganda_label(1.0) == "very_likely"


def test_propaganda_label_range_errors():
    with pytest.raises(RangeError):
        propaganda_label(-0.01)
    with pytest.raises(RangeError):
        propaganda_label(1.01)


@given(st.floats(0, 1), st.floats(0, 1))
@settings(deadline=None)
def test_propaganda_label_monotone(p1, p2):
    order = {label: i for i, label in enumerate(PROPAGANDA_LABELS)}
    if p1 > p2:
        p1, p2 = p2, p1
    assert order[propaganda_label(p1)] <= order[propaganda_label(p2)]


def test_propaganda_model_roundtrip():
    shouty = [
        "WAKE UP! They are LYING to you, the traitors destroy everything!!! "
        "Only fools believe the corrupt elite!!!" * 2,
        "SHOCKING truth EXPOSED!!! The enemy within will RUIN us all!!!" * 3,
        "You MUST share this NOW!!! The wicked cabal poisons our children!!!" * 2,
    ]
    sober = [
        "The committee reviewed quarterly infrastructure spending and "
        "published a detailed schedule for road maintenance next year.",
        "Researchers presented findings on regional rainfall patterns at "
        "the annual hydrology conference in March.",
        "The council approved a measured increase in library funding after "
        "a public consultation period.",
    ]
    samples = [(t, True) for t in shouty] + [(t, False) for t in sober]
    model = train_propaganda_model(samples, max_iter=200)
    hot = propaganda_score(FakeArticle(body=shouty[0]), model)
    cold = propaganda_score(FakeArticle(body=sober[0]), model)
    assert hot.index > cold.index
    assert hot.label == propaganda_label(hot.index)
    assert cold.label == propaganda_label(cold.index)
    assert 0.0 <= hot.index <= 1.0


def test_propaganda_score_requires_model():
    with pytest.raises(NotFitted):
        propaganda_score(FakeArticle(body="x"), None)


# -------------------------------------------------------------------- stance

def test_verbatim_claim_not_unrelated():
    body = "The prime minister resigned on Tuesday. Markets reacted calmly."
    assert classify_stance(body, "The prime minister resigned") != "unrelated"


def test_zero_overlap_is_unrelated():
    assert classify_stance("Bananas ripen quickly in warm kitchens.",
                           "Interest rates will fall") == "unrelated"


def test_stance_golden_fixtures():
    fixtures = json.loads((DATA / "stance_fixtures.json").read_text())
    got = {f["name"]: classify_stance(f["body"], f["claim"]) for f in fixtures}
    want = {f["name"]: f["label"] for f in fixtures}
    assert got == want


def test_stance_plugin_delegation_and_validation():
    assert classify_stance("body", "claim", impl=lambda b, c: "agree") == "agree"
    with pytest.raises(ValueError):
        classify_stance("body", "claim", impl=lambda b, c: "maybe")
    register_stance_backend(lambda b, c: "discuss")
    try:
        assert classify_stance("anything", "else") == "discuss"
    finally:
        register_stance_backend(None)


def test_stance_no_backend():
    config = StanceConfig(use_baseline=False)
    with pytest.raises(NoStanceBackend):
        classify_stance("body", "claim", config=config)


@given(st.text(max_size=120), st.text(max_size=40))
@settings(deadline=None, max_examples=40)
def test_stance_total_and_deterministic(body, claim):
    first = classify_stance(body, claim)
    assert first in ("agree", "disagree", "discuss", "unrelated")
    assert classify_stance(body, claim) == first


# -------------------------------------------------------------------- frames

def test_frames_uniform_without_hits():
    dist = baseline_frames("zzz qqq xxx")
    assert set(dist) == set(FRAME_LABELS)
    assert all(v == pytest.approx(1 / len(FRAME_LABELS)) for v in dist.values())


def test_frames_pick_up_topic_words():
    dist = baseline_frames(
        "The election campaign intensified as the party courted voters "
        "before the parliamentary vote."
    )
    assert max(dist, key=dist.get) == "political"
    assert sum(dist.values()) == pytest.approx(1.0)


def test_frames_plugin_renormalizes():
    dist = classify_frame("anything", impl=lambda b: {"economic": 3.0, "morality": 1.0})
    assert dist["economic"] == pytest.approx(0.75)
    assert dist["morality"] == pytest.approx(0.25)
    assert sum(dist.values()) == pytest.approx(1.0)


@given(st.text(max_size=150))
@settings(deadline=None, max_examples=30)
def test_frames_always_distribution(text):
    dist = classify_frame(text)
    assert set(dist) == set(FRAME_LABELS)
    assert sum(dist.values()) == pytest.approx(1.0)
    assert all(v >= 0 for v in dist.values())


# -------------------------------------------------------------- source level

def test_load_source_labels(tmp_path):
    path = tmp_path / "labels.csv"
    path.write_text(
        "medium_id,factuality,bias\n"
        "m1,high,center\n"
        "m2,low,far_right\n"
    )
    labels = load_source_labels(path)
    assert labels["m1"].factuality == "high"
    assert labels["m2"].bias == "far_right"


def test_load_source_labels_rejects_bad_rows(tmp_path):
    path = tmp_path / "labels.csv"
    path.write_text("m1,high\n")
    with pytest.raises(ParseError):
        load_source_labels(path)
    path.write_text("m1,excellent,center\n")
    with pytest.raises(ParseError):
        load_source_labels(path)


def test_hyper_partisanship_scale():
    assert hyper_partisanship("center") == 0.0
    assert hyper_partisanship("far_left") == 1.0
    assert hyper_partisanship("far_right") == 1.0
    assert hyper_partisanship("center_right") == pytest.approx(1 / 3)
    assert hyper_partisanship("left") == pytest.approx(2 / 3)
    with pytest.raises(ValueError):
        hyper_partisanship("radical")


def test_train_source_model_recovers_styles():
    from newsflow.classifiers import SourceLabels

    shouty = "TRAITORS everywhere!!! WAKE UP you fools, they LIE!!!"
    sober = (
        "The agency published revised figures for regional employment, "
        "noting seasonal adjustments in the methodology."
    )
    media_texts = {
        "loud1": [shouty, shouty + " SHARE NOW!!!"],
        "loud2": [shouty.replace("TRAITORS", "ENEMIES")],
        "calm1": [sober, sober.replace("employment", "transport")],
        "calm2": [sober.replace("agency", "bureau")],
    }
    labels = {
        "loud1": SourceLabels("low", "far_right"),
        "loud2": SourceLabels("low", "far_right"),
        "calm1": SourceLabels("high", "center"),
        "calm2": SourceLabels("high", "center"),
    }
    model = train_source_model(media_texts, labels, "factuality", max_iter=150)
    assert classify_source(model, media_texts["loud1"]) == "low"
    assert classify_source(model, media_texts["calm1"]) == "high"

"""Section categorization over TF-IDF features."""

from __future__ import annotations

from typing import Any, Iterable, Sequence

from newsflow.classifiers.maxent import LinearModel, predict_proba, train_maxent
from newsflow.classifiers.serialize import FeatureSpace
from newsflow.errors import NotFitted
from newsflow.textproc import Vocabulary, fit_vocabulary, preprocess, tfidf

SECTIONS = ("business", "entertainment", "health", "politics", "sports", "technology")


def article_text(article: Any) -> str:
    """Title and body of an article-like object, joined."""
    title = getattr(article, "title", "") or ""
    body = getattr(article, "body", "") or ""
    return f"{title}\n{body}".strip()


def article_language(article: Any) -> str:
    return getattr(article, "language", "en") or "en"


def _vocabulary_from_space(space: FeatureSpace) -> Vocabulary:
    terms = tuple(space.meta["terms"])
    return Vocabulary(terms, tuple(space.meta["document_frequency"]), space.meta["n_docs"])


def section_feature_space(vocab: Vocabulary) -> FeatureSpace:
    return FeatureSpace(
        "tfidf",
        len(vocab),
        {
            "terms": list(vocab.terms),
            "document_frequency": list(vocab.document_frequency),
            "n_docs": vocab.n_docs,
        },
    )


def train_section_model(
    samples: Sequence[tuple[Iterable[str], str]],
    *,
    min_df: int = 1,
    l2: float = 1e-4,
    max_iter: int = 300,
    tol: float = 1e-5,
) -> LinearModel:
    """Train the section categorizer from (token-list, section) pairs."""
    for _, label in samples:
        if label not in SECTIONS:
            raise ValueError(f"unknown section {label!r}")
    docs = [list(tokens) for tokens, _ in samples]
    vocab = fit_vocabulary(docs, min_df=min_df)
    space = section_feature_space(vocab)
    rows = [(tfidf(doc, vocab), label) for doc, (_, label) in zip(docs, samples)]
    return train_maxent(rows, l2=l2, max_iter=max_iter, tol=tol, feature_space=space)


def categorize_section(article: Any, model: LinearModel) -> str:
    """Predict one of the six section labels for an article.

    An empty or fully out-of-vocabulary body yields the empty vector, so
    the prediction falls to the bias alone; with zero bias that is the
    first label in the model's fixed class order.
    """
    if model is None:
        raise NotFitted("no section model")
    if model.feature_space.kind != "tfidf":
        raise NotFitted(f"expected a tfidf model, got {model.feature_space.kind!r}")
    vocab = _vocabulary_from_space(model.feature_space)
    tokens = preprocess(article_text(article), article_language(article))
    probs = predict_proba(model, tfidf(tokens, vocab))
    best = max(range(len(model.classes)), key=lambda i: (probs[i], -i))
    return model.classes[best]

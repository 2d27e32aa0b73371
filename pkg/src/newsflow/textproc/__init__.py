"""Tokenization, TF-IDF vectors, similarity, and style features."""

from newsflow.textproc.tokenize import (
    lemma_en,
    light_stem_ar,
    normalize_arabic,
    preprocess,
    split_sentences,
    stopwords,
    tokenize,
)
from newsflow.textproc.vectorize import (
    SparseVector,
    Vocabulary,
    cosine,
    fit_vocabulary,
    tfidf,
)
from newsflow.textproc.style import StyleFeatures, style_features

__all__ = [
    "SparseVector",
    "StyleFeatures",
    "Vocabulary",
    "cosine",
    "fit_vocabulary",
    "lemma_en",
    "light_stem_ar",
    "normalize_arabic",
    "preprocess",
    "split_sentences",
    "stopwords",
    "style_features",
    "tfidf",
    "tokenize",
]

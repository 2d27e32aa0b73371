"""Newsflow: multilingual news aggregation and media profiling engine.

Subpackages:
    ingest      feed parsing, article extraction, dedup, storage
    textproc    tokenization, TF-IDF, style features
    classifiers sections, propaganda, stance, frames, source-level labels
    clustering  two-stage event clustering and evaluation metrics
    profiles    media/topic aggregates and political valence
    pipeline    durable queue, stage runners, scheduling
    api         read-only HTTP API over published snapshots
"""

__version__ = "0.1.0"

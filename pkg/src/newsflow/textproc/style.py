"""Surface style features: vocabulary richness and readability."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping

from newsflow.textproc.tokenize import split_sentences, tokenize

LONG_WORD_CHARS = 7

_VOWEL_GROUP_RE = re.compile(r"[aeiouy]+")
_WS_RE = re.compile(r"\s+")


@dataclass(frozen=True)
class StyleFeatures:
    char_ngram_counts: Mapping[str, int] = field(default_factory=dict)
    type_token_ratio: float = 0.0
    hapax_ratio: float = 0.0
    avg_sentence_length: float = 0.0
    avg_word_length: float = 0.0
    flesch_reading_ease: float = 0.0
    long_word_ratio: float = 0.0


def syllables(word: str) -> int:
    """Count syllables as vowel groups, with a final silent-e discount."""
    word = word.casefold()
    count = len(_VOWEL_GROUP_RE.findall(word))
    if count > 1 and word.endswith("e") and not word.endswith(("le", "ee", "ye")):
        count -= 1
    return max(count, 1) if word else 0


def char_ngrams(text: str, sizes: tuple[int, ...] = (2, 3)) -> Counter[str]:
    """Count character n-grams over casefolded, space-collapsed text."""
    flat = _WS_RE.sub(" ", text.casefold()).strip()
    counts: Counter[str] = Counter()
    for n in sizes:
        for i in range(len(flat) - n + 1):
            counts[flat[i : i + n]] += 1
    return counts


def flesch_reading_ease(n_words: int, n_sentences: int, n_syllables: int) -> float:
    if n_words == 0 or n_sentences == 0:
        return 0.0
    return 206.835 - 1.015 * (n_words / n_sentences) - 84.6 * (n_syllables / n_words)


def style_features(text: str) -> StyleFeatures:
    """Compute the style feature bundle for a text.

    Empty text yields all-zero features by convention.
    """
    tokens = tokenize(text)
    if not tokens:
        return StyleFeatures(char_ngram_counts={})
    n = len(tokens)
    counts = Counter(tokens)
    sentences = split_sentences(text) or [text]
    total_chars = sum(len(t) for t in tokens)
    total_syllables = sum(syllables(t) for t in tokens)
    return StyleFeatures(
        char_ngram_counts=dict(char_ngrams(text)),
        type_token_ratio=len(counts) / n,
        hapax_ratio=sum(1 for c in counts.values() if c == 1) / n,
        avg_sentence_length=n / len(sentences),
        avg_word_length=total_chars / n,
        flesch_reading_ease=flesch_reading_ease(n, len(sentences), total_syllables),
        long_word_ratio=sum(1 for t in tokens if len(t) >= LONG_WORD_CHARS) / n,
    )

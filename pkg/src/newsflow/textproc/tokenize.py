"""Tokenization, normalization, and lemmatization.

English text goes through casefolding, stopword removal, and a lookup
lemma table with a conservative suffix-stripping fallback. Arabic text is
normalized (diacritics, tatweel, letter variants) and light-stemmed by
clitic removal. Both paths are pure functions over shipped data files.
"""

from __future__ import annotations

import re
from functools import lru_cache
from importlib import resources

_TOKEN_RE = re.compile(r"[^\W_]+(?:'[^\W_]+)*")
_SENTENCE_RE = re.compile(r"[.!?؟]+(?:\s+|$)|\n{2,}")

# Arabic normalization: combining marks (harakat, shadda, sukun, dagger
# alif, maddah/hamza marks) and the tatweel filler.
_AR_MARKS_RE = re.compile("[ؐ-ًؚ-ٰٟـۖ-ۭ]")
_AR_LETTER_MAP = str.maketrans(
    {
        "آ": "ا",  # alef madda
        "أ": "ا",  # alef hamza above
        "إ": "ا",  # alef hamza below
        "ٱ": "ا",  # alef wasla
        "ى": "ي",  # alef maqsura -> ya
        "ة": "ه",  # ta marbuta -> ha
        "ؤ": "و",  # waw hamza -> waw
        "ئ": "ي",  # ya hamza -> ya
    }
)

# Light stemming: strip a leading conjunction waw, then at most one
# definite-article prefix, then frequent clitic suffixes, keeping at
# least two letters of stem.
_AR_PREFIXES = ("فال", "بال", "كال",
                "لل", "ال")
_AR_SUFFIXES = ("ها", "ان", "ات", "ون",
                "ين", "يه", "ه", "ي")

_FALLBACK_KEEP_S = ("ss", "us", "is")


def _data_text(name: str) -> str:
    return resources.files("newsflow.textproc").joinpath("data", name).read_text("utf-8")


@lru_cache(maxsize=None)
def stopwords(language: str) -> frozenset[str]:
    """Return the shipped stopword set for ``language`` ("en" or "ar")."""
    text = _data_text(f"stopwords_{language}.txt")
    words = set()
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.add(line)
    return frozenset(words)


@lru_cache(maxsize=1)
def _lemma_table() -> dict[str, str]:
    table = {}
    for line in _data_text("lemmas_en.txt").splitlines():
        if not line or line.startswith("#"):
            continue
        form, _, lemma = line.partition("\t")
        table[form] = lemma
    return table


def tokenize(text: str) -> list[str]:
    """Casefold and split into word tokens, dropping punctuation."""
    return _TOKEN_RE.findall(text.casefold())


def split_sentences(text: str) -> list[str]:
    """Split text into sentences on terminal punctuation and blank lines."""
    parts = (p.strip() for p in _SENTENCE_RE.split(text))
    return [p for p in parts if p]


def lemma_en(token: str) -> str:
    """Map an English token to its lemma.

    Lookup in the shipped inflection table, with a fallback that strips
    possessives and regular plural endings only. Tokens the rules do not
    recognize come back unchanged.
    """
    table = _lemma_table()
    hit = table.get(token)
    if hit is not None:
        return hit
    if token.endswith("'s"):
        return lemma_en(token[:-2])
    if token.endswith("'"):
        return lemma_en(token[:-1])
    # Conservative plural stripping; verb endings are left to the table.
    if token.endswith("ies") and len(token) > 4:
        return token[:-3] + "y"
    if token.endswith(("ches", "shes", "sses", "xes", "zes")) and len(token) > 4:
        return token[:-2]
    if token.endswith("s") and len(token) > 3 and not token.endswith(_FALLBACK_KEEP_S):
        return token[:-1]
    return token


def normalize_arabic(text: str) -> str:
    """Strip diacritics and tatweel and fold Arabic letter variants."""
    return _AR_MARKS_RE.sub("", text).translate(_AR_LETTER_MAP)


def light_stem_ar(token: str) -> str:
    """Light-stem a normalized Arabic token by removing common clitics."""
    if token.startswith("و") and len(token) >= 4:
        token = token[1:]
    for prefix in _AR_PREFIXES:
        if token.startswith(prefix) and len(token) - len(prefix) >= 2:
            token = token[len(prefix):]
            break
    for suffix in _AR_SUFFIXES:
        if token.endswith(suffix) and len(token) - len(suffix) >= 2:
            token = token[: -len(suffix)]
    return token


def preprocess(text: str, language: str = "en") -> list[str]:
    """Casefold, tokenize, stopword, and lemmatize/stem text.

    ``language`` selects the pipeline: "en" applies the lemma table, "ar"
    applies normalization plus light stemming. Any other value falls back
    to plain tokenization. Deterministic; empty text gives an empty list.
    """
    if language == "ar":
        stops = stopwords("ar")
        out = []
        for token in tokenize(normalize_arabic(text)):
            if token in stops:
                continue
            stem = light_stem_ar(token)
            if stem and stem not in stops:
                out.append(stem)
        return out
    if language == "en":
        stops = stopwords("en")
        out = []
        for token in tokenize(text):
            if token in stops:
                continue
            lemma = lemma_en(token)
            if lemma and lemma not in stops:
                out.append(lemma)
        return out
    return tokenize(text)

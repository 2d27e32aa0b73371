"""Translation interface.

Only the identity implementation ships: it returns the text unchanged,
tagged with its original language, so downstream consumers always know
what language they are actually reading. Real machine translation slots
in behind the same interface.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Protocol


@dataclass(frozen=True)
class Translation:
    text: str
    language: str


class Translator(Protocol):
    def translate(self, text: str, source_language: str, target_language: str) -> Translation:
        ...


class IdentityTranslator:
    """Pass-through translator: output text equals input text."""

    def translate(self, text: str, source_language: str, target_language: str) -> Translation:
        return Translation(text, source_language)

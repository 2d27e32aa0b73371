"""Exception types shared across the engine."""

from __future__ import annotations


class NewsflowError(Exception):
    """Base class for all engine errors."""


class ParseError(NewsflowError):
    """Malformed feed document. ``offset`` is the approximate byte offset
    of the first error in the raw input."""

    def __init__(self, message: str, offset: int = -1):
        super().__init__(message)
        self.offset = offset


class UnsupportedKind(NewsflowError):
    """Feed kind is not one of the supported kinds."""


class InvalidUrl(NewsflowError):
    """URL could not be parsed or is not absolute."""


class ExtractError(NewsflowError):
    """Content extraction produced no usable article text."""


class ConfigError(NewsflowError):
    """A configuration file is missing required fields or violates invariants."""


class EmptyCorpus(NewsflowError):
    """Vocabulary fitting was given no documents."""


class DegenerateLabels(NewsflowError):
    """Training data contains fewer than two distinct labels."""


class ShapeError(NewsflowError):
    """Feature vector dimension does not match the model."""


class NotFitted(NewsflowError):
    """A model was used before it was trained or loaded."""


class RangeError(NewsflowError):
    """A scalar argument is outside its documented range."""


class NoStanceBackend(NewsflowError):
    """No stance plugin is registered and the baseline is disabled."""


class UndefinedValence(NewsflowError):
    """Valence is undefined: a group total is zero, or both citation
    counts are zero."""


class NotFound(NewsflowError):
    """An entity id does not exist in the store or registry."""


class PartitionMismatch(NewsflowError):
    """Two partitions do not cover the same item set."""


class NoTopic(NewsflowError):
    """Queue topic does not exist."""

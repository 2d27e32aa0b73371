"""Model container: feature space descriptors and JSON serialization.

Weights round-trip bit-exactly: float64 arrays are stored as base64 of
their little-endian raw bytes, not as decimal text.
"""

from __future__ import annotations

import base64
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Mapping

import numpy as np

from newsflow.errors import ParseError

FORMAT_NAME = "newsflow-model"
FORMAT_VERSION = 1


@dataclass(frozen=True)
class FeatureSpace:
    """Binds feature indices to their definition.

    kind: "dense" (opaque caller-managed vectors), "tfidf" (meta carries
    the vocabulary), or "style_ngrams" (style scalars plus hashed char
    n-grams; meta carries the hash dimensions).
    """

    kind: str
    dim: int
    meta: Mapping[str, Any] = field(default_factory=dict)


def _encode_array(a: np.ndarray) -> dict:
    a = np.ascontiguousarray(a, dtype="<f8")
    return {
        "dtype": "float64",
        "shape": list(a.shape),
        "data": base64.b64encode(a.tobytes()).decode("ascii"),
    }


def _decode_array(obj: Mapping[str, Any]) -> np.ndarray:
    raw = base64.b64decode(obj["data"])
    a = np.frombuffer(raw, dtype="<f8").reshape(obj["shape"])
    return a.astype(np.float64, copy=True)


def model_to_dict(model: "LinearModel") -> dict:
    return {
        "format": FORMAT_NAME,
        "version": FORMAT_VERSION,
        "classes": list(model.classes),
        "feature_space": {
            "kind": model.feature_space.kind,
            "dim": model.feature_space.dim,
            "meta": dict(model.feature_space.meta),
        },
        "weights": _encode_array(model.weights),
        "bias": _encode_array(model.bias),
        "loss_trace": list(model.loss_trace),
    }


def model_from_dict(obj: Mapping[str, Any]) -> "LinearModel":
    from newsflow.classifiers.maxent import LinearModel

    if obj.get("format") != FORMAT_NAME:
        raise ParseError(f"not a {FORMAT_NAME} container")
    if obj.get("version") != FORMAT_VERSION:
        raise ParseError(f"unsupported model version {obj.get('version')!r}")
    fs = obj["feature_space"]
    return LinearModel(
        classes=tuple(obj["classes"]),
        weights=_decode_array(obj["weights"]),
        bias=_decode_array(obj["bias"]),
        feature_space=FeatureSpace(fs["kind"], fs["dim"], fs.get("meta", {})),
        loss_trace=tuple(obj.get("loss_trace", ())),
    )


def save_model(model: "LinearModel", path: str | Path) -> None:
    Path(path).write_text(json.dumps(model_to_dict(model)), encoding="utf-8")


def load_model(path: str | Path) -> "LinearModel":
    return model_from_dict(json.loads(Path(path).read_text(encoding="utf-8")))

"""Maximum-entropy (multinomial logistic) training and inference.

Training minimizes L2-regularized mean cross-entropy with deterministic
full-batch gradient descent plus Armijo backtracking, starting from zero
weights. No randomness anywhere, so retraining on identical input gives
bit-identical models.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Hashable, Sequence

import numpy as np
import scipy.sparse as sp

from newsflow.classifiers.serialize import FeatureSpace
from newsflow.errors import DegenerateLabels, NotFitted, ShapeError
from newsflow.textproc.vectorize import SparseVector

ARMIJO_C = 1e-4
MIN_STEP = 1e-12
MAX_STEP = 1e3
LOGIT_FLOOR = -700.0  # exp() stays positive, keeping probabilities nonzero


@dataclass(frozen=True)
class LinearModel:
    """Immutable multinomial logistic model."""

    classes: tuple
    weights: np.ndarray  # shape (n_classes, n_features)
    bias: np.ndarray  # shape (n_classes,)
    feature_space: FeatureSpace
    loss_trace: tuple[float, ...] = ()

    def __post_init__(self) -> None:
        if self.weights.ndim != 2:
            raise ShapeError("weights must be a 2-D matrix")
        n_classes, n_features = self.weights.shape
        if len(self.classes) != n_classes:
            raise ShapeError("classes and weight rows disagree")
        if self.bias.shape != (n_classes,):
            raise ShapeError("bias length and weight rows disagree")
        if self.feature_space.dim != n_features:
            raise ShapeError("feature_space.dim and weight columns disagree")


def _vector_dim(x: Any) -> int:
    if isinstance(x, SparseVector):
        return (x.indices[-1] + 1) if x.indices else 0
    if sp.issparse(x):
        return x.shape[-1]
    return np.asarray(x).shape[-1]


def _stack(vectors: Sequence[Any], dim: int):
    """Stack feature vectors into a dense or CSR design matrix."""
    any_sparse = any(isinstance(v, SparseVector) or sp.issparse(v) for v in vectors)
    if not any_sparse:
        X = np.asarray([np.asarray(v, dtype=np.float64) for v in vectors])
        if X.shape[1] != dim:
            raise ShapeError(f"expected {dim} features, got {X.shape[1]}")
        return X
    rows = []
    for v in vectors:
        if isinstance(v, SparseVector):
            row = sp.csr_matrix(
                (v.weights, v.indices, [0, len(v.indices)]),
                shape=(1, dim), dtype=np.float64,
            )
        elif sp.issparse(v):
            row = sp.csr_matrix(v, dtype=np.float64)
            if row.shape != (1, dim):
                raise ShapeError(f"expected a 1x{dim} row, got {row.shape}")
        else:
            dense = np.asarray(v, dtype=np.float64).reshape(1, -1)
            if dense.shape[1] != dim:
                raise ShapeError(f"expected {dim} features, got {dense.shape[1]}")
            row = sp.csr_matrix(dense)
        rows.append(row)
    return sp.vstack(rows, format="csr")


def _softmax(scores: np.ndarray) -> np.ndarray:
    z = scores - scores.max(axis=-1, keepdims=True)
    np.clip(z, LOGIT_FLOOR, None, out=z)
    e = np.exp(z)
    return e / e.sum(axis=-1, keepdims=True)


def loss_and_gradient(
    weights: np.ndarray,
    bias: np.ndarray,
    X,
    Y: np.ndarray,
    l2: float,
) -> tuple[float, np.ndarray, np.ndarray]:
    """Mean cross-entropy with L2 penalty, plus its exact gradient.

    Y is the one-hot label matrix. The bias is not regularized. Exposed
    so tests can check the gradient against finite differences.
    """
    n = Y.shape[0]
    probs = _softmax(X @ weights.T + bias)
    true_p = probs[Y.astype(bool)]
    loss = -float(np.log(true_p).mean()) + 0.5 * l2 * float((weights * weights).sum())
    delta = probs - Y
    grad_w = np.asarray((X.T @ delta).T) / n + l2 * weights
    grad_b = delta.mean(axis=0)
    return loss, grad_w, grad_b


def train_maxent(
    samples: Sequence[tuple[Any, Hashable]],
    *,
    l2: float = 0.0,
    max_iter: int = 200,
    tol: float = 1e-6,
    feature_space: FeatureSpace | None = None,
) -> LinearModel:
    """Train a multinomial logistic model on (feature-vector, label) pairs.

    Feature vectors may be dense sequences, SparseVector, or 1-row scipy
    sparse matrices; all must share one dimension. Labels are sorted to
    fix the class order. Raises DegenerateLabels for single-class input.
    """
    if not samples:
        raise DegenerateLabels("no training samples")
    vectors = [x for x, _ in samples]
    labels = [y for _, y in samples]
    classes = tuple(sorted(set(labels)))
    if len(classes) < 2:
        raise DegenerateLabels(f"need at least 2 classes, got {len(classes)}")

    dim = feature_space.dim if feature_space is not None else max(
        _vector_dim(v) for v in vectors
    )
    space = feature_space or FeatureSpace("dense", dim)
    X = _stack(vectors, dim)
    index = {c: i for i, c in enumerate(classes)}
    Y = np.zeros((len(labels), len(classes)))
    Y[np.arange(len(labels)), [index[y] for y in labels]] = 1.0

    W = np.zeros((len(classes), dim))
    b = np.zeros(len(classes))
    loss, grad_w, grad_b = loss_and_gradient(W, b, X, Y, l2)
    trace = [loss]
    step = 1.0
    for _ in range(max_iter):
        gmax = max(np.abs(grad_w).max(initial=0.0), np.abs(grad_b).max(initial=0.0))
        if gmax < tol:
            break
        gnorm2 = float((grad_w * grad_w).sum() + (grad_b * grad_b).sum())
        while True:
            W_next = W - step * grad_w
            b_next = b - step * grad_b
            loss_next, gw_next, gb_next = loss_and_gradient(W_next, b_next, X, Y, l2)
            if loss_next <= loss - ARMIJO_C * step * gnorm2:
                break
            step *= 0.5
            if step < MIN_STEP:
                break
        if step < MIN_STEP:
            break
        W, b = W_next, b_next
        loss, grad_w, grad_b = loss_next, gw_next, gb_next
        trace.append(loss)
        step = min(step * 2.0, MAX_STEP)

    return LinearModel(classes, W, b, space, tuple(trace))


def _scores(model: LinearModel, x: Any) -> np.ndarray:
    dim = model.feature_space.dim
    if isinstance(x, SparseVector):
        if x.indices and x.indices[-1] >= dim:
            raise ShapeError(f"index {x.indices[-1]} outside {dim}-dim space")
        z = model.bias.copy()
        for i, w in zip(x.indices, x.weights):
            z += w * model.weights[:, i]
        return z
    if sp.issparse(x):
        if x.shape[-1] != dim:
            raise ShapeError(f"expected {dim} features, got {x.shape[-1]}")
        return np.asarray((x @ model.weights.T)).ravel() + model.bias
    dense = np.asarray(x, dtype=np.float64)
    if dense.shape != (dim,):
        raise ShapeError(f"expected {dim} features, got {dense.shape}")
    return model.weights @ dense + model.bias


def predict_proba(model: LinearModel, x: Any) -> np.ndarray:
    """Softmax class probabilities; strictly positive, summing to 1."""
    if model.weights.size == 0 and model.bias.size == 0:
        raise NotFitted("model has no parameters")
    return _softmax(_scores(model, x))


def predict(model: LinearModel, x: Any) -> Hashable:
    """Argmax class; ties break toward the earlier class in sorted order."""
    return model.classes[int(np.argmax(predict_proba(model, x)))]

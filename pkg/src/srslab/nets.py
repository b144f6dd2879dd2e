"""One-hidden-layer rectifier network with softmax cross-entropy.

Deliberately the smallest model whose training is nonconvex, so sampler
effects are observable while the gradients stay cheap to verify against
finite differences.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass
class Mlp:
    w1: np.ndarray  # (dim, hidden)
    b1: np.ndarray  # (hidden,)
    w2: np.ndarray  # (hidden, classes)
    b2: np.ndarray  # (classes,)

    def param_items(self) -> list[tuple[str, np.ndarray]]:
        return [("w1", self.w1), ("b1", self.b1),
                ("w2", self.w2), ("b2", self.b2)]


@dataclass
class ForwardCache:
    x: np.ndarray
    y: np.ndarray
    z1: np.ndarray
    a1: np.ndarray
    probs: np.ndarray


def init_mlp(dim: int, hidden: int, classes: int,
             rng: np.random.Generator) -> Mlp:
    """Gaussian weights scaled by 1/sqrt(fan-in), zero biases."""
    if min(dim, hidden, classes) < 1:
        raise ValueError("dim, hidden and classes must all be >= 1")
    w1 = rng.normal(0.0, 1.0, size=(dim, hidden)) / np.sqrt(dim)
    w2 = rng.normal(0.0, 1.0, size=(hidden, classes)) / np.sqrt(hidden)
    return Mlp(w1, np.zeros(hidden), w2, np.zeros(classes))


def forward_loss(model: Mlp, x: np.ndarray,
                 y: np.ndarray) -> tuple[float, ForwardCache]:
    """Mean cross-entropy of softmax outputs over the batch.

    Log-sum-exp stabilized, so the loss is finite for any finite logits.
    Returns the cached activations needed by `backward`.
    """
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y)
    if x.ndim != 2 or x.shape[1] != model.w1.shape[0]:
        raise ValueError(
            f"batch features must be (n, {model.w1.shape[0]}), "
            f"got {x.shape}"
        )
    z1 = x @ model.w1 + model.b1
    a1 = np.maximum(z1, 0.0)
    z2 = a1 @ model.w2 + model.b2
    shifted = z2 - z2.max(axis=1, keepdims=True)
    log_norm = np.log(np.exp(shifted).sum(axis=1, keepdims=True))
    log_probs = shifted - log_norm
    loss = float(-log_probs[np.arange(x.shape[0]), y].mean())
    return loss, ForwardCache(x, y, z1, a1, np.exp(log_probs))


def backward(model: Mlp, cache: ForwardCache) -> dict[str, np.ndarray]:
    """Analytic gradient of the mean cross-entropy for every parameter."""
    n = cache.x.shape[0]
    dz2 = cache.probs.copy()
    dz2[np.arange(n), cache.y] -= 1.0
    dz2 /= n
    da1 = dz2 @ model.w2.T
    dz1 = da1 * (cache.z1 > 0.0)
    return {
        "w1": cache.x.T @ dz1,
        "b1": dz1.sum(axis=0),
        "w2": cache.a1.T @ dz2,
        "b2": dz2.sum(axis=0),
    }


def predict(model: Mlp, x: np.ndarray) -> np.ndarray:
    """Argmax class labels for a feature matrix."""
    z1 = np.maximum(np.asarray(x, dtype=np.float64) @ model.w1 + model.b1, 0.0)
    return np.argmax(z1 @ model.w2 + model.b2, axis=1)


def error_rate(model: Mlp, x: np.ndarray, y: np.ndarray) -> float:
    """Misclassification rate in [0, 1]."""
    return float((predict(model, x) != np.asarray(y)).mean())

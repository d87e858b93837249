"""Small tanh multilayer perceptron trained full-batch with L-BFGS.

Two hidden layers of widths 5 and 2, a linear output, mean squared
error plus an L2 penalty on the weight matrices (biases are not
penalized). Inputs and target are standardized internally and the
prediction is mapped back to load units.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import PredictionError, TrainingError, ValidationError
from .lbfgs import minimize_lbfgs
from .scaler import StandardScaler

HIDDEN_SIZES = (5, 2)


@dataclass(frozen=True)
class MlpConfig:
    hidden_sizes: tuple[int, int] = HIDDEN_SIZES
    max_iters: int = 400
    tolerance: float = 1e-6
    l2_weight: float = 1e-4
    seed: int = 0

    def __post_init__(self):
        if tuple(self.hidden_sizes) != HIDDEN_SIZES:
            raise ValidationError(
                f"hidden layer widths are fixed at {HIDDEN_SIZES}"
            )
        if self.max_iters < 0 or self.tolerance <= 0 or self.l2_weight < 0:
            raise ValidationError("bad MLP config")


class _Shapes:
    def __init__(self, d: int):
        h1, h2 = HIDDEN_SIZES
        self.blocks = [(d, h1), (1, h1), (h1, h2), (1, h2), (h2, 1), (1, 1)]
        self.sizes = [r * c for r, c in self.blocks]
        self.total = sum(self.sizes)

    def unpack(self, theta: np.ndarray):
        out, pos = [], 0
        for (r, c), sz in zip(self.blocks, self.sizes):
            out.append(theta[pos : pos + sz].reshape(r, c))
            pos += sz
        return out  # W1, b1, W2, b2, W3, b3


def init_params(d: int, seed: int) -> np.ndarray:
    """Seeded uniform init in +/- sqrt(6 / (fan_in + fan_out)); zero biases."""
    rng = np.random.default_rng(seed)
    shapes = _Shapes(d)
    parts = []
    for i, (r, c) in enumerate(shapes.blocks):
        if r == 1 and i % 2 == 1:  # bias rows
            parts.append(np.zeros(c))
        else:
            fan_in, fan_out = r, c
            limit = np.sqrt(6.0 / (fan_in + fan_out))
            parts.append(rng.uniform(-limit, limit, size=r * c))
    return np.concatenate(parts)


def loss_and_grad(theta: np.ndarray, X: np.ndarray, y: np.ndarray, l2: float):
    """MSE + l2 * sum(W^2) and its exact gradient via backprop."""
    shapes = _Shapes(X.shape[1])
    W1, b1, W2, b2, W3, b3 = shapes.unpack(theta)
    n = X.shape[0]
    a1 = np.tanh(X @ W1 + b1)
    a2 = np.tanh(a1 @ W2 + b2)
    out = (a2 @ W3 + b3).ravel()
    resid = out - y
    loss = float(resid @ resid) / n + l2 * (
        float((W1 * W1).sum()) + float((W2 * W2).sum()) + float((W3 * W3).sum())
    )
    d_out = (2.0 / n) * resid[:, None]
    gW3 = a2.T @ d_out + 2.0 * l2 * W3
    gb3 = d_out.sum(axis=0, keepdims=True)
    d_a2 = d_out @ W3.T
    d_z2 = d_a2 * (1.0 - a2 * a2)
    gW2 = a1.T @ d_z2 + 2.0 * l2 * W2
    gb2 = d_z2.sum(axis=0, keepdims=True)
    d_a1 = d_z2 @ W2.T
    d_z1 = d_a1 * (1.0 - a1 * a1)
    gW1 = X.T @ d_z1 + 2.0 * l2 * W1
    gb1 = d_z1.sum(axis=0, keepdims=True)
    grad = np.concatenate([g.ravel() for g in (gW1, gb1, gW2, gb2, gW3, gb3)])
    return loss, grad


class MlpModel:
    kind = "mlp"

    def __init__(self, config, x_scaler, y_scaler, theta, feature_names, metadata):
        self.config = config
        self.x_scaler = x_scaler
        self.y_scaler = y_scaler
        self.theta = np.asarray(theta, dtype=float)
        self.feature_names = feature_names
        self.metadata = metadata
        self._d = x_scaler.mean.shape[0]

    def predict(self, X: np.ndarray) -> np.ndarray:
        X = np.asarray(X, dtype=float)
        if X.ndim != 2 or X.shape[1] != self._d:
            raise PredictionError(
                f"expected {self._d} feature columns"
                + (f" ({self.feature_names})" if self.feature_names else "")
                + f", got shape {X.shape}"
            )
        shapes = _Shapes(self._d)
        W1, b1, W2, b2, W3, b3 = shapes.unpack(self.theta)
        a1 = np.tanh(self.x_scaler.apply(X) @ W1 + b1)
        a2 = np.tanh(a1 @ W2 + b2)
        z = (a2 @ W3 + b3).ravel()
        return self.y_scaler.inverse(z)


def train_mlp(X, y, cfg: MlpConfig = MlpConfig(), feature_names=None) -> MlpModel:
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float)
    if X.ndim != 2 or y.ndim != 1 or X.shape[0] != y.shape[0]:
        raise TrainingError(f"bad training shapes {X.shape}, {y.shape}")
    if not (np.all(np.isfinite(X)) and np.all(np.isfinite(y))):
        raise TrainingError("training data must be finite")
    x_scaler = StandardScaler.fit(X)
    y_scaler = StandardScaler.fit(y[:, None])
    Xs = x_scaler.apply(X)
    ys = y_scaler.apply(y[:, None]).ravel()
    theta0 = init_params(X.shape[1], cfg.seed)
    result = minimize_lbfgs(
        lambda t: loss_and_grad(t, Xs, ys, cfg.l2_weight),
        theta0,
        max_iters=cfg.max_iters,
        tolerance=cfg.tolerance,
    )
    metadata = {
        "final_loss": result.fun,
        "iterations": result.iterations,
        "converged": result.converged,
        "line_search_failed": result.line_search_failed,
    }
    return MlpModel(cfg, x_scaler, y_scaler, result.x, feature_names, metadata)

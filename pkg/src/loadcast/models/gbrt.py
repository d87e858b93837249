"""Least-squares gradient boosted regression trees, exact greedy splits.

Stage zero predicts the training mean; every later stage fits a
depth-limited regression tree to the current residuals and is added
with the learning rate. Split search is exact: every boundary between
consecutive distinct sorted feature values is scored, features are
scanned in index order, and only a strictly better gain replaces the
incumbent, so ties resolve to the lowest feature index and threshold.
Trees split on ``x <= threshold`` with the threshold taken from the
observed values themselves.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import PredictionError, TrainingError, ValidationError

_MIN_GAIN = 1e-12


@dataclass(frozen=True)
class GbrtConfig:
    n_trees: int = 100
    learning_rate: float = 0.1
    max_depth: int = 3
    min_samples_leaf: int = 1
    seed: int = 0  # reserved; training is deterministic without sampling

    def __post_init__(self):
        if self.n_trees < 0:
            raise ValidationError("n_trees must be >= 0")
        if not 0.0 < self.learning_rate <= 1.0:
            raise ValidationError("learning_rate must lie in (0, 1]")
        if self.max_depth < 1 or self.min_samples_leaf < 1:
            raise ValidationError("bad tree shape parameters")


class Tree:
    """Flat-array regression tree: feature[i] == -1 marks a leaf."""

    __slots__ = ("feature", "threshold", "left", "right", "value")

    def __init__(self):
        self.feature: list[int] = []
        self.threshold: list[float] = []
        self.left: list[int] = []
        self.right: list[int] = []
        self.value: list[float] = []

    def _new_node(self) -> int:
        self.feature.append(-1)
        self.threshold.append(0.0)
        self.left.append(-1)
        self.right.append(-1)
        self.value.append(0.0)
        return len(self.feature) - 1

    def predict(self, X: np.ndarray) -> np.ndarray:
        out = np.empty(X.shape[0])
        stack = [(0, np.arange(X.shape[0]))]
        while stack:
            node, idx = stack.pop()
            if idx.size == 0:
                continue
            f = self.feature[node]
            if f < 0:
                out[idx] = self.value[node]
                continue
            goes_left = X[idx, f] <= self.threshold[node]
            stack.append((self.left[node], idx[goes_left]))
            stack.append((self.right[node], idx[~goes_left]))
        return out


def _best_split(X, y, idx, min_leaf):
    """Exact greedy split over the rows in idx; None when nothing gains."""
    n = idx.size
    y_node = y[idx]
    total = y_node.sum()
    base = total * total / n
    best = None  # (gain, feature, threshold)
    for f in range(X.shape[1]):
        xs = X[idx, f]
        order = np.argsort(xs, kind="stable")
        xs_sorted = xs[order]
        prefix = np.cumsum(y_node[order])
        boundary = np.flatnonzero(xs_sorted[:-1] < xs_sorted[1:])
        if boundary.size == 0:
            continue
        lcnt = boundary + 1
        rcnt = n - lcnt
        ok = (lcnt >= min_leaf) & (rcnt >= min_leaf)
        if not ok.any():
            continue
        lsum = prefix[boundary[ok]]
        lc = lcnt[ok]
        rc = rcnt[ok]
        gains = lsum * lsum / lc + (total - lsum) ** 2 / rc - base
        j = int(np.argmax(gains))
        gain = float(gains[j])
        if gain > _MIN_GAIN and (best is None or gain > best[0]):
            thr = float(xs_sorted[boundary[ok][j]])
            best = (gain, f, thr)
    return best


def _grow(tree: Tree, X, y, idx, depth, cfg: GbrtConfig) -> int:
    node = tree._new_node()
    tree.value[node] = float(y[idx].mean())
    if depth >= cfg.max_depth or idx.size < 2 * cfg.min_samples_leaf:
        return node
    split = _best_split(X, y, idx, cfg.min_samples_leaf)
    if split is None:
        return node
    _, f, thr = split
    mask = X[idx, f] <= thr
    tree.feature[node] = f
    tree.threshold[node] = thr
    tree.left[node] = _grow(tree, X, y, idx[mask], depth + 1, cfg)
    tree.right[node] = _grow(tree, X, y, idx[~mask], depth + 1, cfg)
    return node


class GbrtModel:
    kind = "gbrt"

    def __init__(self, config, base_value, trees, feature_names, metadata):
        self.config = config
        self.base_value = float(base_value)
        self.trees = trees
        self.feature_names = feature_names
        self.metadata = metadata

    @property
    def _d(self) -> int:
        return self.metadata["n_features"]

    def predict(self, X: np.ndarray) -> np.ndarray:
        X = np.asarray(X, dtype=float)
        if X.ndim != 2 or X.shape[1] != self._d:
            raise PredictionError(
                f"expected {self._d} feature columns"
                + (f" ({self.feature_names})" if self.feature_names else "")
                + f", got shape {X.shape}"
            )
        out = np.full(X.shape[0], self.base_value)
        lr = self.config.learning_rate
        for tree in self.trees:
            out += lr * tree.predict(X)
        return out


def train_gbrt(X, y, cfg: GbrtConfig = GbrtConfig(), feature_names=None) -> GbrtModel:
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float)
    if X.ndim != 2 or y.ndim != 1 or X.shape[0] != y.shape[0]:
        raise TrainingError(f"bad training shapes {X.shape}, {y.shape}")
    if X.shape[0] < 2:
        raise TrainingError("need at least 2 training rows")
    if not (np.all(np.isfinite(X)) and np.all(np.isfinite(y))):
        raise TrainingError("training data must be finite")
    base = float(y.mean())
    current = np.full(y.shape, base)
    trees: list[Tree] = []
    stage_mse = [float(np.mean((y - current) ** 2))]
    all_idx = np.arange(X.shape[0])
    for _ in range(cfg.n_trees):
        residual = y - current
        tree = Tree()
        _grow(tree, X, residual, all_idx, 0, cfg)
        current = current + cfg.learning_rate * tree.predict(X)
        trees.append(tree)
        stage_mse.append(float(np.mean((y - current) ** 2)))
    metadata = {
        "n_features": X.shape[1],
        "stage_mse": stage_mse,
        "final_loss": stage_mse[-1],
        "iterations": len(trees),
    }
    return GbrtModel(cfg, base, trees, feature_names, metadata)

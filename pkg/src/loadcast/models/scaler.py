"""Per-feature standardization learned on training data."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import TrainingError


@dataclass(frozen=True)
class StandardScaler:
    """Mean/std transform; zero-variance features map to exactly 0."""

    mean: np.ndarray
    std: np.ndarray

    @staticmethod
    def fit(X: np.ndarray) -> "StandardScaler":
        X = np.asarray(X, dtype=float)
        if not np.all(np.isfinite(X)):
            raise TrainingError("cannot standardize non-finite data")
        mean = X.mean(axis=0)
        std = X.std(axis=0)
        std = np.where(std == 0.0, 1.0, std)
        return StandardScaler(mean=mean, std=std)

    def apply(self, X: np.ndarray) -> np.ndarray:
        return (np.asarray(X, dtype=float) - self.mean) / self.std

    def inverse(self, Z: np.ndarray) -> np.ndarray:
        return np.asarray(Z, dtype=float) * self.std + self.mean

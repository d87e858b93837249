"""Exhaustive grid search scored by seeded k-fold MAPE."""

from __future__ import annotations

import itertools
from dataclasses import replace

import numpy as np

from ..errors import ValidationError
from ..metrics import mape
from .registry import default_config, trainer_for


def kfold_indices(n: int, folds: int, seed: int) -> list[np.ndarray]:
    """Deterministic shuffled fold assignment."""
    if folds < 2 or folds > n:
        raise ValidationError(f"folds must satisfy 2 <= folds <= {n}, got {folds}")
    perm = np.random.default_rng(seed).permutation(n)
    return [np.sort(chunk) for chunk in np.array_split(perm, folds)]


def grid_search(
    kind: str,
    grid: dict[str, list],
    X,
    y,
    folds: int = 3,
    seed: int = 0,
    base_config=None,
):
    """Evaluate every lattice point of ``grid`` by k-fold MAPE.

    Returns (best config, table) where the table holds one
    (params, mean MAPE) row per lattice point in lattice order; ties
    keep the earlier point.
    """
    if not grid:
        raise ValidationError("empty parameter grid")
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float)
    base = base_config if base_config is not None else default_config(kind)
    trainer = trainer_for(kind)
    fold_idx = kfold_indices(X.shape[0], folds, seed)
    all_rows = np.arange(X.shape[0])

    names = list(grid.keys())
    table = []
    best = None
    for combo in itertools.product(*(grid[k] for k in names)):
        params = dict(zip(names, combo))
        cfg = replace(base, **params)
        scores = []
        for held in fold_idx:
            train_rows = np.setdiff1d(all_rows, held)
            model = trainer(X[train_rows], y[train_rows], cfg)
            scores.append(mape(y[held], model.predict(X[held])))
        mean_mape = float(np.mean(scores))
        table.append((params, mean_mape))
        if best is None or mean_mape < best[1]:
            best = (cfg, mean_mape)
    return best[0], table

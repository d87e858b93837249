"""Linear epsilon-insensitive support vector regression.

Minimizes

    (1/2) ||w||^2 + c * sum_i max(0, |w.x_i + b - y_i| - epsilon)

in the dual: box-constrained coefficients alpha / alpha_star per sample
with one equality constraint from the unregularized bias. The solver is
pairwise dual coordinate descent on the most-violating pair (the
classic SMO working-set rule), which is fully deterministic: argmax /
argmin tie-break to the lowest index, so retraining reproduces the
weights bit for bit. The bias is the midpoint of the converged KKT
interval.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import PredictionError, TrainingError, ValidationError
from .scaler import StandardScaler


@dataclass(frozen=True)
class SvrConfig:
    c: float = 1.0
    epsilon: float = 0.1  # tube half-width in standardized target units
    max_iters: int = 50000
    tolerance: float = 1e-3

    def __post_init__(self):
        if self.c <= 0:
            raise ValidationError("c must be > 0")
        if self.epsilon < 0:
            raise ValidationError("epsilon must be >= 0")
        if self.max_iters < 0 or self.tolerance <= 0:
            raise ValidationError("bad SVR solver parameters")


def svr_objective(X, y, w, b, c, epsilon) -> float:
    """The primal objective this solver minimizes."""
    resid = np.abs(X @ w + b - y) - epsilon
    return 0.5 * float(w @ w) + c * float(np.maximum(resid, 0.0).sum())


def solve_epsilon_svr(
    X: np.ndarray,
    y: np.ndarray,
    c: float,
    epsilon: float,
    tolerance: float = 1e-3,
    max_iters: int = 50000,
):
    """Dual solve on the given arrays (no scaling). Returns (w, b, info)."""
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float)
    n = X.shape[0]
    alpha = np.zeros(n)
    alpha_star = np.zeros(n)
    w = np.zeros(X.shape[1])
    neg_inf = -np.inf
    pos_inf = np.inf
    it = 0
    gap = pos_inf
    while it < max_iters:
        g = X @ w
        score = y - g  # -s * gradient is score -/+ epsilon per side
        up_plus = np.where(alpha < c, score - epsilon, neg_inf)
        up_minus = np.where(alpha_star > 0, score + epsilon, neg_inf)
        low_plus = np.where(alpha > 0, score - epsilon, pos_inf)
        low_minus = np.where(alpha_star < c, score + epsilon, pos_inf)
        i_cat = int(np.argmax(np.concatenate([up_plus, up_minus])))
        j_cat = int(np.argmin(np.concatenate([low_plus, low_minus])))
        m = (up_plus if i_cat < n else up_minus)[i_cat % n]
        big_m = (low_plus if j_cat < n else low_minus)[j_cat % n]
        gap = m - big_m
        if not np.isfinite(gap) or gap < tolerance:
            break
        ui, uj = i_cat % n, j_cat % n
        room_i = c - alpha[ui] if i_cat < n else alpha_star[ui]
        room_j = alpha[uj] if j_cat < n else c - alpha_star[uj]
        diff = X[ui] - X[uj]
        kappa = float(diff @ diff)
        tau = gap / kappa if kappa > 1e-12 else pos_inf
        tau = min(tau, room_i, room_j)
        if tau <= 0:
            break
        if i_cat < n:
            alpha[ui] += tau
        else:
            alpha_star[ui] -= tau
        if j_cat < n:
            alpha[uj] -= tau
        else:
            alpha_star[uj] += tau
        w += tau * X[ui] - tau * X[uj]
        it += 1
    g = X @ w
    score = y - g
    up = np.concatenate(
        [np.where(alpha < c, score - epsilon, neg_inf),
         np.where(alpha_star > 0, score + epsilon, neg_inf)]
    )
    low = np.concatenate(
        [np.where(alpha > 0, score - epsilon, pos_inf),
         np.where(alpha_star < c, score + epsilon, pos_inf)]
    )
    hi, lo = float(np.max(up)), float(np.min(low))
    if not np.isfinite(hi):
        hi = lo
    if not np.isfinite(lo):
        lo = hi
    b = 0.5 * (hi + lo)
    info = {
        "iterations": it,
        "converged": gap < tolerance,
        "kkt_gap": float(gap) if np.isfinite(gap) else 0.0,
        "objective": svr_objective(X, y, w, b, c, epsilon),
    }
    return w, b, info


class SvrModel:
    kind = "svr"

    def __init__(self, config, x_scaler, y_scaler, w, b, feature_names, metadata):
        self.config = config
        self.x_scaler = x_scaler
        self.y_scaler = y_scaler
        self.w = np.asarray(w, dtype=float)
        self.b = float(b)
        self.feature_names = feature_names
        self.metadata = metadata

    @property
    def _d(self) -> int:
        return self.w.shape[0]

    def predict(self, X: np.ndarray) -> np.ndarray:
        X = np.asarray(X, dtype=float)
        if X.ndim != 2 or X.shape[1] != self._d:
            raise PredictionError(
                f"expected {self._d} feature columns"
                + (f" ({self.feature_names})" if self.feature_names else "")
                + f", got shape {X.shape}"
            )
        z = self.x_scaler.apply(X) @ self.w + self.b
        return self.y_scaler.inverse(z)


def train_svr(X, y, cfg: SvrConfig = SvrConfig(), feature_names=None) -> SvrModel:
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float)
    if X.ndim != 2 or y.ndim != 1 or X.shape[0] != y.shape[0]:
        raise TrainingError(f"bad training shapes {X.shape}, {y.shape}")
    if X.shape[0] < 2:
        raise TrainingError("need at least 2 training rows")
    if not (np.all(np.isfinite(X)) and np.all(np.isfinite(y))):
        raise TrainingError("training data must be finite")
    x_scaler = StandardScaler.fit(X)
    y_scaler = StandardScaler.fit(y[:, None])
    Xs = x_scaler.apply(X)
    ys = y_scaler.apply(y[:, None]).ravel()
    w, b, info = solve_epsilon_svr(
        Xs, ys, cfg.c, cfg.epsilon, cfg.tolerance, cfg.max_iters
    )
    info["final_loss"] = info["objective"]
    return SvrModel(cfg, x_scaler, y_scaler, w, b, feature_names, info)

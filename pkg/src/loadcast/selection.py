"""Two-stage dominant-feature selection: low-variance gate, then top-k
by the univariate regression F-score.

Stage one computes the population variance of each (optionally
min-max scaled) column and removes features below a threshold; removed
features are reported with score 0. Stage two scores each survivor by

    f = r^2 / (1 - r^2) * (n - 2)

where r is the Pearson correlation against the target, and keeps the
top k. Ties in f break on column order, so results are reproducible
bit for bit.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import SelectionError, ValidationError
from .timeseries import FeatureMatrix

#: Gate comparisons get this absolute slack so that a column engineered to
#: sit exactly at the threshold (e.g. a 12% indicator at 0.1056) is kept
#: regardless of float round-off in the variance reduction.
_GATE_EPS = 1e-12


class Scaling(Enum):
    RAW = "raw"
    MINMAX = "minmax"


@dataclass(frozen=True)
class SelectionConfig:
    variance_threshold: float = 0.1056
    k: int = 1
    scaling: Scaling = Scaling.MINMAX

    def __post_init__(self):
        if self.variance_threshold < 0:
            raise ValidationError("variance threshold must be >= 0")
        if self.k < 1:
            raise ValidationError("k must be >= 1")


class DropStage(Enum):
    NONE = "none"
    VARIANCE_GATE = "variance_gate"
    TOP_K = "top_k"


@dataclass(frozen=True)
class FeatureScore:
    name: str
    aspect: str
    variance: float
    r: float | None
    f: float
    rank: int | None
    kept: bool
    stage_dropped: DropStage


@dataclass(frozen=True)
class SelectionReport:
    scores: tuple[FeatureScore, ...]
    k_requested: int
    k_effective: int
    truncated_by_survivors: bool

    def kept_names(self) -> list[str]:
        return [s.name for s in self.scores if s.kept]

    def to_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["name", "aspect", "variance", "r", "f", "rank", "kept"])
            for s in self.scores:
                writer.writerow([
                    s.name,
                    s.aspect,
                    repr(s.variance),
                    "" if s.r is None else repr(s.r),
                    "inf" if np.isinf(s.f) else repr(s.f),
                    "" if s.rank is None else s.rank,
                    int(s.kept),
                ])


def _scaled(values: np.ndarray, scaling: Scaling) -> np.ndarray:
    if scaling is Scaling.RAW:
        return values
    lo, hi = values.min(), values.max()
    if hi == lo:
        return np.zeros_like(values)
    return (values - lo) / (hi - lo)


def population_variance(values: np.ndarray) -> float:
    return float(np.mean((values - values.mean()) ** 2))


def variance_gate(
    matrix: FeatureMatrix,
    threshold: float = 0.1056,
    scaling: Scaling = Scaling.MINMAX,
) -> tuple[list[str], list[str], dict[str, float]]:
    """Split features into gate survivors and low-variance drops.

    Returns (survivor names, dropped names, per-feature variance in the
    gate's scaling). Dropping is strict: variance < threshold.
    """
    if matrix.n < 2:
        raise ValidationError("variance gate needs at least 2 rows")
    survivors, dropped, variances = [], [], {}
    for col in matrix.columns:
        var = population_variance(_scaled(col.values, scaling))
        variances[col.name] = var
        if var < threshold - _GATE_EPS:
            dropped.append(col.name)
        else:
            survivors.append(col.name)
    return survivors, dropped, variances


def pearson_r(column: np.ndarray, target: np.ndarray) -> float:
    """Pearson correlation of one feature against the target."""
    x = np.asarray(column, dtype=float)
    y = np.asarray(target, dtype=float)
    if x.shape != y.shape or x.ndim != 1:
        raise ValidationError("column and target must be 1-D and equal length")
    if x.size < 2:
        raise ValidationError("correlation needs at least 2 samples")
    xc = x - x.mean()
    yc = y - y.mean()
    sx = np.sqrt(np.sum(xc * xc))
    sy = np.sqrt(np.sum(yc * yc))
    if sx == 0.0 or sy == 0.0:
        raise SelectionError("correlation undefined: zero variance input")
    return float(np.sum(xc * yc) / (sx * sy))


def f_score(r: float, n: int) -> float:
    """Univariate F-score of a correlation at sample size n.

    Perfect correlation maps to +inf so collinear features rank first
    instead of erroring out.
    """
    if n <= 2:
        raise ValidationError(f"f_score needs n > 2, got {n}")
    r2 = r * r
    if r2 >= 1.0:
        return float("inf")
    return r2 / (1.0 - r2) * (n - 2)


def select_top_k(
    matrix: FeatureMatrix, config: SelectionConfig
) -> tuple[FeatureMatrix, SelectionReport]:
    """Run both stages and return the reduced matrix plus a full report.

    Survivors are ranked by f descending with ties broken by column
    order. If fewer than k features survive the gate, all survivors are
    kept and the report is flagged.
    """
    survivors, dropped, variances = variance_gate(
        matrix, config.variance_threshold, config.scaling
    )
    if not survivors:
        raise SelectionError(
            "variance gate removed every feature; lower the threshold"
        )
    y = matrix.target.values
    stats: dict[str, tuple[float, float]] = {}
    for name in survivors:
        r = pearson_r(matrix.column(name).values, y)
        stats[name] = (r, f_score(r, matrix.n))
    order = {name: i for i, name in enumerate(matrix.names)}
    ranked = sorted(survivors, key=lambda nm: (-stats[nm][1], order[nm]))
    k_eff = min(config.k, len(ranked))
    kept = set(ranked[:k_eff])
    ranks = {name: i + 1 for i, name in enumerate(ranked)}

    scores = []
    for col in matrix.columns:
        nm = col.name
        if nm in stats:
            r, f = stats[nm]
            stage = DropStage.NONE if nm in kept else DropStage.TOP_K
            scores.append(
                FeatureScore(
                    name=nm,
                    aspect=col.aspect.code,
                    variance=variances[nm],
                    r=r,
                    f=f,
                    rank=ranks[nm],
                    kept=nm in kept,
                    stage_dropped=stage,
                )
            )
        else:
            scores.append(
                FeatureScore(
                    name=nm,
                    aspect=col.aspect.code,
                    variance=variances[nm],
                    r=None,
                    f=0.0,
                    rank=None,
                    kept=False,
                    stage_dropped=DropStage.VARIANCE_GATE,
                )
            )
    report = SelectionReport(
        scores=tuple(scores),
        k_requested=config.k,
        k_effective=k_eff,
        truncated_by_survivors=config.k > len(ranked),
    )
    return matrix.select(list(kept)), report

"""Forecast error metrics: MAE, MAPE, RMSE."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import MetricError


def _check(y, y_hat):
    y = np.asarray(y, dtype=float)
    y_hat = np.asarray(y_hat, dtype=float)
    if y.shape != y_hat.shape or y.ndim != 1 or y.size == 0:
        raise MetricError(f"incompatible metric inputs: {y.shape} vs {y_hat.shape}")
    return y, y_hat


def mae(y, y_hat) -> float:
    """Mean absolute error, in load units."""
    y, y_hat = _check(y, y_hat)
    return float(np.mean(np.abs(y_hat - y)))


def mape(y, y_hat) -> float:
    """Mean absolute percentage error, in percent.

    Zero actuals make the metric undefined; loads are strictly positive,
    so a zero here signals corrupted data rather than a small number.
    """
    y, y_hat = _check(y, y_hat)
    if np.any(y == 0.0):
        raise MetricError("MAPE undefined: actual value of 0 encountered")
    return float(np.mean(np.abs((y_hat - y) / y)) * 100.0)


def rmse(y, y_hat) -> float:
    """Root mean squared error, in load units."""
    y, y_hat = _check(y, y_hat)
    return float(np.sqrt(np.mean((y_hat - y) ** 2)))


@dataclass(frozen=True)
class MetricReport:
    mae: float
    mape: float
    rmse: float
    n: int

    @staticmethod
    def from_predictions(y, y_hat) -> "MetricReport":
        return MetricReport(
            mae=mae(y, y_hat),
            mape=mape(y, y_hat),
            rmse=rmse(y, y_hat),
            n=int(np.asarray(y).size),
        )

    def as_dict(self) -> dict:
        return {"mae": self.mae, "mape": self.mape, "rmse": self.rmse, "n": self.n}

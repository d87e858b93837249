"""Experiment protocols: scenario runs, repeated runs, holdout iterations.

A scenario restricts the candidate set (load lags are always in), runs
the two-stage selector at its k, trains each requested model kind on
the training rows, and reports MAE / MAPE / RMSE on the test rows plus
the wall-clock cost of train + predict. Feature scoring uses training
rows only, so the test year never leaks into selection.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, replace
from datetime import datetime

import numpy as np

from .errors import ValidationError
from .features import FeatureCatalog, build_candidate_matrix
from .metrics import MetricReport, mae, mape, rmse  # noqa: F401  (re-export)
from .models import default_config, trainer_for
from .selection import SelectionConfig, select_top_k
from .timeseries import (
    DatasetSplit,
    FeatureAspect,
    FeatureMatrix,
    LoadSeries,
    random_holdout,
    split_by_date,
)

DEFAULT_MODEL_KINDS = ("svr", "gbrt", "mlp")


@dataclass(frozen=True)
class DataBundle:
    """Everything a scenario needs to build its candidate matrix."""

    load: LoadSeries
    catalog: FeatureCatalog
    weather: object | None = None
    tides: object | None = None

    def candidate_matrix(self) -> FeatureMatrix:
        return build_candidate_matrix(
            self.catalog, self.load, self.weather, self.tides
        )


@dataclass(frozen=True)
class ScenarioSpec:
    """A named candidate subset and the number of features to keep.

    ``feature_names`` of None means the full catalog; otherwise only the
    named entries (plus the historical load lags, which every scenario
    candidate set includes) are offered to the selector.
    """

    name: str
    k: int
    feature_names: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.k < 1:
            raise ValidationError(f"scenario {self.name}: k must be >= 1")


@dataclass(frozen=True)
class ModelRun:
    scenario: str
    model: str
    report: MetricReport
    seconds: float
    seed: int
    n_features: int


def _seeded(config, seed: int):
    if hasattr(config, "seed"):
        return replace(config, seed=seed)
    return config


def train_and_score(
    split: DatasetSplit,
    model_kinds=DEFAULT_MODEL_KINDS,
    model_configs: dict | None = None,
    seed: int = 0,
    scenario: str = "",
) -> list[ModelRun]:
    """Train each kind on the split's training rows and score the test rows."""
    runs = []
    X_train = split.train.data()
    y_train = split.train.target.values
    X_test = split.test.data()
    y_test = split.test.target.values
    names = split.train.names
    for kind in model_kinds:
        cfg = (model_configs or {}).get(kind) or default_config(kind)
        cfg = _seeded(cfg, seed)
        t0 = time.perf_counter()
        model = trainer_for(kind)(X_train, y_train, cfg, feature_names=names)
        predictions = model.predict(X_test)
        seconds = time.perf_counter() - t0
        runs.append(
            ModelRun(
                scenario=scenario,
                model=kind,
                report=MetricReport.from_predictions(y_test, predictions),
                seconds=seconds,
                seed=seed,
                n_features=len(names),
            )
        )
    return runs


def restrict_candidates(matrix: FeatureMatrix, spec: ScenarioSpec) -> FeatureMatrix:
    if spec.feature_names is None:
        return matrix
    lag_names = [
        c.name for c in matrix.columns if c.aspect is FeatureAspect.HISTORICAL_LOAD
    ]
    return matrix.select(list(spec.feature_names) + lag_names)


def make_split(matrix: FeatureMatrix, split_rule) -> DatasetSplit:
    """Accepts a date cutoff, a ('holdout', fraction, seed) tuple, or a
    ready-made DatasetSplit."""
    if isinstance(split_rule, DatasetSplit):
        return split_rule
    if isinstance(split_rule, datetime):
        return split_by_date(matrix, split_rule)
    if isinstance(split_rule, tuple) and len(split_rule) == 3 and split_rule[0] == "holdout":
        return random_holdout(matrix, float(split_rule[1]), int(split_rule[2]))
    raise ValidationError(f"unsupported split rule {split_rule!r}")


def run_scenario(
    spec: ScenarioSpec,
    data: DataBundle,
    model_kinds=DEFAULT_MODEL_KINDS,
    split_rule=None,
    selection: SelectionConfig | None = None,
    model_configs: dict | None = None,
    seed: int = 0,
) -> list[ModelRun]:
    """One end-to-end scenario run: build, select, train, score."""
    matrix = restrict_candidates(data.candidate_matrix(), spec)
    split = make_split(matrix, split_rule)
    base = selection or SelectionConfig()
    sel_cfg = SelectionConfig(
        variance_threshold=base.variance_threshold, k=spec.k, scaling=base.scaling
    )
    train_selected, report = select_top_k(split.train, sel_cfg)
    kept = report.kept_names()
    split = DatasetSplit(
        train=train_selected,
        test=split.test.select(kept),
        rule=split.rule,
        fraction=split.fraction,
        seed=split.seed,
    )
    return train_and_score(
        split, model_kinds, model_configs, seed=seed, scenario=spec.name
    )


def summarize(runs: list[ModelRun]) -> list[dict]:
    """Aggregate per (scenario, model): mean/std of each metric and timing."""
    keys = sorted({(r.scenario, r.model) for r in runs})
    out = []
    for scenario, model in keys:
        group = [r for r in runs if r.scenario == scenario and r.model == model]
        metrics = {}
        for name in ("mae", "mape", "rmse"):
            vals = np.array([getattr(r.report, name) for r in group])
            metrics[name] = {"mean": float(vals.mean()), "std": float(vals.std())}
        secs = np.array([r.seconds for r in group])
        out.append(
            {
                "scenario": scenario,
                "model": model,
                "metrics": metrics,
                "seconds_mean": float(secs.mean()),
                "runs": len(group),
                "seeds": [r.seed for r in group],
            }
        )
    return out


def repeated_runs(experiment, runs: int = 30) -> dict:
    """Run ``experiment(seed)`` for seeds 1..runs and aggregate.

    The experiment returns a flat dict of numeric results; the output
    maps each key to its mean and standard deviation across runs.
    """
    if runs < 1:
        raise ValidationError("runs must be >= 1")
    collected: dict[str, list[float]] = {}
    for seed in range(1, runs + 1):
        result = experiment(seed)
        for key, value in result.items():
            collected.setdefault(key, []).append(float(value))
    return {
        key: {"mean": float(np.mean(vals)), "std": float(np.std(vals))}
        for key, vals in collected.items()
    }


def holdout_iterations(
    matrix: FeatureMatrix,
    experiment,
    fraction: float = 0.2,
    iterations: int = 30,
) -> dict:
    """Seeded random holdouts (seeds 1..iterations) aggregated like
    :func:`repeated_runs`. ``experiment(split)`` returns a metrics dict."""
    if iterations < 1:
        raise ValidationError("iterations must be >= 1")
    collected: dict[str, list[float]] = {}
    for seed in range(1, iterations + 1):
        split = random_holdout(matrix, fraction, seed)
        for key, value in experiment(split).items():
            collected.setdefault(key, []).append(float(value))
    return {
        key: {"mean": float(np.mean(vals)), "std": float(np.std(vals))}
        for key, vals in collected.items()
    }

"""Core data model: load series, aspect-tagged feature columns, splits.

All types are immutable after construction and validated eagerly, so the
statistical code downstream never has to re-check for NaN, misaligned
lengths, or unsorted timestamps. Undefined values (the leading rows of a
lagged column, for example) are represented as NaN and exist only until
:func:`align_and_join` trims them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum

import numpy as np

from .errors import AlignmentError, SplitError, ValidationError


class Frequency(Enum):
    DAILY_PEAK = 86400
    HALF_HOURLY = 1800

    @property
    def step_seconds(self) -> int:
        return self.value


class FeatureAspect(Enum):
    """The four groups of the candidate feature set."""

    GEOGRAPHICAL = "G"
    ASTRONOMICAL = "A"
    SOCIAL = "S"
    HISTORICAL_LOAD = "L"

    @property
    def code(self) -> str:
        return self.value


#: Canonical column ordering of the candidate matrix: G, A, S, then load lags.
ASPECT_ORDER = (
    FeatureAspect.GEOGRAPHICAL,
    FeatureAspect.ASTRONOMICAL,
    FeatureAspect.SOCIAL,
    FeatureAspect.HISTORICAL_LOAD,
)


def _require_aware(ts: datetime, what: str) -> None:
    if ts.tzinfo is None or ts.utcoffset() is None:
        raise ValidationError(f"{what} must carry an explicit UTC offset: {ts!r}")


@dataclass(frozen=True)
class LoadSeries:
    """Target load values on a strictly increasing, evenly spaced time grid."""

    timestamps: tuple[datetime, ...]
    values: np.ndarray
    frequency: Frequency

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "timestamps", tuple(self.timestamps))
        if len(self.timestamps) != values.shape[0]:
            raise ValidationError(
                f"load series has {len(self.timestamps)} timestamps "
                f"but {values.shape[0]} values"
            )
        if values.size == 0:
            raise ValidationError("load series is empty")
        if not np.all(np.isfinite(values)):
            raise ValidationError("load values must be finite")
        if np.any(values <= 0):
            raise ValidationError("load values must be strictly positive")
        step = self.frequency.step_seconds
        offset = None
        for ts in self.timestamps:
            _require_aware(ts, "load timestamp")
            if offset is None:
                offset = ts.utcoffset()
            elif ts.utcoffset() != offset:
                raise ValidationError("UTC offset must be fixed within a series")
        for a, b in zip(self.timestamps, self.timestamps[1:]):
            if (b - a).total_seconds() != step:
                raise ValidationError(
                    f"timestamps {a.isoformat()} -> {b.isoformat()} are not "
                    f"spaced {step} s apart as {self.frequency.name} requires"
                )
        values.setflags(write=False)

    def __len__(self) -> int:
        return len(self.values)

    def take(self, indices: np.ndarray) -> "LoadSeries":
        """Contiguity is not required; the caller owns split semantics."""
        ts = tuple(self.timestamps[i] for i in indices)
        return LoadSeries.__new__(LoadSeries)._init_unchecked(
            ts, self.values[indices], self.frequency
        )

    def _init_unchecked(self, timestamps, values, frequency) -> "LoadSeries":
        # internal: splits may break even spacing, which is fine post-validation
        values = np.asarray(values, dtype=float)
        values.setflags(write=False)
        object.__setattr__(self, "timestamps", tuple(timestamps))
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "frequency", frequency)
        return self


@dataclass(frozen=True)
class FeatureColumn:
    """One named candidate feature aligned 1:1 to a target grid.

    NaN marks rows where the feature is undefined (lag/moving-average
    warm-up); such rows are removed by :func:`align_and_join`.
    """

    name: str
    aspect: FeatureAspect
    values: np.ndarray
    units: str = ""

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        values.setflags(write=False)
        object.__setattr__(self, "values", values)
        if not self.name:
            raise ValidationError("feature column needs a non-empty name")
        if values.ndim != 1:
            raise ValidationError(f"column {self.name!r} must be 1-D")
        finite_or_nan = np.isfinite(values) | np.isnan(values)
        if not np.all(finite_or_nan):
            raise ValidationError(f"column {self.name!r} contains +/-inf")

    def __len__(self) -> int:
        return len(self.values)

    def undefined_count(self) -> int:
        return int(np.isnan(self.values).sum())


@dataclass(frozen=True)
class FeatureMatrix:
    """Aligned candidate features plus their target. Rows are NaN-free."""

    columns: tuple[FeatureColumn, ...]
    target: LoadSeries
    n: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "columns", tuple(self.columns))
        if not self.columns:
            raise ValidationError("empty candidate set")
        names = [c.name for c in self.columns]
        if len(set(names)) != len(names):
            dup = sorted({n for n in names if names.count(n) > 1})
            raise ValidationError(f"duplicate feature names: {dup}")
        n = len(self.target)
        for col in self.columns:
            if len(col) != n:
                raise ValidationError(
                    f"column {col.name!r} has {len(col)} rows, target has {n}"
                )
            if np.isnan(col.values).any():
                raise ValidationError(
                    f"column {col.name!r} still has undefined rows; "
                    "align_and_join must trim them first"
                )
        object.__setattr__(self, "n", n)

    @property
    def names(self) -> list[str]:
        return [c.name for c in self.columns]

    @property
    def aspects(self) -> list[FeatureAspect]:
        return [c.aspect for c in self.columns]

    def data(self) -> np.ndarray:
        """Dense (n, p) design matrix in column order."""
        return np.column_stack([c.values for c in self.columns])

    def column(self, name: str) -> FeatureColumn:
        for c in self.columns:
            if c.name == name:
                return c
        raise ValidationError(f"no feature named {name!r}")

    def column_index(self, name: str) -> int:
        for i, c in enumerate(self.columns):
            if c.name == name:
                return i
        raise ValidationError(f"no feature named {name!r}")

    def select(self, names: list[str]) -> "FeatureMatrix":
        """Keep the named columns, preserving this matrix's column order."""
        wanted = set(names)
        missing = wanted - set(self.names)
        if missing:
            raise ValidationError(f"unknown features: {sorted(missing)}")
        cols = tuple(c for c in self.columns if c.name in wanted)
        return FeatureMatrix(cols, self.target)

    def take(self, indices: np.ndarray) -> "FeatureMatrix":
        indices = np.asarray(indices, dtype=int)
        cols = tuple(
            FeatureColumn(c.name, c.aspect, c.values[indices], c.units)
            for c in self.columns
        )
        return FeatureMatrix(cols, self.target.take(indices))


class SplitRule(Enum):
    BY_DATE_CUTOFF = "by_date_cutoff"
    RANDOM_HOLDOUT = "random_holdout"


@dataclass(frozen=True)
class DatasetSplit:
    train: FeatureMatrix
    test: FeatureMatrix
    rule: SplitRule
    fraction: float | None = None
    seed: int | None = None


def align_and_join(
    target: LoadSeries,
    columns: list[FeatureColumn],
    min_rows: int = 2,
) -> FeatureMatrix:
    """Join candidate columns onto the target, dropping undefined rows.

    Every column must already be on the target grid (same length); rows
    where any column is NaN are removed from target and columns alike.
    Column order is preserved.
    """
    if not columns:
        raise AlignmentError("empty candidate set")
    n = len(target)
    for col in columns:
        if len(col) != n:
            raise AlignmentError(
                f"column {col.name!r} has {len(col)} rows but target has {n}"
            )
    defined = np.ones(n, dtype=bool)
    for col in columns:
        defined &= ~np.isnan(col.values)
    kept = int(defined.sum())
    if kept < min_rows:
        worst = max(columns, key=lambda c: c.undefined_count())
        raise AlignmentError(
            f"only {kept} aligned rows remain (minimum {min_rows}); "
            f"column {worst.name!r} leaves the shortest overlap"
        )
    idx = np.flatnonzero(defined)
    trimmed = tuple(
        FeatureColumn(c.name, c.aspect, c.values[idx], c.units) for c in columns
    )
    return FeatureMatrix(trimmed, target.take(idx))


def split_by_date(matrix: FeatureMatrix, cutoff: datetime) -> DatasetSplit:
    """Rows strictly before ``cutoff`` train; the rest test."""
    _require_aware(cutoff, "cutoff")
    stamps = matrix.target.timestamps
    train_idx = np.array([i for i, t in enumerate(stamps) if t < cutoff], dtype=int)
    test_idx = np.array([i for i, t in enumerate(stamps) if t >= cutoff], dtype=int)
    if train_idx.size == 0:
        raise SplitError(f"cutoff {cutoff.isoformat()} leaves an empty training set")
    if test_idx.size == 0:
        raise SplitError(f"cutoff {cutoff.isoformat()} leaves an empty test set")
    return DatasetSplit(
        train=matrix.take(train_idx),
        test=matrix.take(test_idx),
        rule=SplitRule.BY_DATE_CUTOFF,
    )


def random_holdout(matrix: FeatureMatrix, fraction: float, seed: int) -> DatasetSplit:
    """Seeded random holdout: floor(fraction * n) rows go to test.

    The same seed always yields the same split; row order is preserved
    within each part.
    """
    if not 0.0 < fraction < 1.0:
        raise ValidationError(f"holdout fraction must lie in (0, 1), got {fraction}")
    n = matrix.n
    n_test = int(np.floor(fraction * n))
    if n_test < 1:
        raise ValidationError(
            f"fraction {fraction} of {n} rows selects no test rows"
        )
    rng = np.random.default_rng(seed)
    perm = rng.permutation(n)
    test_idx = np.sort(perm[:n_test])
    train_idx = np.sort(perm[n_test:])
    return DatasetSplit(
        train=matrix.take(train_idx),
        test=matrix.take(test_idx),
        rule=SplitRule.RANDOM_HOLDOUT,
        fraction=fraction,
        seed=seed,
    )

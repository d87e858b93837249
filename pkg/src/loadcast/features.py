"""Candidate-matrix assembly from a declarative feature catalog.

A catalog lists every candidate feature as a small spec: a raw data
column, a computed astronomical quantity, a calendar indicator, or a
lag / moving average of another entry. :func:`build_candidate_matrix`
resolves the entries against ingested data and joins them onto the
load grid in the canonical G, A, S, L column order, with historical
load lags appended last.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from datetime import date as Date
from datetime import datetime

import numpy as np

from .astro import (
    GeoLocation,
    daily_astro_record,
    haurwitz_ghi,
    moon_phase,
    solar_position,
    sunshine_duration,
)
from .errors import ValidationError
from .timeseries import (
    ASPECT_ORDER,
    FeatureAspect,
    FeatureColumn,
    FeatureMatrix,
    Frequency,
    LoadSeries,
    align_and_join,
)

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

SOURCE_KINDS = ("raw", "astro", "calendar", "lag", "moving_average")
ASTRO_KINDS = ("sza", "ckghi", "ctd", "daylight", "moon_phase", "sunshine")
CALENDAR_KINDS = (
    "monday", "tuesday", "wednesday", "thursday", "friday", "saturday",
    "sunday", "holiday", "day_of_year",
)
_WEEKDAY_NAMES = CALENDAR_KINDS[:7]
RAW_AGGREGATIONS = ("mean", "max", "min")


@dataclass(frozen=True)
class FeatureSpec:
    """One catalog entry. Which optional fields apply depends on ``source``."""

    name: str
    aspect: FeatureAspect
    source: str
    column: str | None = None   # raw: ingested column name
    kind: str | None = None     # astro / calendar kind
    base: str | None = None     # lag / moving_average: another entry's name
    steps: int | None = None    # lag
    window: int | None = None   # moving_average
    agg: str = "mean"           # raw sub-daily -> daily aggregation
    units: str = ""

    def __post_init__(self):
        if self.source not in SOURCE_KINDS:
            raise ValidationError(f"{self.name}: unknown source {self.source!r}")
        if self.source == "raw" and not self.column:
            raise ValidationError(f"{self.name}: raw feature needs a column")
        if self.source == "raw" and self.agg not in RAW_AGGREGATIONS:
            raise ValidationError(f"{self.name}: unknown aggregation {self.agg!r}")
        if self.source == "astro" and self.kind not in ASTRO_KINDS:
            raise ValidationError(f"{self.name}: unknown astro kind {self.kind!r}")
        if self.source == "astro" and self.kind == "sunshine" and not self.column:
            raise ValidationError(
                f"{self.name}: sunshine needs the observed-GHI column name"
            )
        if self.source == "calendar" and self.kind not in CALENDAR_KINDS:
            raise ValidationError(f"{self.name}: unknown calendar kind {self.kind!r}")
        if self.source == "lag" and (self.base is None or not self.steps or self.steps < 1):
            raise ValidationError(f"{self.name}: lag needs base and steps >= 1")
        if self.source == "moving_average" and (
            self.base is None or not self.window or self.window < 2
        ):
            raise ValidationError(f"{self.name}: moving average needs base and window >= 2")


@dataclass(frozen=True)
class FeatureCatalog:
    entries: tuple[FeatureSpec, ...]
    location: GeoLocation
    holiday_calendar: frozenset[Date] = frozenset()
    load_lag_depth: int = 7
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        object.__setattr__(self, "holiday_calendar", frozenset(self.holiday_calendar))
        names = [e.name for e in self.entries]
        if len(set(names)) != len(names):
            dup = sorted({n for n in names if names.count(n) > 1})
            raise ValidationError(f"duplicate catalog entries: {dup}")
        if self.load_lag_depth < 0:
            raise ValidationError("load_lag_depth must be >= 0")

    def aspect_counts(self) -> dict[str, int]:
        counts = {a.code: 0 for a in ASPECT_ORDER}
        for e in self.entries:
            counts[e.aspect.code] += 1
        counts["L"] += self.load_lag_depth
        return counts

    @staticmethod
    def from_toml(path, holiday_calendar: frozenset[Date] = frozenset()) -> "FeatureCatalog":
        with open(path, "rb") as fh:
            doc = tomllib.load(fh)
        try:
            loc = doc["location"]
            location = GeoLocation(
                latitude=float(loc["latitude"]),
                longitude=float(loc["longitude"]),
                elevation=float(loc.get("elevation", 0.0)),
                utc_offset=float(loc.get("utc_offset", 0.0)),
            )
            entries = []
            for raw in doc.get("features", []):
                entries.append(
                    FeatureSpec(
                        name=raw["name"],
                        aspect=FeatureAspect(raw["aspect"]),
                        source=raw["source"],
                        column=raw.get("column"),
                        kind=raw.get("kind"),
                        base=raw.get("base"),
                        steps=raw.get("steps"),
                        window=raw.get("window"),
                        agg=raw.get("agg", "mean"),
                        units=raw.get("units", ""),
                    )
                )
        except KeyError as exc:
            raise ValidationError(f"catalog {path}: missing key {exc}") from exc
        return FeatureCatalog(
            entries=tuple(entries),
            location=location,
            holiday_calendar=holiday_calendar,
            load_lag_depth=int(doc.get("load_lag_depth", 7)),
            name=str(doc.get("name", "")),
        )


def lag_series(column: FeatureColumn, lag_steps: int) -> FeatureColumn:
    """Shift a column down by ``lag_steps`` rows; the warm-up rows are NaN."""
    if lag_steps < 1:
        raise ValidationError(f"lag_steps must be >= 1, got {lag_steps}")
    n = len(column)
    if lag_steps >= n:
        raise ValidationError(f"lag {lag_steps} >= series length {n}")
    out = np.full(n, np.nan)
    out[lag_steps:] = column.values[:-lag_steps]
    return FeatureColumn(column.name, column.aspect, out, column.units)


def moving_average(column: FeatureColumn, window: int) -> FeatureColumn:
    """Trailing mean over ``window`` rows; the first window-1 rows are NaN."""
    n = len(column)
    if window < 2 or window >= n:
        raise ValidationError(f"window must satisfy 2 <= window < {n}, got {window}")
    sliding = np.lib.stride_tricks.sliding_window_view(column.values, window)
    out = np.full(n, np.nan)
    out[window - 1 :] = sliding.mean(axis=1)
    return FeatureColumn(column.name, column.aspect, out, column.units)


def make_load_lags(load: LoadSeries, depth: int = 7) -> list[FeatureColumn]:
    """Columns load_lag_1 .. load_lag_depth, aspect HistoricalLoad."""
    if depth < 1:
        raise ValidationError(f"lag depth must be >= 1, got {depth}")
    if depth >= len(load):
        raise ValidationError(f"lag depth {depth} >= series length {len(load)}")
    base = FeatureColumn("load", FeatureAspect.HISTORICAL_LOAD, load.values, "MW")
    out = []
    for k in range(1, depth + 1):
        lagged = lag_series(base, k)
        out.append(FeatureColumn(f"load_lag_{k}", lagged.aspect, lagged.values, "MW"))
    return out


def make_calendar_features(
    timestamps: tuple[datetime, ...], holiday_calendar: frozenset[Date] = frozenset()
) -> list[FeatureColumn]:
    """The nine social features: day-of-week one-hots, holiday flag, and
    day-of-year index scaled to [0, 1]. Local calendar throughout."""
    cols = []
    for kind in CALENDAR_KINDS:
        values = _calendar_values(kind, timestamps, holiday_calendar)
        cols.append(FeatureColumn(kind, FeatureAspect.SOCIAL, values))
    return cols


def _calendar_values(kind, timestamps, holiday_calendar) -> np.ndarray:
    if kind in _WEEKDAY_NAMES:
        dow = _WEEKDAY_NAMES.index(kind)
        return np.array([1.0 if t.weekday() == dow else 0.0 for t in timestamps])
    if kind == "holiday":
        return np.array(
            [1.0 if t.date() in holiday_calendar else 0.0 for t in timestamps]
        )
    if kind == "day_of_year":
        return np.array([(t.timetuple().tm_yday - 1) / 365.0 for t in timestamps])
    raise ValidationError(f"unknown calendar kind {kind!r}")


class _Resolver:
    """Resolves catalog entries to value arrays on the load grid."""

    def __init__(self, catalog, load, weather, tides):
        self.catalog = catalog
        self.load = load
        self.weather = weather
        self.tides = tides
        self.by_name = {e.name: e for e in catalog.entries}
        self.cache: dict[str, np.ndarray] = {}
        self.in_progress: set[str] = set()
        self.daily = load.frequency is Frequency.DAILY_PEAK
        self.dates = [t.date() for t in load.timestamps]
        self._astro_cache: dict[Date, object] = {}

    def resolve(self, name: str) -> np.ndarray:
        if name in self.cache:
            return self.cache[name]
        if name in self.in_progress:
            raise ValidationError(f"feature {name!r} depends on itself")
        entry = self.by_name.get(name)
        if entry is None:
            raise ValidationError(f"feature spec {name!r} not found in catalog")
        self.in_progress.add(name)
        try:
            values = self._compute(entry)
        finally:
            self.in_progress.discard(name)
        self.cache[name] = values
        return values

    def _compute(self, e: FeatureSpec) -> np.ndarray:
        if e.source == "raw":
            return self._raw(e)
        if e.source == "astro":
            return self._astro(e)
        if e.source == "calendar":
            return _calendar_values(e.kind, self.load.timestamps, self.catalog.holiday_calendar)
        if e.source == "lag":
            base = FeatureColumn(e.base, e.aspect, self.resolve(e.base))
            return lag_series(base, e.steps).values
        if e.source == "moving_average":
            base = FeatureColumn(e.base, e.aspect, self.resolve(e.base))
            return moving_average(base, e.window).values
        raise ValidationError(f"unresolvable spec {e.name!r}")

    def _record(self, day: Date):
        rec = self._astro_cache.get(day)
        if rec is None:
            rec = daily_astro_record(self.catalog.location, day)
            self._astro_cache[day] = rec
        return rec

    def _astro(self, e: FeatureSpec) -> np.ndarray:
        loc = self.catalog.location
        kind = e.kind
        if kind == "sunshine":
            return self._sunshine(e)
        if not self.daily and kind in ("sza", "ckghi"):
            # half-hourly targets get instantaneous values
            zen = np.array(
                [solar_position(loc, t).zenith for t in self.load.timestamps]
            )
            return zen if kind == "sza" else np.asarray(haurwitz_ghi(zen))
        field_name = {
            "sza": "mean_daytime_sza",
            "ckghi": "clear_sky_ghi_daily",
            "ctd": "civil_twilight_duration",
            "daylight": "daylight_duration",
            "moon_phase": "moon_phase",
        }[kind]
        return np.array([getattr(self._record(d), field_name) for d in self.dates])

    def _sunshine(self, e: FeatureSpec) -> np.ndarray:
        w = self.weather
        if w is None or e.column not in w.columns:
            raise ValidationError(
                f"feature spec {e.name!r}: observed-GHI column {e.column!r} "
                "is not present in the ingested weather data"
            )
        if w.step_seconds >= 86400:
            raise ValidationError(
                f"feature spec {e.name!r}: sunshine needs sub-daily observed GHI"
            )
        loc = self.catalog.location
        step_min = w.step_seconds / 60.0
        obs = w.columns[e.column]
        zen = np.array([solar_position(loc, t).zenith for t in w.timestamps])
        cs = np.asarray(haurwitz_ghi(zen))
        by_day: dict[Date, list[int]] = {}
        for i, t in enumerate(w.timestamps):
            by_day.setdefault(t.astimezone(loc.tzinfo).date(), []).append(i)
        out = np.full(len(self.load), np.nan)
        for row, day in enumerate(self.dates):
            idx = by_day.get(day)
            if idx:
                out[row] = sunshine_duration(obs[idx], cs[idx], step_min)
        return out

    def _raw(self, e: FeatureSpec) -> np.ndarray:
        if self.weather is not None and e.column in self.weather.columns:
            return self._raw_from_weather(e)
        if self.tides is not None and e.column in self.tides.columns:
            lookup = dict(zip(self.tides.dates, self.tides.columns[e.column]))
            return np.array([lookup.get(d, np.nan) for d in self.dates])
        raise ValidationError(
            f"feature spec {e.name!r}: raw column {e.column!r} not found in "
            "the ingested data"
        )

    def _raw_from_weather(self, e: FeatureSpec) -> np.ndarray:
        w = self.weather
        values = w.columns[e.column]
        load_step = self.load.frequency.step_seconds
        if w.step_seconds == load_step and not self.daily:
            lookup = {t: v for t, v in zip(w.timestamps, values)}
            return np.array(
                [lookup.get(t, np.nan) for t in self.load.timestamps]
            )
        # group the weather rows by local calendar date
        by_day: dict[Date, list[float]] = {}
        tz = self.catalog.location.tzinfo
        for t, v in zip(w.timestamps, values):
            by_day.setdefault(t.astimezone(tz).date(), []).append(v)
        agg = {"mean": np.mean, "max": np.max, "min": np.min}[e.agg]
        daily = {d: float(agg(v)) for d, v in by_day.items()}
        return np.array([daily.get(d, np.nan) for d in self.dates])


def build_candidate_matrix(
    catalog: FeatureCatalog,
    load: LoadSeries,
    weather=None,
    tides=None,
    min_rows: int = 2,
) -> FeatureMatrix:
    """Resolve every catalog entry and join onto the load grid.

    Output column order is geographic, astronomical, social (catalog
    order within each aspect), then the historical load lags.
    """
    resolver = _Resolver(catalog, load, weather, tides)
    columns: list[FeatureColumn] = []
    for aspect in ASPECT_ORDER[:3]:
        for e in catalog.entries:
            if e.aspect is aspect:
                columns.append(FeatureColumn(e.name, e.aspect, resolver.resolve(e.name), e.units))
    for e in catalog.entries:
        if e.aspect is FeatureAspect.HISTORICAL_LOAD:
            columns.append(FeatureColumn(e.name, e.aspect, resolver.resolve(e.name), e.units))
    if catalog.load_lag_depth >= 1:
        columns.extend(make_load_lags(load, catalog.load_lag_depth))
    return align_and_join(load, columns, min_rows=min_rows)

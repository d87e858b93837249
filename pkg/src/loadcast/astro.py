"""Astronomical candidate features: solar geometry, clear-sky irradiance,
twilight durations, and moon phase.

The solar position uses the NOAA fractional-year formulation (a Fourier
series in day-of-year for declination and the equation of time). It is a
low-order ephemeris, good to well under half a degree of zenith over
1950-2050, which is plenty for features that feed a regressor rather
than a telescope. Zenith is geometric (no refraction), and the civil
twilight thresholds below are likewise geometric, matching the almanac
convention for twilight.

Clear-sky global horizontal irradiance follows Haurwitz:

    GHI = 1098 * cos(z) * exp(-0.057 / cos(z))   [W/m^2, z < 90 deg]

a zero-parameter closed form that only needs the zenith angle.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import date as Date
from datetime import datetime, timedelta, timezone

import numpy as np

from .errors import ValidationError

_DEG = np.pi / 180.0

#: Mean Gregorian year; the fractional year is phased from noon J2000 so the
#: leap-cycle wobble of calendar day-of-year cancels out.
_YEAR_DAYS = 365.2425
_J2000 = datetime(2000, 1, 1, 12, 0, tzinfo=timezone.utc)

#: Mean synodic month in days, anchored at the 2000-01-06 18:14 UTC new moon.
SYNODIC_MONTH_DAYS = 29.530588
NEW_MOON_EPOCH = datetime(2000, 1, 6, 18, 14, tzinfo=timezone.utc)

CIVIL_TWILIGHT_ALTITUDE_DEG = -6.0


@dataclass(frozen=True)
class GeoLocation:
    """Site parameters for all solar computations."""

    latitude: float
    longitude: float
    elevation: float = 0.0
    utc_offset: float = 0.0

    def __post_init__(self):
        if not -90.0 <= self.latitude <= 90.0:
            raise ValidationError(f"latitude {self.latitude} outside [-90, 90]")
        if not -180.0 <= self.longitude <= 180.0:
            raise ValidationError(f"longitude {self.longitude} outside [-180, 180]")
        if not -14.0 <= self.utc_offset <= 14.0:
            raise ValidationError(f"utc_offset {self.utc_offset} h is not a real offset")

    @property
    def tzinfo(self) -> timezone:
        return timezone(timedelta(hours=self.utc_offset))


@dataclass(frozen=True)
class SolarPosition:
    zenith: float
    azimuth: float

    @property
    def altitude(self) -> float:
        return 90.0 - self.zenith


def _fractional_year(days_since_j2000: np.ndarray) -> np.ndarray:
    return 2.0 * np.pi / _YEAR_DAYS * (np.asarray(days_since_j2000, float) % _YEAR_DAYS)

def _declination_rad(g: np.ndarray) -> np.ndarray:
    return (
        0.006918
        - 0.399912 * np.cos(g)
        + 0.070257 * np.sin(g)
        - 0.006758 * np.cos(2 * g)
        + 0.000907 * np.sin(2 * g)
        - 0.002697 * np.cos(3 * g)
        + 0.00148 * np.sin(3 * g)
    )

def _equation_of_time_min(g: np.ndarray) -> np.ndarray:
    return 229.18 * (
        0.000075
        + 0.001868 * np.cos(g)
        - 0.032077 * np.sin(g)
        - 0.014615 * np.cos(2 * g)
        - 0.040849 * np.sin(2 * g)
    )


def _zenith_azimuth_deg(lat, lon, days_since_j2000):
    """Vectorized geometric zenith/azimuth, all angles in degrees.

    ``days_since_j2000`` is UTC time expressed as days since noon
    2000-01-01 UTC; broadcasting applies.
    """
    d = np.asarray(days_since_j2000, float)
    g = _fractional_year(d)
    decl = _declination_rad(g)
    eqtime = _equation_of_time_min(g)
    minute_utc = ((d + 0.5) % 1.0) * 1440.0
    true_solar_min = minute_utc + eqtime + 4.0 * lon
    ha = (true_solar_min / 4.0 - 180.0) * _DEG
    lat_r = lat * _DEG
    cos_zen = np.sin(lat_r) * np.sin(decl) + np.cos(lat_r) * np.cos(decl) * np.cos(ha)
    zen = np.degrees(np.arccos(np.clip(cos_zen, -1.0, 1.0)))
    # azimuth from north, clockwise; atan2 form is pole-safe
    az_south = np.arctan2(
        np.sin(ha), np.cos(ha) * np.sin(lat_r) - np.tan(decl) * np.cos(lat_r)
    )
    az = (np.degrees(az_south) + 180.0) % 360.0
    return zen, az


def _days_since_j2000(t: datetime) -> float:
    if t.tzinfo is None or t.utcoffset() is None:
        raise ValidationError(f"timestamp must carry an explicit UTC offset: {t!r}")
    return (t - _J2000).total_seconds() / 86400.0


def solar_position(loc: GeoLocation, t: datetime) -> SolarPosition:
    """Sun zenith and azimuth at ``t`` as seen from ``loc``."""
    zen, az = _zenith_azimuth_deg(loc.latitude, loc.longitude, _days_since_j2000(t))
    return SolarPosition(zenith=float(zen), azimuth=float(az))


def _day_zenith_profile(loc: GeoLocation, day: Date, step_min: float = 1.0):
    """Zenith at each grid point of the local calendar day (inclusive ends)."""
    local_midnight = datetime(day.year, day.month, day.day, tzinfo=loc.tzinfo)
    d0 = _days_since_j2000(local_midnight)
    grid = np.arange(0.0, 1440.0 + step_min, step_min)
    zen, _ = _zenith_azimuth_deg(loc.latitude, loc.longitude, d0 + grid / 1440.0)
    return grid, zen


def _span_above(grid: np.ndarray, altitude: np.ndarray, threshold: float) -> float:
    """Minutes between the first upward and last downward crossing of
    ``threshold``, with linear interpolation; clamps to 0 or the full day."""
    above = altitude >= threshold
    if not above.any():
        return 0.0
    if above.all():
        return float(grid[-1] - grid[0])
    idx = np.flatnonzero(above)
    i0, i1 = idx[0], idx[-1]
    if i0 == 0:
        start = grid[0]
    else:
        a0, a1 = altitude[i0 - 1], altitude[i0]
        start = grid[i0 - 1] + (threshold - a0) / (a1 - a0) * (grid[i0] - grid[i0 - 1])
    if i1 == len(grid) - 1:
        end = grid[-1]
    else:
        a0, a1 = altitude[i1], altitude[i1 + 1]
        end = grid[i1] + (a0 - threshold) / (a0 - a1) * (grid[i1 + 1] - grid[i1])
    return float(end - start)


def civil_twilight_duration(loc: GeoLocation, day: Date) -> float:
    """Minutes from civil dawn (altitude crosses -6 deg upward) to civil
    dusk. Polar night returns 0, polar day 1440."""
    grid, zen = _day_zenith_profile(loc, day)
    return _span_above(grid, 90.0 - zen, CIVIL_TWILIGHT_ALTITUDE_DEG)


def daylight_duration(loc: GeoLocation, day: Date) -> float:
    """Minutes the sun's center spends at or above the geometric horizon."""
    grid, zen = _day_zenith_profile(loc, day)
    return _span_above(grid, 90.0 - zen, 0.0)


def haurwitz_ghi(zenith_deg) -> np.ndarray | float:
    """Haurwitz clear-sky GHI in W/m^2 for a zenith angle in degrees."""
    zen = np.asarray(zenith_deg, dtype=float)
    cos_z = np.cos(zen * _DEG)
    with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
        ghi = np.where(zen < 90.0, 1098.0 * cos_z * np.exp(-0.057 / np.maximum(cos_z, 1e-12)), 0.0)
    if np.ndim(zenith_deg) == 0:
        return float(ghi)
    return ghi


def clear_sky_ghi(loc: GeoLocation, t: datetime) -> float:
    """Instantaneous clear-sky GHI at ``t``; 0 whenever the sun is down."""
    return float(haurwitz_ghi(solar_position(loc, t).zenith))


def clear_sky_ghi_daily(loc: GeoLocation, day: Date) -> float:
    """Daily clear-sky insolation in Wh/m^2 (trapezoid on a 1-minute grid)."""
    grid, zen = _day_zenith_profile(loc, day)
    ghi = haurwitz_ghi(zen)
    return float(np.trapezoid(ghi, grid) / 60.0)


def mean_daytime_sza(loc: GeoLocation, day: Date) -> float:
    """Mean solar zenith angle over the minutes the sun is up.

    In polar night there are no daytime minutes; the day's minimum zenith
    (> 90) is returned instead so the series stays total and continuous.
    """
    _, zen = _day_zenith_profile(loc, day)
    up = zen < 90.0
    if not up.any():
        return float(zen.min())
    return float(zen[up].mean())


def sunshine_duration(
    observed_ghi: np.ndarray,
    clear_sky_ghi_profile: np.ndarray,
    step_minutes: float,
    threshold_ratio: float = 0.4,
) -> float:
    """Minutes where observed GHI exceeds ``threshold_ratio`` x clear-sky.

    Both profiles must sit on the same sub-daily grid with spacing
    ``step_minutes``. The 0.4 default mimics the WMO bright-sunshine
    convention via a clear-sky ratio.
    """
    obs = np.asarray(observed_ghi, dtype=float)
    cs = np.asarray(clear_sky_ghi_profile, dtype=float)
    if obs.shape != cs.shape:
        raise ValidationError(
            f"profiles differ in shape: {obs.shape} vs {cs.shape}"
        )
    if np.isnan(obs).any():
        raise ValidationError("observed GHI profile has missing values")
    sunny = (cs > 0.0) & (obs > threshold_ratio * cs)
    return float(sunny.sum() * step_minutes)


def moon_phase(t: datetime) -> float:
    """Phase in [0, 1): 0 new moon, 0.5 full, from synodic recurrence."""
    if t.tzinfo is None or t.utcoffset() is None:
        raise ValidationError(f"timestamp must carry an explicit UTC offset: {t!r}")
    days = (t - NEW_MOON_EPOCH).total_seconds() / 86400.0
    return float(days / SYNODIC_MONTH_DAYS % 1.0)


@dataclass(frozen=True)
class DailyAstroRecord:
    """One local calendar day's worth of astronomical features."""

    date: Date
    mean_daytime_sza: float
    civil_twilight_duration: float
    daylight_duration: float
    clear_sky_ghi_daily: float
    moon_phase: float


def daily_astro_record(loc: GeoLocation, day: Date) -> DailyAstroRecord:
    grid, zen = _day_zenith_profile(loc, day)
    alt = 90.0 - zen
    ctd = _span_above(grid, alt, CIVIL_TWILIGHT_ALTITUDE_DEG)
    dl = _span_above(grid, alt, 0.0)
    ghi = haurwitz_ghi(zen)
    up = zen < 90.0
    sza = float(zen[up].mean()) if up.any() else float(zen.min())
    noon = datetime(day.year, day.month, day.day, 12, tzinfo=loc.tzinfo)
    return DailyAstroRecord(
        date=day,
        mean_daytime_sza=sza,
        civil_twilight_duration=ctd,
        daylight_duration=dl,
        clear_sky_ghi_daily=float(np.trapezoid(ghi, grid) / 60.0),
        moon_phase=moon_phase(noon),
    )

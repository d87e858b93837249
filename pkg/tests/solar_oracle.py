"""Independent solar ephemeris used only by the test suite.

This is the Meeus low-accuracy algorithm as used by the NOAA solar
calculator: Julian-century polynomials for the sun's geometric mean
longitude, anomaly, and obliquity, with the apparent-longitude nutation
term. It shares no code or formulation with the package's
fractional-year ephemeris, so agreement between the two is evidence,
not tautology. Zenith is geometric (no refraction), matching the
package's convention.
"""

from __future__ import annotations

import math
from datetime import date as Date
from datetime import datetime, timedelta, timezone

_J2000 = datetime(2000, 1, 1, 12, 0, tzinfo=timezone.utc)


def julian_day(t: datetime) -> float:
    return (t.astimezone(timezone.utc) - _J2000).total_seconds() / 86400.0 + 2451545.0


def sun_declination_and_eqtime(t: datetime) -> tuple[float, float]:
    """Apparent declination (degrees) and equation of time (minutes)."""
    jc = (julian_day(t) - 2451545.0) / 36525.0
    l0 = (280.46646 + jc * (36000.76983 + jc * 0.0003032)) % 360.0
    m = 357.52911 + jc * (35999.05029 - 0.0001537 * jc)
    e = 0.016708634 - jc * (0.000042037 + 0.0000001267 * jc)
    m_r = math.radians(m)
    eq_ctr = (
        math.sin(m_r) * (1.914602 - jc * (0.004817 + 0.000014 * jc))
        + math.sin(2 * m_r) * (0.019993 - 0.000101 * jc)
        + math.sin(3 * m_r) * 0.000289
    )
    true_long = l0 + eq_ctr
    omega = math.radians(125.04 - 1934.136 * jc)
    app_long = true_long - 0.00569 - 0.00478 * math.sin(omega)
    mean_obliq = 23.0 + (26.0 + (21.448 - jc * (46.815 + jc * (0.00059 - jc * 0.001813))) / 60.0) / 60.0
    obliq = mean_obliq + 0.00256 * math.cos(omega)
    obliq_r = math.radians(obliq)
    app_long_r = math.radians(app_long)
    decl = math.degrees(math.asin(math.sin(obliq_r) * math.sin(app_long_r)))
    var_y = math.tan(obliq_r / 2.0) ** 2
    l0_r = math.radians(l0)
    eqtime = 4.0 * math.degrees(
        var_y * math.sin(2 * l0_r)
        - 2 * e * math.sin(m_r)
        + 4 * e * var_y * math.sin(m_r) * math.cos(2 * l0_r)
        - 0.5 * var_y * var_y * math.sin(4 * l0_r)
        - 1.25 * e * e * math.sin(2 * m_r)
    )
    return decl, eqtime


def zenith_deg(latitude: float, longitude: float, t: datetime) -> float:
    """Geometric solar zenith angle in degrees."""
    decl, eqtime = sun_declination_and_eqtime(t)
    u = t.astimezone(timezone.utc)
    minutes = u.hour * 60.0 + u.minute + u.second / 60.0 + u.microsecond / 6e7
    tst = (minutes + eqtime + 4.0 * longitude) % 1440.0
    ha = tst / 4.0 - 180.0
    lat_r = math.radians(latitude)
    decl_r = math.radians(decl)
    ha_r = math.radians(ha)
    cos_zen = math.sin(lat_r) * math.sin(decl_r) + math.cos(lat_r) * math.cos(decl_r) * math.cos(ha_r)
    return math.degrees(math.acos(max(-1.0, min(1.0, cos_zen))))


def altitude_deg(latitude: float, longitude: float, t: datetime) -> float:
    return 90.0 - zenith_deg(latitude, longitude, t)


def civil_twilight_minutes(
    latitude: float, longitude: float, utc_offset: float, day: Date
) -> float:
    """Civil dawn to civil dusk span in minutes via bisection on the
    -6 degree altitude crossings; 0 / 1440 when there is no crossing."""
    tz = timezone(timedelta(hours=utc_offset))
    midnight = datetime(day.year, day.month, day.day, tzinfo=tz)

    def alt(minute: float) -> float:
        return altitude_deg(latitude, longitude, midnight + timedelta(minutes=minute))

    step = 2.0
    grid = [alt(m) for m in _frange(0.0, 1440.0, step)]
    above = [a >= -6.0 for a in grid]
    if not any(above):
        return 0.0
    if all(above):
        return 1440.0
    first = above.index(True)
    last = len(above) - 1 - above[::-1].index(True)
    dawn = 0.0 if first == 0 else _bisect(alt, (first - 1) * step, first * step)
    dusk = 1440.0 if last == len(grid) - 1 else _bisect(alt, last * step, (last + 1) * step)
    return dusk - dawn


def _frange(start: float, stop: float, step: float):
    x = start
    while x <= stop:
        yield x
        x += step


def _bisect(alt, lo: float, hi: float, iters: int = 40) -> float:
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if (alt(lo) + 6.0) * (alt(mid) + 6.0) <= 0.0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)

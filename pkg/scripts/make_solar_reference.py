#!/usr/bin/env python3
"""Regenerate tests/solar_reference.py from the independent test oracle.

Run from the repository root:

    python scripts/make_solar_reference.py

The reference values come from the Meeus-based ephemeris in
tests/solar_oracle.py, which is deliberately independent from the
package's own fractional-year ephemeris.
"""

from __future__ import annotations

import sys
from datetime import date, datetime, timezone
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

import solar_oracle as oracle

# 20 (name, lat, lon, utc instant) zenith probes spread over latitudes,
# seasons, times of day, and the 1950-2050 validity window.
ZENITH_PROBES = [
    ("portland_me_summer_noon", 43.6615, -70.2553, datetime(2015, 6, 21, 17, 0, tzinfo=timezone.utc)),
    ("portland_me_winter_noon", 43.6615, -70.2553, datetime(2015, 12, 21, 17, 0, tzinfo=timezone.utc)),
    ("portland_me_morning", 43.6615, -70.2553, datetime(2014, 9, 10, 12, 30, tzinfo=timezone.utc)),
    ("sydney_summer", -33.8688, 151.2093, datetime(2009, 12, 20, 2, 0, tzinfo=timezone.utc)),
    ("sydney_winter_morning", -33.8688, 151.2093, datetime(2009, 6, 20, 22, 0, tzinfo=timezone.utc)),
    ("austin_equinox", 30.2672, -97.7431, datetime(2017, 3, 20, 18, 15, tzinfo=timezone.utc)),
    ("austin_august_evening", 30.2672, -97.7431, datetime(2005, 8, 15, 23, 45, tzinfo=timezone.utc)),
    ("london_may_morning", 51.5074, -0.1278, datetime(1995, 5, 1, 7, 0, tzinfo=timezone.utc)),
    ("london_autumn_noon", 51.5074, -0.1278, datetime(2030, 10, 10, 12, 0, tzinfo=timezone.utc)),
    ("reykjavik_midsummer", 64.1466, -21.9426, datetime(2020, 6, 21, 13, 30, tzinfo=timezone.utc)),
    ("reykjavik_midwinter", 64.1466, -21.9426, datetime(2020, 12, 21, 13, 30, tzinfo=timezone.utc)),
    ("equator_march_noon", 0.0, 0.0, datetime(1988, 3, 21, 12, 0, tzinfo=timezone.utc)),
    ("equator_june_afternoon", 0.0, 0.0, datetime(2042, 6, 10, 15, 0, tzinfo=timezone.utc)),
    ("tokyo_january", 35.6762, 139.6503, datetime(1999, 1, 5, 3, 0, tzinfo=timezone.utc)),
    ("tokyo_july_evening", 35.6762, 139.6503, datetime(2024, 7, 4, 8, 30, tzinfo=timezone.utc)),
    ("cape_town_october", -33.9249, 18.4241, datetime(1975, 10, 15, 10, 0, tzinfo=timezone.utc)),
    ("fairbanks_spring", 64.8378, -147.7164, datetime(2010, 4, 1, 22, 0, tzinfo=timezone.utc)),
    ("singapore_noon", 1.3521, 103.8198, datetime(2033, 9, 1, 5, 0, tzinfo=timezone.utc)),
    ("buenos_aires_dusk", -34.6037, -58.3816, datetime(1960, 2, 10, 22, 30, tzinfo=timezone.utc)),
    ("anchor_1952_london", 51.5074, -0.1278, datetime(1952, 7, 1, 11, 0, tzinfo=timezone.utc)),
]

# 10 (name, lat, lon, utc_offset, local date) civil-twilight probes.
TWILIGHT_PROBES = [
    ("portland_me_equinox", 43.6615, -70.2553, -5.0, date(2015, 3, 20)),
    ("portland_me_solstice", 43.6615, -70.2553, -5.0, date(2015, 6, 21)),
    ("portland_me_winter", 43.6615, -70.2553, -5.0, date(2014, 12, 21)),
    ("sydney_january", -33.8688, 151.2093, 10.0, date(2009, 1, 15)),
    ("sydney_july", -33.8688, 151.2093, 10.0, date(2009, 7, 15)),
    ("austin_april", 30.2672, -97.7431, -6.0, date(2016, 4, 10)),
    ("equator_equinox", 0.0, 0.0, 0.0, date(2015, 3, 20)),
    ("london_august", 51.5074, -0.1278, 0.0, date(2021, 8, 1)),
    ("tokyo_november", 35.6762, 139.6503, 9.0, date(2003, 11, 20)),
    ("cape_town_december", -33.9249, 18.4241, 2.0, date(2018, 12, 10)),
]


def main() -> None:
    lines = [
        '"""Frozen solar reference values. Generated by',
        'scripts/make_solar_reference.py from the independent Meeus-based',
        'oracle in tests/solar_oracle.py; regenerate rather than edit."""',
        "",
        "from datetime import date, datetime, timezone",
        "",
        "# (name, latitude, longitude, utc instant, zenith degrees)",
        "ZENITH_REFERENCE = [",
    ]
    for name, lat, lon, t in ZENITH_PROBES:
        z = oracle.zenith_deg(lat, lon, t)
        ts = (
            f"datetime({t.year}, {t.month}, {t.day}, {t.hour}, {t.minute}, "
            f"tzinfo=timezone.utc)"
        )
        lines.append(f"    ({name!r}, {lat!r}, {lon!r}, {ts}, {z:.4f}),")
    lines.append("]")
    lines.append("")
    lines.append("# (name, latitude, longitude, utc_offset_hours, local date, minutes)")
    lines.append("CIVIL_TWILIGHT_REFERENCE = [")
    for name, lat, lon, tz, d in TWILIGHT_PROBES:
        m = oracle.civil_twilight_minutes(lat, lon, tz, d)
        lines.append(
            f"    ({name!r}, {lat!r}, {lon!r}, {tz!r}, "
            f"date({d.year}, {d.month}, {d.day}), {m:.2f}),"
        )
    lines.append("]")
    lines.append("")
    out = Path(__file__).resolve().parent.parent / "tests" / "solar_reference.py"
    out.write_text("\n".join(lines))
    print(f"wrote {out}")


if __name__ == "__main__":
    main()

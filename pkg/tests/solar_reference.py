"""Frozen solar reference values. Generated by
scripts/make_solar_reference.py from the independent Meeus-based
oracle in tests/solar_oracle.py; regenerate rather than edit."""

from datetime import date, datetime, timezone

# (name, latitude, longitude, utc instant, zenith degrees)
ZENITH_REFERENCE = [
    ('portland_me_summer_noon', 43.6615, -70.2553, datetime(2015, 6, 21, 17, 0, tzinfo=timezone.utc), 20.5344),
    ('portland_me_winter_noon', 43.6615, -70.2553, datetime(2015, 12, 21, 17, 0, tzinfo=timezone.utc), 67.2673),
    ('portland_me_morning', 43.6615, -70.2553, datetime(2014, 9, 10, 12, 30, tzinfo=timezone.utc), 66.6294),
    ('sydney_summer', -33.8688, 151.2093, datetime(2009, 12, 20, 2, 0, tzinfo=timezone.utc), 10.5642),
    ('sydney_winter_morning', -33.8688, 151.2093, datetime(2009, 6, 20, 22, 0, tzinfo=timezone.utc), 80.3129),
    ('austin_equinox', 30.2672, -97.7431, datetime(2017, 3, 20, 18, 15, tzinfo=timezone.utc), 30.6418),
    ('austin_august_evening', 30.2672, -97.7431, datetime(2005, 8, 15, 23, 45, tzinfo=timezone.utc), 72.3778),
    ('london_may_morning', 51.5074, -0.1278, datetime(1995, 5, 1, 7, 0, tzinfo=timezone.utc), 68.6843),
    ('london_autumn_noon', 51.5074, -0.1278, datetime(2030, 10, 10, 12, 0, tzinfo=timezone.utc), 58.3362),
    ('reykjavik_midsummer', 64.1466, -21.9426, datetime(2020, 6, 21, 13, 30, tzinfo=timezone.utc), 40.7115),
    ('reykjavik_midwinter', 64.1466, -21.9426, datetime(2020, 12, 21, 13, 30, tzinfo=timezone.utc), 87.5868),
    ('equator_march_noon', 0.0, 0.0, datetime(1988, 3, 21, 12, 0, tzinfo=timezone.utc), 1.8272),
    ('equator_june_afternoon', 0.0, 0.0, datetime(2042, 6, 10, 15, 0, tzinfo=timezone.utc), 49.5017),
    ('tokyo_january', 35.6762, 139.6503, datetime(1999, 1, 5, 3, 0, tzinfo=timezone.utc), 58.4320),
    ('tokyo_july_evening', 35.6762, 139.6503, datetime(2024, 7, 4, 8, 30, tzinfo=timezone.utc), 73.8527),
    ('cape_town_october', -33.9249, 18.4241, datetime(1975, 10, 15, 10, 0, tzinfo=timezone.utc), 26.6242),
    ('fairbanks_spring', 64.8378, -147.7164, datetime(2010, 4, 1, 22, 0, tzinfo=timezone.utc), 60.0754),
    ('singapore_noon', 1.3521, 103.8198, datetime(2033, 9, 1, 5, 0, tzinfo=timezone.utc), 6.9087),
    ('buenos_aires_dusk', -34.6037, -58.3816, datetime(1960, 2, 10, 22, 30, tzinfo=timezone.utc), 86.2902),
    ('anchor_1952_london', 51.5074, -0.1278, datetime(1952, 7, 1, 11, 0, tzinfo=timezone.utc), 30.9849),
]

# (name, latitude, longitude, utc_offset_hours, local date, minutes)
CIVIL_TWILIGHT_REFERENCE = [
    ('portland_me_equinox', 43.6615, -70.2553, -5.0, date(2015, 3, 20), 785.56),
    ('portland_me_solstice', 43.6615, -70.2553, -5.0, date(2015, 6, 21), 998.79),
    ('portland_me_winter', 43.6615, -70.2553, -5.0, date(2014, 12, 21), 601.46),
    ('sydney_january', -33.8688, 151.2093, 10.0, date(2009, 1, 15), 905.97),
    ('sydney_july', -33.8688, 151.2093, 10.0, date(2009, 7, 15), 660.59),
    ('austin_april', 30.2672, -97.7431, -6.0, date(2016, 4, 10), 815.69),
    ('equator_equinox', 0.0, 0.0, 0.0, date(2015, 3, 20), 767.84),
    ('london_august', 51.5074, -0.1278, 0.0, date(2021, 8, 1), 1004.80),
    ('tokyo_november', 35.6762, 139.6503, 9.0, date(2003, 11, 20), 665.61),
    ('cape_town_december', -33.9249, 18.4241, 2.0, date(2018, 12, 10), 919.56),
]

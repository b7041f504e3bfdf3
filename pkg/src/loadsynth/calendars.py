"""Calendar semantics: real month lengths, seasons, weekdays.

The synthesis pipeline works on two time axes: wall-clock hours since
Jan 1 00:00 of one year, and a uniform "month coordinate" tau where month
T occupies [T - 1/2, T + 1/2]. This module owns the mapping between the
two (piecewise affine, so real month lengths are respected) plus all
season and weekday bookkeeping, keeping the numeric modules calendar-free.

Conventions: weekdays are ISO (1 = Monday .. 7 = Sunday), the grid is
naive local time (no time zones, no DST), and the year is treated as
cyclic for season arithmetic. All types are immutable and all operations
are pure functions.
"""

from __future__ import annotations

import calendar as _calendar
import datetime
from bisect import bisect_right
from dataclasses import dataclass
from typing import NamedTuple

from .errors import ConfigError

HOURS_PER_DAY = 24

#: Meteorological season starts as (month, day): winter, spring, summer, autumn.
DEFAULT_SEASON_STARTS = ((12, 1), (3, 1), (6, 1), (9, 1))

MIN_YEAR = 1583
MAX_YEAR = 9999


@dataclass(frozen=True)
class YearContext:
    """One civil year reduced to the facts the pipeline needs."""

    year: int
    hours_in_year: int
    month_boundaries: tuple[int, ...]  # 13 cumulative hour offsets from Jan 1 00:00
    weekday_of_jan1: int  # ISO weekday of Jan 1

    @property
    def days_in_year(self) -> int:
        return self.hours_in_year // HOURS_PER_DAY


@dataclass(frozen=True)
class SeasonCalendar:
    """Season start dates and the derived cyclic season midpoints (hours)."""

    season_starts: tuple[tuple[int, int], ...]
    season_start_hours: tuple[float, ...]
    season_midpoints: tuple[float, ...]


class MonthCoordinate(NamedTuple):
    tau: float  # in [0.5, 12.5], affine within each month
    jacobian: float  # d tau / dt in 1/hours, constant within a month


class SeasonPosition(NamedTuple):
    lower: int  # season whose midpoint is nearest at-or-before t (cyclically)
    upper: int  # cyclic successor of lower
    fraction: float  # linear ramp: 0 at the lower midpoint, 1 at the upper


def make_year_context(year: int) -> YearContext:
    """Build the calendar context for one Gregorian year."""
    if not MIN_YEAR <= year <= MAX_YEAR:
        raise ValueError(f"year {year} outside supported range {MIN_YEAR}..{MAX_YEAR}")
    boundaries = [0]
    for month in range(1, 13):
        days = _calendar.monthrange(year, month)[1]
        boundaries.append(boundaries[-1] + days * HOURS_PER_DAY)
    return YearContext(
        year=year,
        hours_in_year=boundaries[-1],
        month_boundaries=tuple(boundaries),
        weekday_of_jan1=datetime.date(year, 1, 1).isoweekday(),
    )


def month_of(ctx: YearContext, t: float) -> int:
    """Month (1..12) containing wall-clock hour t; the year end counts as December."""
    if not 0 <= t <= ctx.hours_in_year:
        raise ValueError(f"t={t} outside the year (0..{ctx.hours_in_year} h)")
    return min(bisect_right(ctx.month_boundaries, t), 12)


def month_coordinate(ctx: YearContext, t: float) -> MonthCoordinate:
    """Map wall-clock hour t to the month coordinate axis.

    The start of month T maps to T - 1/2 and its end to T + 1/2, affinely
    in between, so the map is a continuous bijection [0, hours_in_year] ->
    [0.5, 12.5] whose jacobian within month T is 1 / (hours in T).
    """
    month = month_of(ctx, t)
    lo = ctx.month_boundaries[month - 1]
    hours = ctx.month_boundaries[month] - lo
    return MonthCoordinate(
        tau=(month - 0.5) + (t - lo) / hours,
        jacobian=1.0 / hours,
    )


def weekday_of(ctx: YearContext, t: float) -> int:
    """ISO weekday (1 = Monday) of the civil day containing hour t."""
    if not 0 <= t < ctx.hours_in_year:
        raise ValueError(f"t={t} outside the year (0..{ctx.hours_in_year} h)")
    day_index = int(t // HOURS_PER_DAY)
    return (ctx.weekday_of_jan1 - 1 + day_index) % 7 + 1


def make_season_calendar(
    ctx: YearContext,
    season_starts: tuple[tuple[int, int], ...] = DEFAULT_SEASON_STARTS,
) -> SeasonCalendar:
    """Resolve season start dates to hours and derive the cyclic midpoints.

    Seasons must be listed in cyclic temporal order (any rotation); each
    season runs from its start to the next season's start, wrapping across
    the year boundary, and its midpoint is the temporal middle of that span.
    """
    if len(season_starts) != 4:
        raise ConfigError(f"expected 4 season starts, got {len(season_starts)}")
    hours_in_year = ctx.hours_in_year
    start_hours = []
    for month, day in season_starts:
        try:
            date = datetime.date(ctx.year, month, day)
        except ValueError as exc:
            raise ConfigError(f"invalid season start {month:02d}-{day:02d} in {ctx.year}: {exc}") from exc
        start_hours.append(float((date - datetime.date(ctx.year, 1, 1)).days * HOURS_PER_DAY))
    if len(set(start_hours)) != 4:
        raise ConfigError("season starts must be four distinct dates")
    # Rotate so the earliest start comes first; the listed order must then be increasing.
    first = min(range(4), key=lambda i: start_hours[i])
    rotated = [start_hours[(first + i) % 4] for i in range(4)]
    if rotated != sorted(rotated):
        raise ConfigError("season starts must be listed in cyclic temporal order")
    midpoints = []
    for i, start in enumerate(start_hours):
        length = (start_hours[(i + 1) % 4] - start) % hours_in_year
        if length <= 0:
            raise ConfigError("degenerate season calendar: zero-length season")
        midpoints.append((start + length / 2.0) % hours_in_year)
    if len(set(midpoints)) != 4:
        raise ConfigError("degenerate season calendar: coinciding season midpoints")
    return SeasonCalendar(
        season_starts=tuple((int(m), int(d)) for m, d in season_starts),
        season_start_hours=tuple(start_hours),
        season_midpoints=tuple(midpoints),
    )


def season_position(cal: SeasonCalendar, ctx: YearContext, t: float) -> SeasonPosition:
    """Locate t between the two enclosing season midpoints (cyclically).

    Returns the season whose midpoint is the nearest at-or-before t, its
    cyclic successor, and the linear ramp fraction between the two
    midpoints (0 at the first, approaching 1 at the second). Continuous
    across the year boundary.
    """
    hours_in_year = ctx.hours_in_year
    t = t % hours_in_year
    mids = cal.season_midpoints
    lower = min(range(4), key=lambda s: (t - mids[s]) % hours_in_year)
    upper = (lower + 1) % 4
    gap = (mids[upper] - mids[lower]) % hours_in_year
    fraction = ((t - mids[lower]) % hours_in_year) / gap
    return SeasonPosition(lower + 1, upper + 1, fraction)


def season_of(cal: SeasonCalendar, ctx: YearContext, t: float) -> int:
    """Season (1..4) containing hour t, by season start boundaries (cyclic)."""
    hours_in_year = ctx.hours_in_year
    t = t % hours_in_year
    starts = cal.season_start_hours
    best = min(range(4), key=lambda s: (t - starts[s]) % hours_in_year)
    return best + 1

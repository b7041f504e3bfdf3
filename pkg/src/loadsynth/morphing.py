"""Reference day profiles and their seasonal blending into a raw year.

A day profile is a dimensionless 24 h load shape on a fixed sub-hourly
grid. The library holds one profile per (weekday, season) slot; slots may
alias the same profile object (e.g. spring and autumn sharing shapes).

Between two adjacent season midpoints the day shapes are blended
linearly: at a midpoint the season's own profile applies unchanged, and
the blend fraction ramps to 1 toward the next midpoint. Stringing one
blended day after another yields the raw year series, which carries the
intraday and weekly structure but not yet the monthly amplitudes; the
composition stage rescales it, which is also why absolute profile units
are irrelevant here.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .calendars import (
    HOURS_PER_DAY,
    SeasonCalendar,
    YearContext,
    season_of,
    season_position,
    weekday_of,
)


def _samples_per_day(dt: float) -> int:
    if dt <= 0:
        raise ValueError(f"grid step must be positive, got {dt}")
    per_day = HOURS_PER_DAY / dt
    if abs(per_day - round(per_day)) > 1e-9:
        raise ValueError(f"grid step {dt} h does not divide 24 h exactly")
    return round(per_day)


@dataclass(frozen=True, eq=False)
class DayProfile:
    """One 24 h shape: 24/dt non-negative samples, not all zero."""

    dt: float
    samples: np.ndarray

    def __post_init__(self):
        per_day = _samples_per_day(self.dt)
        samples = np.array(self.samples, dtype=float)
        if samples.ndim != 1 or len(samples) != per_day:
            raise ValueError(
                f"expected {per_day} samples for dt={self.dt} h, got {samples.shape}"
            )
        if not np.isfinite(samples).all():
            raise ValueError("profile samples must be finite")
        if (samples < 0).any():
            raise ValueError("profile samples must be non-negative")
        if not (samples > 0).any():
            raise ValueError("profile is identically zero")
        samples.setflags(write=False)
        object.__setattr__(self, "samples", samples)


@dataclass(frozen=True, eq=False)
class ProfileLibrary:
    """Profiles for every (weekday 1..7, season 1..4) slot, one shared grid step."""

    dt: float
    profiles: dict[tuple[int, int], DayProfile] = field(repr=False)

    def __post_init__(self):
        expected = {(d, s) for d in range(1, 8) for s in range(1, 5)}
        if set(self.profiles) != expected:
            missing = sorted(expected - set(self.profiles))
            extra = sorted(set(self.profiles) - expected)
            raise ValueError(f"profile slots wrong: missing {missing}, unexpected {extra}")
        for slot, profile in self.profiles.items():
            if profile.dt != self.dt:
                raise ValueError(
                    f"profile for weekday={slot[0]} season={slot[1]} has dt={profile.dt}, "
                    f"library dt={self.dt}"
                )


@dataclass(frozen=True, eq=False)
class YearSeries:
    """A uniformly gridded series covering one year from Jan 1 00:00."""

    dt: float
    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=float)
        if values.ndim != 1 or len(values) == 0:
            raise ValueError("series values must be a non-empty 1-D array")
        if not np.isfinite(values).all():
            raise ValueError("series values must all be finite")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return len(self.values)

    @property
    def duration_h(self) -> float:
        return len(self.values) * self.dt

    def times(self) -> np.ndarray:
        """Left grid points in hours since Jan 1 00:00."""
        return np.arange(len(self.values)) * self.dt


def morph_day(
    lib: ProfileLibrary,
    weekday: int,
    season_lo: int,
    season_hi: int,
    fraction: float,
) -> DayProfile:
    """Blend the weekday's profiles of two seasons: lo + fraction * (hi - lo).

    fraction must lie in [0, 1]. The endpoints return the library's own
    profile objects, so a fraction of exactly 0 or 1 is bit-exact.
    """
    if not 0.0 <= fraction <= 1.0:
        raise ValueError(f"blend fraction {fraction} outside [0, 1]")
    try:
        lo = lib.profiles[(weekday, season_lo)]
        hi = lib.profiles[(weekday, season_hi)]
    except KeyError as exc:
        raise ValueError(f"no profile for slot {exc.args[0]}") from None
    if fraction == 0.0:
        return lo
    if fraction == 1.0:
        return hi
    return DayProfile(lib.dt, lo.samples + fraction * (hi.samples - lo.samples))


def build_raw_year(
    lib: ProfileLibrary,
    cal: SeasonCalendar,
    ctx: YearContext,
    morph: bool = True,
) -> YearSeries:
    """String blended day profiles into one gapless year series.

    Each civil day uses its ISO weekday's profiles; the blend fraction is
    evaluated once at the day's noon and held constant across the day.
    With morph=False the day instead takes the unblended profile of the
    season containing it, which reproduces hard jumps at season starts.
    """
    per_day = _samples_per_day(lib.dt)
    days = ctx.days_in_year
    values = np.empty(days * per_day, dtype=float)
    for day in range(days):
        noon = day * HOURS_PER_DAY + 12.0
        weekday = weekday_of(ctx, noon)
        if morph:
            pos = season_position(cal, ctx, noon)
            profile = morph_day(lib, weekday, pos.lower, pos.upper, pos.fraction)
        else:
            profile = lib.profiles[(weekday, season_of(cal, ctx, noon))]
        values[day * per_day : (day + 1) * per_day] = profile.samples
    return YearSeries(dt=lib.dt, values=values)

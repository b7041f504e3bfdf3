"""Combine the monthly envelope with the raw year series.

The fitted harmonic series lives on the month-coordinate axis; pulled
back through the calendar map and multiplied by the per-month jacobian it
becomes an hourly energy rate whose integral over any calendar month
equals that month's total exactly. The raw series carries the intraday
shape but arbitrary units. For every grid point a scale factor is formed
as the ratio of the envelope's and the raw series' integrals over the
surrounding one-week-each-side window; multiplying the raw series by
those factors yields the synthesized series, which tracks the envelope's
integral over arbitrary intervals while keeping the fine structure.

The year is treated as periodic: windows reaching past Jan 1 or Dec 31
wrap around. Raw-series integrals use left-rectangle sums (the series is
a step function on its grid), so the verification sums over the
synthesized series are exact bookkeeping rather than quadrature.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .calendars import YearContext, month_coordinate
from .errors import DegenerateWindowError
from .harmonics import HarmonicSeries, eval_harmonics, integrate_harmonics
from .morphing import YearSeries, _samples_per_day

RELATIVE_ERROR_FLOOR = 1e-12


class ScalingSeries(YearSeries):
    """Per-grid-point scale factors (dimensionless)."""


class SynthesizedSeries(YearSeries):
    """The final load series in envelope units per hour."""


def envelope_rate(h: HarmonicSeries, ctx: YearContext, t: float) -> float:
    """Envelope as an hourly energy rate at wall-clock hour t.

    Series value at the month coordinate of t times the month's jacobian,
    so the rate integrates to the month totals on the real calendar.
    """
    tau, jacobian = month_coordinate(ctx, t)
    return eval_harmonics(h, tau) * jacobian


def _tau_grid(ctx: YearContext, t: np.ndarray) -> np.ndarray:
    # Vector version of month_coordinate().tau; same piecewise-affine formula.
    bounds = np.asarray(ctx.month_boundaries, dtype=float)
    idx = np.clip(np.searchsorted(bounds, t, side="right"), 1, 12)
    lo = bounds[idx - 1]
    return (idx - 0.5) + (t - lo) / (bounds[idx] - lo)


def envelope_rate_grid(h: HarmonicSeries, ctx: YearContext, t) -> np.ndarray:
    """Vectorized envelope rate at wall-clock hours t (each within the year)."""
    t = np.asarray(t, dtype=float)
    if t.size and (t.min() < 0 or t.max() > ctx.hours_in_year):
        raise ValueError("times outside the year")
    bounds = np.asarray(ctx.month_boundaries, dtype=float)
    idx = np.clip(np.searchsorted(bounds, t, side="right"), 1, 12)
    month_hours = bounds[idx] - bounds[idx - 1]
    tau = (idx - 0.5) + (t - bounds[idx - 1]) / month_hours
    return eval_harmonics(h, tau) / month_hours


def _cumulative_envelope(h: HarmonicSeries, ctx: YearContext, t: np.ndarray) -> np.ndarray:
    # Energy accumulated from Jan 1 00:00 up to each t, in closed form.
    return integrate_harmonics(h, 0.5, _tau_grid(ctx, t))


def window_envelope_integral(
    h: HarmonicSeries, ctx: YearContext, center: float, half_width: float
) -> float:
    """Exact envelope energy in the cyclic window [center - W, center + W]."""
    hours_in_year = ctx.hours_in_year
    if half_width <= 0:
        raise ValueError(f"window half-width must be positive, got {half_width}")
    if 2 * half_width > hours_in_year:
        raise ValueError("window longer than the year")

    def cumulative(t: float) -> float:
        return integrate_harmonics(h, 0.5, month_coordinate(ctx, t).tau)

    total = integrate_harmonics(h, 0.5, 12.5)
    lo = (center - half_width) % hours_in_year
    hi = (center + half_width) % hours_in_year
    if lo < hi:
        return cumulative(hi) - cumulative(lo)
    if lo > hi:
        return (total - cumulative(lo)) + cumulative(hi)
    return total  # window spans exactly the whole year


def _window_steps(dt: float, half_width: float, n: int) -> int:
    if half_width <= 0:
        raise ValueError(f"window half-width must be positive, got {half_width}")
    steps = half_width / dt
    if abs(steps - round(steps)) > 1e-9:
        raise ValueError(f"window half-width {half_width} h is not a multiple of dt={dt} h")
    steps = round(steps)
    if 2 * steps > n:
        raise ValueError("window longer than the year")
    return steps


def window_series_integral(raw: YearSeries, center: float, half_width: float) -> float:
    """Left-rectangle integral of the raw series over the cyclic window.

    The window covers the 2W/dt samples starting at the sample containing
    center - W, wrapping modulo the year.
    """
    n = len(raw.values)
    steps = _window_steps(raw.dt, half_width, n)
    start = (center - half_width) / raw.dt
    start_idx = round(start) if abs(start - round(start)) <= 1e-6 else int(np.floor(start))
    idx = (start_idx + np.arange(2 * steps)) % n
    value = raw.dt * float(raw.values[idx].sum())
    if value <= 0.0:
        raise DegenerateWindowError(
            f"raw series integrates to {value} over the window "
            f"[{center - half_width}, {center + half_width}] h"
        )
    return value


def compute_scaling(
    h: HarmonicSeries, ctx: YearContext, raw: YearSeries, half_width: float
) -> ScalingSeries:
    """Scale factor at every grid point: envelope window energy over raw window sum."""
    n = len(raw.values)
    per_day = _samples_per_day(raw.dt)
    if n != ctx.days_in_year * per_day:
        raise ValueError(
            f"series has {n} samples, expected {ctx.days_in_year * per_day} for {ctx.year}"
        )
    steps = _window_steps(raw.dt, half_width, n)

    # Envelope numerators from the closed-form cumulative energy at the grid
    # nodes, extended periodically past the year edges.
    nodes = np.minimum(np.arange(n + 1) * raw.dt, float(ctx.hours_in_year))
    cumulative = _cumulative_envelope(h, ctx, nodes)
    total = cumulative[n]

    def cumulative_ext(k: np.ndarray) -> np.ndarray:
        return cumulative[k % n] + (k // n) * total

    grid = np.arange(n)
    numerators = cumulative_ext(grid + steps) - cumulative_ext(grid - steps)

    # Raw-series denominators via a prefix sum; windows wrap at most once.
    prefix = np.concatenate([[0.0], np.cumsum(raw.values)])
    total_raw = prefix[n]

    def prefix_ext(k: np.ndarray) -> np.ndarray:
        return np.where(k <= n, prefix[np.minimum(k, n)], total_raw + prefix[np.maximum(k - n, 0)])

    start = (grid - steps) % n
    window_sums = prefix_ext(start + 2 * steps) - prefix[start]
    denominators = raw.dt * window_sums
    if not (denominators > 0).all():
        bad = int(np.argmin(denominators > 0))
        raise DegenerateWindowError(
            f"raw series integrates to {denominators[bad]} over the window around "
            f"t={bad * raw.dt} h (grid index {bad})"
        )
    return ScalingSeries(raw.dt, numerators / denominators)


def synthesize(scaling: ScalingSeries, raw: YearSeries) -> SynthesizedSeries:
    """Pointwise product of scale factors and raw series (grids must match)."""
    if scaling.dt != raw.dt or len(scaling.values) != len(raw.values):
        raise ValueError(
            f"grid mismatch: scaling {len(scaling.values)}@{scaling.dt} h "
            f"vs raw {len(raw.values)}@{raw.dt} h"
        )
    return SynthesizedSeries(raw.dt, scaling.values * raw.values)


class IntervalCheck(NamedTuple):
    """Result of one integral comparison over a grid-snapped interval."""

    expected: float
    actual: float
    relative_error: float
    start_h: float
    end_h: float


def verify_intervals(
    synthesized: SynthesizedSeries,
    h: HarmonicSeries,
    ctx: YearContext,
    intervals,
) -> list[IntervalCheck]:
    """Compare envelope energy and synthesized-series energy per interval.

    Interval endpoints are snapped to the series grid; the expected value
    is the exact envelope integral over the snapped interval and the
    actual value the left-rectangle sum of the synthesized series over it.
    """
    n = len(synthesized.values)
    dt = synthesized.dt
    checks = []
    for start_h, end_h in intervals:
        if not (np.isfinite(start_h) and np.isfinite(end_h)):
            raise ValueError(f"malformed interval ({start_h}, {end_h})")
        if not 0 <= start_h <= end_h <= ctx.hours_in_year:
            raise ValueError(f"interval ({start_h}, {end_h}) outside the year or reversed")
        i_lo = min(max(round(start_h / dt), 0), n)
        i_hi = min(max(round(end_h / dt), i_lo), n)
        t_lo = min(i_lo * dt, float(ctx.hours_in_year))
        t_hi = min(i_hi * dt, float(ctx.hours_in_year))
        expected = integrate_harmonics(
            h, month_coordinate(ctx, t_lo).tau, month_coordinate(ctx, t_hi).tau
        )
        actual = dt * float(synthesized.values[i_lo:i_hi].sum())
        relative_error = abs(actual - expected) / max(abs(expected), RELATIVE_ERROR_FLOOR)
        checks.append(IntervalCheck(expected, actual, relative_error, float(start_h), float(end_h)))
    return checks

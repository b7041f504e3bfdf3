"""Trigonometric interpolation of 12 monthly integrals.

Fits the 12-periodic, 6-harmonic series

    y(tau) = a0 + sum_{j=1..6} [ a_j cos(2 pi j tau / 12) + b_j sin(2 pi j tau / 12) ]

on the month-coordinate axis (month T occupies [T - 1/2, T + 1/2]) such
that the integral of y over every month interval equals the given monthly
total exactly. The coefficients are a rescaled 12-point discrete Fourier
transform of the totals: averaging the j-th harmonic over a unit interval
attenuates it by sin(pi j / 12) / (pi j / 12), and the fit divides that
factor back out, which is why the month integrals are reproduced exactly.

Everything here is closed form: evaluation, integration (exact
antiderivative), residuals, and a sign diagnostic for overshoot below
zero. No clamping is ever applied; a fit to non-negative totals may still
dip negative, and callers are expected to surface `negative_intervals`
instead of silently altering the curve.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

PERIOD = 12.0
HARMONICS = 6


@dataclass(frozen=True)
class MonthlyIntegrals:
    """Twelve per-month totals (January..December), e.g. kWh per month."""

    values: tuple[float, ...]

    def __post_init__(self):
        values = tuple(float(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if len(values) != 12:
            raise ValueError(f"expected 12 monthly values, got {len(values)}")
        if not all(math.isfinite(v) for v in values):
            raise ValueError("monthly values must all be finite")
        negatives = [i + 1 for i, v in enumerate(values) if v < 0]
        if negatives:
            warnings.warn(
                f"negative monthly value(s) for month(s) {negatives}; "
                "physical loads are expected to be non-negative",
                UserWarning,
                stacklevel=2,
            )

    @property
    def total(self) -> float:
        return sum(self.values)


@dataclass(frozen=True)
class HarmonicSeries:
    """Coefficients of the fitted 12-periodic series; b6 is identically 0."""

    a0: float
    a: tuple[float, float, float, float, float, float]
    b: tuple[float, float, float, float, float, float]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(float(v) for v in self.a))
        object.__setattr__(self, "b", tuple(float(v) for v in self.b))
        if len(self.a) != HARMONICS or len(self.b) != HARMONICS:
            raise ValueError("expected exactly 6 cosine and 6 sine coefficients")
        if self.b[5] != 0.0:
            raise ValueError("the 6th sine coefficient must be exactly 0")
        if not all(math.isfinite(v) for v in (self.a0, *self.a, *self.b)):
            raise ValueError("coefficients must be finite")


def fit_harmonics(m: MonthlyIntegrals) -> HarmonicSeries:
    """Fit the series whose month-interval integrals equal `m` exactly."""
    a0 = 0.0
    for value in m.values:
        a0 += value / 12.0
    a = []
    b = []
    for j in range(1, 6):
        gain = (math.pi * j / 12.0) / math.sin(math.pi * j / 12.0)
        cos_sum = 0.0
        sin_sum = 0.0
        for month, value in enumerate(m.values, start=1):
            angle = math.pi * j * month / 6.0
            cos_sum += (value / 6.0) * math.cos(angle)
            sin_sum += (value / 6.0) * math.sin(angle)
        a.append(gain * cos_sum)
        b.append(gain * sin_sum)
    alternating_sum = 0.0
    for month, value in enumerate(m.values, start=1):
        alternating_sum += (value / 12.0) * math.cos(math.pi * month)
    a.append((math.pi / 2.0) * alternating_sum)  # sin(pi/2) = 1
    b.append(0.0)
    return HarmonicSeries(a0=a0, a=tuple(a), b=tuple(b))


def eval_harmonics(h: HarmonicSeries, tau):
    """Evaluate the series at month coordinate(s) tau (any real; 12-periodic).

    Accepts scalars or arrays. Arguments are reduced mod 12 before the
    trig calls so large coordinates do not lose precision.
    """
    base = np.mod(tau, PERIOD) * (math.pi / 6.0)
    out = h.a0 + np.zeros_like(base)
    for j in range(1, HARMONICS + 1):
        out = out + h.a[j - 1] * np.cos(j * base) + h.b[j - 1] * np.sin(j * base)
    return float(out) if np.ndim(out) == 0 else out


def _antiderivative(h: HarmonicSeries, tau):
    # a0 * tau + 12-periodic part; the periodic part is evaluated with the
    # argument reduced mod 12, which leaves its value unchanged.
    tau = np.asarray(tau, dtype=float)
    base = np.mod(tau, PERIOD) * (math.pi / 6.0)
    out = h.a0 * tau
    for j in range(1, HARMONICS + 1):
        out = out + (6.0 / (math.pi * j)) * (
            h.a[j - 1] * np.sin(j * base) - h.b[j - 1] * np.cos(j * base)
        )
    return out


def integrate_harmonics(h: HarmonicSeries, tau_a, tau_b):
    """Exact integral of the series over [tau_a, tau_b] (closed form).

    Bounds may be scalars or broadcastable arrays; reversed bounds raise.
    """
    lo = np.asarray(tau_a, dtype=float)
    hi = np.asarray(tau_b, dtype=float)
    if np.any(hi < lo):
        raise ValueError("reversed integration bounds")
    out = _antiderivative(h, hi) - _antiderivative(h, lo)
    return float(out) if np.ndim(out) == 0 else out


def month_integral_residuals(h: HarmonicSeries, m: MonthlyIntegrals) -> list[float]:
    """Per-month integral minus target, for all 12 months."""
    return [
        integrate_harmonics(h, month - 0.5, month + 0.5) - m.values[month - 1]
        for month in range(1, 13)
    ]


def negative_intervals(h: HarmonicSeries, samples: int = 4800) -> list[tuple[float, float]]:
    """Tau intervals within [0.5, 12.5] where the series dips below zero.

    Grid scan plus bisection refinement of the sign changes. Resolution is
    limited by `samples`; the default (400 points per month) comfortably
    resolves anything a 6-harmonic series can do.
    """
    lo, hi = 0.5, 12.5
    grid = np.linspace(lo, hi, samples + 1)
    vals = eval_harmonics(h, grid)
    neg = vals < 0.0

    def refine(t_pos: float, t_neg: float) -> float:
        # Bisect between a non-negative and a negative point.
        for _ in range(60):
            mid = 0.5 * (t_pos + t_neg)
            if eval_harmonics(h, mid) < 0.0:
                t_neg = mid
            else:
                t_pos = mid
        return 0.5 * (t_pos + t_neg)

    intervals = []
    i = 0
    n = len(grid)
    while i < n:
        if not neg[i]:
            i += 1
            continue
        j = i
        while j + 1 < n and neg[j + 1]:
            j += 1
        start = lo if i == 0 else refine(grid[i - 1], grid[i])
        end = hi if j == n - 1 else refine(grid[j + 1], grid[j])
        intervals.append((start, end))
        i = j + 1
    return intervals

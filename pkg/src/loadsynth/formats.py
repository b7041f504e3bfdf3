"""CSV file formats: monthly totals, day profiles, year series, plot data.

All writers emit LF line endings and print numbers with 10 significant
digits (trailing zeros kept), so identical inputs produce byte-identical
files and golden-file comparisons stay stable across platforms.
"""

from __future__ import annotations

import csv
from pathlib import Path

import numpy as np

from .errors import InputDataError, OutputError
from .harmonics import MonthlyIntegrals
from .morphing import DayProfile, YearSeries, _samples_per_day

#: Supported grid steps in hours (whole fractions of an hour down to 5 min).
ALLOWED_DT = (1.0, 0.5, 0.25, 1.0 / 6.0, 1.0 / 12.0)

TIME_TOLERANCE_H = 1e-9


def _fmt(value: float) -> str:
    # '#.10g': 10 significant digits, trailing zeros kept.
    return format(float(value), "#.10g")


def _read_rows(path: Path, expected_header: list[str]) -> list[tuple[int, list[str]]]:
    try:
        with open(path, newline="") as fh:
            rows = [(lineno, row) for lineno, row in enumerate(csv.reader(fh), start=1) if row]
    except OSError as exc:
        raise InputDataError(f"cannot read {path}: {exc}") from exc
    if not rows:
        raise InputDataError(f"{path}: empty file, expected header {','.join(expected_header)}")
    header_line, header = rows[0]
    if [cell.strip() for cell in header] != expected_header:
        raise InputDataError(
            f"{path}: line {header_line}: expected header "
            f"'{','.join(expected_header)}', got '{','.join(header)}'"
        )
    return rows[1:]


def load_monthly_csv(path) -> MonthlyIntegrals:
    """Read 12 rows of `month,value` (months 1..12, any order, each once)."""
    path = Path(path)
    rows = _read_rows(path, ["month", "value"])
    seen: dict[int, float] = {}
    for lineno, row in rows:
        if len(row) != 2:
            raise InputDataError(f"{path}: line {lineno}: expected 2 columns, got {len(row)}")
        try:
            month = int(row[0].strip())
        except ValueError:
            raise InputDataError(f"{path}: line {lineno}: month index '{row[0]}' is not an integer") from None
        if not 1 <= month <= 12:
            raise InputDataError(f"{path}: line {lineno}: month index {month} outside 1..12")
        if month in seen:
            raise InputDataError(f"{path}: line {lineno}: duplicate month {month}")
        try:
            value = float(row[1].strip())
        except ValueError:
            raise InputDataError(f"{path}: line {lineno}: value '{row[1]}' is not numeric") from None
        seen[month] = value
    missing = sorted(set(range(1, 13)) - set(seen))
    if missing:
        raise InputDataError(f"{path}: missing month(s) {missing}")
    try:
        return MonthlyIntegrals(tuple(seen[m] for m in range(1, 13)))
    except ValueError as exc:
        raise InputDataError(f"{path}: {exc}") from exc


def load_profile_csv(path, dt: float) -> DayProfile:
    """Read one day profile: `time_h,value` rows on the grid k*dt, k=0..24/dt-1."""
    path = Path(path)
    per_day = _samples_per_day(dt)
    rows = _read_rows(path, ["time_h", "value"])
    if len(rows) != per_day:
        raise InputDataError(
            f"{path}: expected {per_day} data rows for dt={dt} h, got {len(rows)}"
        )
    values = np.empty(per_day, dtype=float)
    for k, (lineno, row) in enumerate(rows):
        if len(row) != 2:
            raise InputDataError(f"{path}: line {lineno}: expected 2 columns, got {len(row)}")
        try:
            time_h = float(row[0].strip())
            value = float(row[1].strip())
        except ValueError:
            raise InputDataError(f"{path}: line {lineno}: non-numeric cell") from None
        if abs(time_h - k * dt) > TIME_TOLERANCE_H:
            raise InputDataError(
                f"{path}: line {lineno}: time {time_h} off-grid, expected {k * dt}"
            )
        values[k] = value
    try:
        return DayProfile(dt, values)
    except ValueError as exc:
        raise InputDataError(f"{path}: {exc}") from exc


def write_series_csv(series: YearSeries, path) -> None:
    """Write `t_hours,value` rows, one per grid point, deterministically."""
    path = Path(path)
    dt = series.dt
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", newline="") as fh:
            fh.write("t_hours,value\n")
            for i, value in enumerate(series.values):
                fh.write(f"{_fmt(i * dt)},{_fmt(value)}\n")
    except OSError as exc:
        raise OutputError(f"cannot write {path}: {exc}") from exc


def read_series_csv(path) -> YearSeries:
    """Read a series written by write_series_csv back into memory.

    The grid step is inferred from the time column and snapped to the
    supported steps; values round-trip at the 10-digit print precision.
    """
    path = Path(path)
    rows = _read_rows(path, ["t_hours", "value"])
    if len(rows) < 2:
        raise InputDataError(f"{path}: a series needs at least 2 rows")
    times = np.empty(len(rows))
    values = np.empty(len(rows))
    for k, (lineno, row) in enumerate(rows):
        if len(row) != 2:
            raise InputDataError(f"{path}: line {lineno}: expected 2 columns, got {len(row)}")
        try:
            times[k] = float(row[0].strip())
            values[k] = float(row[1].strip())
        except ValueError:
            raise InputDataError(f"{path}: line {lineno}: non-numeric cell") from None
    raw_dt = times[1] - times[0]
    matches = [d for d in ALLOWED_DT if abs(raw_dt - d) <= 1e-6 * d]
    if not matches:
        raise InputDataError(f"{path}: grid step {raw_dt} h is not a supported step")
    dt = matches[0]
    expected = np.arange(len(rows)) * dt
    if abs(times[0]) > TIME_TOLERANCE_H or np.abs(times - expected).max() > 1e-5:
        raise InputDataError(f"{path}: time column is not the uniform grid k*{dt} h from 0")
    try:
        return YearSeries(dt, values)
    except ValueError as exc:
        raise InputDataError(f"{path}: {exc}") from exc


def write_plot_data(series: YearSeries, envelope_samples, path) -> None:
    """Write `t_hours,load,envelope` rows for external plotting.

    The load column repeats the series exactly as write_series_csv prints
    it; the envelope column is the smooth rate sampled on the same grid,
    so full-year overlays and day-scale zooms need no further processing.
    """
    path = Path(path)
    envelope_samples = np.asarray(envelope_samples, dtype=float)
    if len(envelope_samples) != len(series.values):
        raise ValueError(
            f"envelope has {len(envelope_samples)} samples, series {len(series.values)}"
        )
    dt = series.dt
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", newline="") as fh:
            fh.write("t_hours,load,envelope\n")
            for i in range(len(series.values)):
                fh.write(
                    f"{_fmt(i * dt)},{_fmt(series.values[i])},{_fmt(envelope_samples[i])}\n"
                )
    except OSError as exc:
        raise OutputError(f"cannot write {path}: {exc}") from exc

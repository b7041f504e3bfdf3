"""Run configuration: flat key-value file plus CLI overrides.

The format is deliberately strict: `key = value` lines, `#` comments,
unknown or duplicate keys are errors (a misspelled key must never fall
back to a default silently), and every one of the 28 (season, weekday)
profile slots must be assigned exactly once. Paths are resolved relative
to the config file; override paths are taken as given.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from .calendars import DEFAULT_SEASON_STARTS, MAX_YEAR, MIN_YEAR
from .errors import ConfigError
from .formats import ALLOWED_DT

_PROFILE_KEY = re.compile(r"^profile\.([1-4])\.([1-7])(?:-([1-7]))?$")
_SEASON_NAMES = {1: "winter", 2: "spring", 3: "summer", 4: "autumn"}

_SCALAR_KEYS = (
    "year",
    "dt",
    "window",
    "morphing",
    "season_starts",
    "units",
    "months",
    "profiles_dir",
    "out",
    "report",
    "plot_data",
)

#: Override names accepted from the CLI layer.
OVERRIDE_KEYS = ("year", "dt", "window", "morphing", "months", "profiles_dir", "out", "report", "plot_data")


@dataclass(frozen=True)
class RunConfig:
    """Everything one synthesis run needs, fully resolved."""

    year: int
    dt: float
    window_h: float
    morphing: bool
    season_starts: tuple[tuple[int, int], ...]
    units: str
    months_path: Path
    profiles_dir: Path
    out_path: Path | None
    report_path: Path | None
    plot_path: Path | None
    profile_map: dict[tuple[int, int], str]  # (weekday, season) -> filename
    echo: tuple[tuple[str, str], ...]  # effective settings, for the report


def parse_dt(text: str) -> float:
    """Parse a grid step: decimal ('0.25') or fraction ('1/6') hours."""
    text = text.strip()
    try:
        if "/" in text:
            num, _, den = text.partition("/")
            value = float(num) / float(den)
        else:
            value = float(text)
    except (ValueError, ZeroDivisionError):
        raise ConfigError(f"cannot parse grid step '{text}'") from None
    for allowed in ALLOWED_DT:
        if abs(value - allowed) <= 1e-9:
            return allowed
    choices = ", ".join(("1", "0.5", "0.25", "1/6", "1/12"))
    raise ConfigError(f"grid step {text} h unsupported; pick one of {choices}")


def _parse_year(text: str) -> int:
    try:
        year = int(str(text).strip())
    except ValueError:
        raise ConfigError(f"year '{text}' is not an integer") from None
    if not MIN_YEAR <= year <= MAX_YEAR:
        raise ConfigError(f"year {year} outside supported range {MIN_YEAR}..{MAX_YEAR}")
    return year


def _parse_morphing(text: str) -> bool:
    text = str(text).strip().lower()
    if text not in ("on", "off"):
        raise ConfigError(f"morphing must be 'on' or 'off', got '{text}'")
    return text == "on"


def _parse_season_starts(text: str) -> tuple[tuple[int, int], ...]:
    parts = [p.strip() for p in str(text).split(",")]
    if len(parts) != 4:
        raise ConfigError(f"season_starts needs 4 comma-separated MM-DD dates, got {len(parts)}")
    starts = []
    for part in parts:
        m = re.fullmatch(r"(\d{1,2})-(\d{1,2})", part)
        if not m:
            raise ConfigError(f"season start '{part}' is not MM-DD")
        month, day = int(m.group(1)), int(m.group(2))
        if not (1 <= month <= 12 and 1 <= day <= 31):
            raise ConfigError(f"season start '{part}' is not a valid date")
        starts.append((month, day))
    return tuple(starts)


def _parse_window(text: str, dt: float) -> float:
    try:
        window = float(str(text).strip())
    except ValueError:
        raise ConfigError(f"window '{text}' is not a number") from None
    if window <= 0:
        raise ConfigError(f"window must be positive, got {window}")
    steps = window / dt
    if abs(steps - round(steps)) > 1e-9:
        raise ConfigError(f"window {window} h is not a multiple of dt={dt} h")
    return window


def _read_kv_lines(path: Path) -> list[tuple[int, str, str]]:
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    entries = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ConfigError(f"{path}: line {lineno}: expected 'key = value'")
        key, _, value = stripped.partition("=")
        entries.append((lineno, key.strip(), value.strip()))
    return entries


def load_config(path, overrides: dict | None = None) -> RunConfig:
    """Load a run config file and apply CLI overrides on top."""
    path = Path(path)
    base = path.parent
    overrides = dict(overrides or {})
    unknown_overrides = set(overrides) - set(OVERRIDE_KEYS)
    if unknown_overrides:
        raise ConfigError(f"unknown override(s): {sorted(unknown_overrides)}")

    raw: dict[str, str] = {}
    slot_files: dict[tuple[int, int], str] = {}  # (weekday, season) -> filename
    for lineno, key, value in _read_kv_lines(path):
        match = _PROFILE_KEY.fullmatch(key)
        if match:
            season = int(match.group(1))
            day_lo = int(match.group(2))
            day_hi = int(match.group(3)) if match.group(3) else day_lo
            if day_hi < day_lo:
                raise ConfigError(f"{path}: line {lineno}: weekday range {day_lo}-{day_hi} is reversed")
            if not value:
                raise ConfigError(f"{path}: line {lineno}: empty profile filename")
            for day in range(day_lo, day_hi + 1):
                if (day, season) in slot_files:
                    raise ConfigError(
                        f"{path}: line {lineno}: duplicate assignment for "
                        f"season {season} weekday {day}"
                    )
                slot_files[(day, season)] = value
            continue
        if key not in _SCALAR_KEYS:
            raise ConfigError(f"{path}: line {lineno}: unknown key '{key}'")
        if key in raw:
            raise ConfigError(f"{path}: line {lineno}: duplicate key '{key}'")
        raw[key] = value

    missing = [
        (s, d) for s in range(1, 5) for d in range(1, 8) if (d, s) not in slot_files
    ]
    if missing:
        shown = ", ".join(f"season {s} weekday {d}" for s, d in missing[:4])
        more = "" if len(missing) <= 4 else f" (+{len(missing) - 4} more)"
        raise ConfigError(f"{path}: missing profile assignment(s): {shown}{more}")

    def effective(key: str, default: str | None = None) -> str | None:
        if key in overrides and overrides[key] is not None:
            return str(overrides[key])
        return raw.get(key, default)

    year_text = effective("year")
    if year_text is None:
        raise ConfigError(f"{path}: required key 'year' missing")
    year = _parse_year(year_text)
    dt = parse_dt(effective("dt", "0.25"))
    window = _parse_window(effective("window", "168"), dt)
    morphing = _parse_morphing(effective("morphing", "on"))
    season_starts = _parse_season_starts(
        effective("season_starts", "12-01,03-01,06-01,09-01")
    )
    units = effective("units", "kWh")

    def resolve(key: str, required: bool = False) -> Path | None:
        if key in overrides and overrides[key] is not None:
            return Path(str(overrides[key]))
        value = raw.get(key)
        if value is None:
            if required:
                raise ConfigError(f"{path}: required key '{key}' missing")
            return None
        return base / value

    months_path = resolve("months", required=True)
    profiles_dir = resolve("profiles_dir", required=True)
    out_path = resolve("out")
    report_path = resolve("report")
    plot_path = resolve("plot_data")

    echo = [
        ("year", str(year)),
        ("dt", _dt_text(dt)),
        ("window", format(window, "g")),
        ("morphing", "on" if morphing else "off"),
        ("season_starts", ",".join(f"{m:02d}-{d:02d}" for m, d in season_starts)),
        ("units", units),
        ("months", str(months_path)),
        ("profiles_dir", str(profiles_dir)),
        ("out", str(out_path) if out_path else ""),
        ("report", str(report_path) if report_path else ""),
        ("plot_data", str(plot_path) if plot_path else ""),
    ]
    for (day, season) in sorted(slot_files, key=lambda ds: (ds[1], ds[0])):
        echo.append((f"profile.{season}.{day}", slot_files[(day, season)]))

    return RunConfig(
        year=year,
        dt=dt,
        window_h=window,
        morphing=morphing,
        season_starts=season_starts,
        units=units,
        months_path=months_path,
        profiles_dir=profiles_dir,
        out_path=out_path,
        report_path=report_path,
        plot_path=plot_path,
        profile_map=slot_files,
        echo=tuple(echo),
    )


def _dt_text(dt: float) -> str:
    if dt == 1.0 / 6.0:
        return "1/6"
    if dt == 1.0 / 12.0:
        return "1/12"
    return format(dt, "g")


def season_name(season: int) -> str:
    return _SEASON_NAMES[season]

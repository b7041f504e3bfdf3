"""End-to-end orchestration: config in, synthesized series + report out."""

from __future__ import annotations

from pathlib import Path

from .calendars import make_season_calendar, make_year_context
from .composition import (
    SynthesizedSeries,
    compute_scaling,
    envelope_rate_grid,
    synthesize,
    verify_intervals,
)
from .config import RunConfig
from .errors import ConfigError
from .formats import load_monthly_csv, load_profile_csv, write_plot_data, write_series_csv
from .harmonics import fit_harmonics
from .morphing import ProfileLibrary, build_raw_year
from .report import VerificationReport, build_report, write_report


def load_profile_library(cfg: RunConfig) -> ProfileLibrary:
    """Load the 28 slot assignments; files named more than once are shared."""
    cache: dict[Path, object] = {}
    profiles = {}
    for slot, filename in cfg.profile_map.items():
        path = cfg.profiles_dir / filename
        if path not in cache:
            cache[path] = load_profile_csv(path, cfg.dt)
        profiles[slot] = cache[path]
    return ProfileLibrary(dt=cfg.dt, profiles=profiles)


def month_intervals(ctx) -> list[tuple[float, float]]:
    bounds = ctx.month_boundaries
    return [(float(bounds[i]), float(bounds[i + 1])) for i in range(12)]


def run_pipeline(cfg: RunConfig) -> tuple[SynthesizedSeries, VerificationReport]:
    """Run fit -> raw year -> scaling -> synthesis -> checks, write outputs."""
    ctx = make_year_context(cfg.year)
    if 2 * cfg.window_h > ctx.hours_in_year:
        raise ConfigError(
            f"window {cfg.window_h} h is longer than half of year {cfg.year}"
        )
    cal = make_season_calendar(ctx, cfg.season_starts)
    monthly = load_monthly_csv(cfg.months_path)
    library = load_profile_library(cfg)

    harmonic = fit_harmonics(monthly)
    raw = build_raw_year(library, cal, ctx, morph=cfg.morphing)
    scaling = compute_scaling(harmonic, ctx, raw, cfg.window_h)
    synthesized = synthesize(scaling, raw)

    checks = verify_intervals(synthesized, harmonic, ctx, month_intervals(ctx))
    year_check = verify_intervals(
        synthesized, harmonic, ctx, [(0.0, float(ctx.hours_in_year))]
    )[0]
    report = build_report(cfg, monthly, harmonic, scaling, checks, year_check)

    if cfg.out_path is not None:
        write_series_csv(synthesized, cfg.out_path)
    if cfg.report_path is not None:
        write_report(report, cfg.report_path)
    if cfg.plot_path is not None:
        envelope = envelope_rate_grid(harmonic, ctx, synthesized.times())
        write_plot_data(synthesized, envelope, cfg.plot_path)
    return synthesized, report

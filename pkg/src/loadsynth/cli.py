"""Command-line interface.

`loadsynth synth` runs the full synthesis pipeline from a config file
(flags override config values); `loadsynth verify` re-checks an existing
series against monthly totals. Errors exit with stable codes: 2 config,
3 input data, 4 numeric degeneracy, 5 output I/O; `verify` exits 1 when
the integral tolerances are exceeded.
"""

from __future__ import annotations

import argparse
import sys

from .calendars import make_year_context
from .composition import SynthesizedSeries, verify_intervals
from .config import load_config
from .errors import InputDataError, LoadSynthError
from .formats import load_monthly_csv, read_series_csv
from .harmonics import fit_harmonics
from .morphing import _samples_per_day
from .pipeline import month_intervals, run_pipeline
from .report import MONTHLY_TOLERANCE, YEARLY_TOLERANCE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="loadsynth",
        description="Synthesize a fine-resolution year load series from monthly totals "
        "and reference day profiles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    synth = sub.add_parser("synth", help="run the synthesis pipeline")
    synth.add_argument("--config", required=True, help="run config file")
    synth.add_argument("--months", help="monthly totals CSV (overrides config)")
    synth.add_argument("--profiles", help="profile directory (overrides config)")
    synth.add_argument("--out", help="output series CSV (overrides config)")
    synth.add_argument("--report", help="verification report path (overrides config)")
    synth.add_argument("--plot-data", help="plot data CSV (overrides config)")
    synth.add_argument("--no-morph", action="store_true", help="disable seasonal blending")
    synth.add_argument("--year", type=int, help="calendar year (overrides config)")
    synth.add_argument("--dt", help="grid step in hours: 1, 0.5, 0.25, 1/6 or 1/12")
    synth.add_argument("--window", type=float, help="scaling half-window in hours")
    synth.set_defaults(func=_cmd_synth)

    verify = sub.add_parser("verify", help="re-check a series against monthly totals")
    verify.add_argument("--series", required=True, help="series CSV to verify")
    verify.add_argument("--months", required=True, help="monthly totals CSV")
    verify.add_argument("--config", required=True, help="run config file")
    verify.set_defaults(func=_cmd_verify)
    return parser


def _cmd_synth(args) -> int:
    overrides = {
        "months": args.months,
        "profiles_dir": args.profiles,
        "out": args.out,
        "report": args.report,
        "plot_data": args.plot_data,
        "year": args.year,
        "dt": args.dt,
        "window": args.window,
    }
    if args.no_morph:
        overrides["morphing"] = "off"
    overrides = {k: v for k, v in overrides.items() if v is not None}
    cfg = load_config(args.config, overrides)
    _, report = run_pipeline(cfg)
    for line in report.summary_lines():
        print(line)
    for label, target in (("series", cfg.out_path), ("report", cfg.report_path), ("plot data", cfg.plot_path)):
        if target is not None:
            print(f"wrote {label}: {target}")
    return 0


def _cmd_verify(args) -> int:
    cfg = load_config(args.config, {"months": args.months})
    monthly = load_monthly_csv(cfg.months_path)
    ctx = make_year_context(cfg.year)
    series = read_series_csv(args.series)
    if series.dt != cfg.dt:
        raise InputDataError(
            f"{args.series}: grid step {series.dt} h does not match config dt {cfg.dt} h"
        )
    expected_len = ctx.days_in_year * _samples_per_day(cfg.dt)
    if len(series.values) != expected_len:
        raise InputDataError(
            f"{args.series}: {len(series.values)} samples, expected {expected_len} for {cfg.year}"
        )
    synthesized = SynthesizedSeries(series.dt, series.values)
    harmonic = fit_harmonics(monthly)
    checks = verify_intervals(synthesized, harmonic, ctx, month_intervals(ctx))
    year_check = verify_intervals(
        synthesized, harmonic, ctx, [(0.0, float(ctx.hours_in_year))]
    )[0]
    for month, check in enumerate(checks, start=1):
        print(
            f"month {month:2d}: target {check.expected:.6g} achieved {check.actual:.6g} "
            f"rel_error {check.relative_error:.3e}"
        )
    print(
        f"year: target {year_check.expected:.6g} achieved {year_check.actual:.6g} "
        f"rel_error {year_check.relative_error:.3e}"
    )
    months_ok = all(c.relative_error < MONTHLY_TOLERANCE for c in checks)
    year_ok = year_check.relative_error < YEARLY_TOLERANCE
    print(f"monthly tolerance {MONTHLY_TOLERANCE:g}: {'PASS' if months_ok else 'FAIL'}")
    print(f"yearly tolerance {YEARLY_TOLERANCE:g}: {'PASS' if year_ok else 'FAIL'}")
    return 0 if months_ok and year_ok else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except LoadSynthError as exc:
        print(f"error {exc.code}: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())

"""Verification report: integral checks, scale statistics, diagnostics.

The report is plain text, built only from the run's inputs and results
(no timestamps, no environment), so identical runs render byte-identical
reports. The settings echo repeats every effective setting including the
28 profile assignments; nothing is hidden behind defaults.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .composition import IntervalCheck, ScalingSeries
from .config import RunConfig
from .errors import OutputError
from .harmonics import HarmonicSeries, MonthlyIntegrals, negative_intervals

#: Acceptance bounds for the integral-preservation checks.
MONTHLY_TOLERANCE = 0.02
YEARLY_TOLERANCE = 0.005


@dataclass(frozen=True)
class VerificationReport:
    settings: tuple[tuple[str, str], ...]
    units: str
    month_targets: tuple[float, ...]
    month_checks: tuple[IntervalCheck, ...]
    year_check: IntervalCheck
    scale_min: float
    scale_max: float
    scale_max_step: float  # max over the cyclic grid of |alpha_{i+1}/alpha_i - 1|
    envelope_negative: tuple[tuple[float, float], ...]

    @property
    def months_within_tolerance(self) -> bool:
        return all(c.relative_error < MONTHLY_TOLERANCE for c in self.month_checks)

    @property
    def year_within_tolerance(self) -> bool:
        return self.year_check.relative_error < YEARLY_TOLERANCE

    def render(self) -> str:
        lines = ["loadsynth verification report", "=" * 29, ""]
        lines += ["settings", "-" * 8]
        lines += [f"{key} = {value}" for key, value in self.settings]
        lines += ["", f"monthly integrals ({self.units})", "-" * 17]
        lines.append("month  target         achieved       rel_error")
        for month, (target, check) in enumerate(
            zip(self.month_targets, self.month_checks), start=1
        ):
            lines.append(
                f"{month:<6d} {_num(target):<14s} {_num(check.actual):<14s} "
                f"{check.relative_error:.3e}"
            )
        lines.append(
            f"year   {_num(sum(self.month_targets)):<14s} {_num(self.year_check.actual):<14s} "
            f"{self.year_check.relative_error:.3e}"
        )
        worst = max(c.relative_error for c in self.month_checks)
        lines.append(
            f"monthly max rel error {worst:.3e} vs tolerance {MONTHLY_TOLERANCE:g}: "
            f"{_verdict(self.months_within_tolerance)}"
        )
        lines.append(
            f"yearly rel error {self.year_check.relative_error:.3e} vs tolerance "
            f"{YEARLY_TOLERANCE:g}: {_verdict(self.year_within_tolerance)}"
        )
        lines += ["", "scale factors", "-" * 13]
        lines.append(f"min {_num(self.scale_min)}  max {_num(self.scale_max)}")
        lines.append(f"max step |ratio-1| {self.scale_max_step:.3e}")
        lines += ["", "envelope diagnostics", "-" * 20]
        if self.envelope_negative:
            spans = ", ".join(f"[{a:.4f}, {b:.4f}]" for a, b in self.envelope_negative)
            lines.append(f"negative on month-coordinate interval(s): {spans}")
        else:
            lines.append("negative intervals: none")
        lines.append("")
        return "\n".join(lines)

    def summary_lines(self) -> list[str]:
        """Short stdout summary for the CLI."""
        worst = max(c.relative_error for c in self.month_checks)
        return [
            f"monthly max rel error {worst:.3e} "
            f"({_verdict(self.months_within_tolerance)} vs {MONTHLY_TOLERANCE:g})",
            f"yearly rel error {self.year_check.relative_error:.3e} "
            f"({_verdict(self.year_within_tolerance)} vs {YEARLY_TOLERANCE:g})",
        ]


def _num(value: float) -> str:
    return format(float(value), "#.10g")


def _verdict(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


def scale_step_statistic(scaling: ScalingSeries) -> float:
    """Max |alpha_{i+1}/alpha_i - 1| over the cyclic grid."""
    values = scaling.values
    ratios = np.roll(values, -1) / values
    return float(np.abs(ratios - 1.0).max())


def build_report(
    cfg: RunConfig,
    monthly: MonthlyIntegrals,
    h: HarmonicSeries,
    scaling: ScalingSeries,
    month_checks: list[IntervalCheck],
    year_check: IntervalCheck,
) -> VerificationReport:
    return VerificationReport(
        settings=cfg.echo,
        units=cfg.units,
        month_targets=monthly.values,
        month_checks=tuple(month_checks),
        year_check=year_check,
        scale_min=float(scaling.values.min()),
        scale_max=float(scaling.values.max()),
        scale_max_step=scale_step_statistic(scaling),
        envelope_negative=tuple(negative_intervals(h)),
    )


def write_report(report: VerificationReport, path) -> None:
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", newline="") as fh:
            fh.write(report.render())
    except OSError as exc:
        raise OutputError(f"cannot write {path}: {exc}") from exc

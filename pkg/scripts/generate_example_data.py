#!/usr/bin/env python3
"""Regenerate the shipped example dataset under data/example/.

Twelve monthly totals for an apartment house (winter-heavy, summer dip)
plus six synthetic type-day shapes: two-peak curves (morning/evening)
with a weekday/weekend split and three seasonal variants; spring and
autumn share the transition shapes via the config's profile map. Fully
deterministic, so rerunning this script reproduces the files byte for
byte.
"""

import math
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent / "data" / "example"

DT = 0.25
SAMPLES = 96

MONTHLY_KWH = [1520, 1400, 1250, 1050, 880, 760, 720, 760, 900, 1100, 1320, 1480]

# base, (morning center, width, amplitude), (evening center, width, amplitude)
# Seasonal contrast kept moderate so the hard season-boundary jumps of a
# no-morph run still satisfy the monthly integral tolerance.
SHAPES = {
    "winter_weekday": (0.360, (7.25, 1.4, 0.500), (18.75, 2.2, 0.735)),
    "winter_weekend": (0.405, (9.00, 1.8, 0.460), (19.00, 2.4, 0.690)),
    "transition_weekday": (0.320, (7.25, 1.3, 0.450), (19.25, 2.0, 0.620)),
    "transition_weekend": (0.360, (9.25, 1.7, 0.420), (19.50, 2.1, 0.580)),
    "summer_weekday": (0.295, (7.00, 1.2, 0.415), (20.00, 1.9, 0.535)),
    "summer_weekend": (0.330, (9.50, 1.6, 0.390), (20.25, 2.0, 0.500)),
}

RUN_CONF = """\
# Example synthesis run: apartment-house monthly totals, synthetic type days.
year = 2023
dt = 0.25
window = 168
morphing = on
season_starts = 12-01,03-01,06-01,09-01
units = kWh
months = months.csv
profiles_dir = profiles

# Weekdays 1-5 (Mon-Fri) and weekend 6-7 per season; spring (2) and
# autumn (4) share the transition shapes.
profile.1.1-5 = winter_weekday.csv
profile.1.6-7 = winter_weekend.csv
profile.2.1-5 = transition_weekday.csv
profile.2.6-7 = transition_weekend.csv
profile.3.1-5 = summer_weekday.csv
profile.3.6-7 = summer_weekend.csv
profile.4.1-5 = transition_weekday.csv
profile.4.6-7 = transition_weekend.csv
"""


def fmt(value: float) -> str:
    return format(float(value), "#.10g")


def bump(t: float, center: float, width: float, amplitude: float) -> float:
    return amplitude * math.exp(-0.5 * ((t - center) / width) ** 2)


def main() -> None:
    profiles_dir = ROOT / "profiles"
    profiles_dir.mkdir(parents=True, exist_ok=True)

    with open(ROOT / "months.csv", "w", newline="") as fh:
        fh.write("month,value\n")
        for month, value in enumerate(MONTHLY_KWH, start=1):
            fh.write(f"{month},{fmt(value)}\n")

    for name, (base, morning, evening) in SHAPES.items():
        with open(profiles_dir / f"{name}.csv", "w", newline="") as fh:
            fh.write("time_h,value\n")
            for k in range(SAMPLES):
                t = k * DT
                value = base + bump(t, *morning) + bump(t, *evening)
                fh.write(f"{fmt(t)},{fmt(value)}\n")

    with open(ROOT / "run.conf", "w", newline="") as fh:
        fh.write(RUN_CONF)

    print(f"wrote example dataset under {ROOT}")


if __name__ == "__main__":
    main()

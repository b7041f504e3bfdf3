"""loadsynth: year-long fine-resolution load series from monthly totals.

Pipeline: fit a 12-periodic harmonic series to the monthly integrals
(month-interval integrals are reproduced exactly), string seasonally
blended reference day profiles into a raw year, then rescale the raw
series with week-window integral ratios so the result tracks the fitted
envelope's energy over arbitrary intervals while keeping intraday shape.
"""

from .calendars import (
    DEFAULT_SEASON_STARTS,
    MonthCoordinate,
    SeasonCalendar,
    SeasonPosition,
    YearContext,
    make_season_calendar,
    make_year_context,
    month_coordinate,
    month_of,
    season_of,
    season_position,
    weekday_of,
)
from .composition import (
    IntervalCheck,
    ScalingSeries,
    SynthesizedSeries,
    compute_scaling,
    envelope_rate,
    envelope_rate_grid,
    synthesize,
    verify_intervals,
    window_envelope_integral,
    window_series_integral,
)
from .config import RunConfig, load_config, parse_dt
from .errors import (
    ConfigError,
    DegenerateWindowError,
    InputDataError,
    LoadSynthError,
    OutputError,
)
from .formats import (
    ALLOWED_DT,
    load_monthly_csv,
    load_profile_csv,
    read_series_csv,
    write_plot_data,
    write_series_csv,
)
from .harmonics import (
    HarmonicSeries,
    MonthlyIntegrals,
    eval_harmonics,
    fit_harmonics,
    integrate_harmonics,
    month_integral_residuals,
    negative_intervals,
)
from .morphing import DayProfile, ProfileLibrary, YearSeries, build_raw_year, morph_day
from .pipeline import load_profile_library, month_intervals, run_pipeline
from .report import (
    MONTHLY_TOLERANCE,
    YEARLY_TOLERANCE,
    VerificationReport,
    build_report,
    scale_step_statistic,
    write_report,
)

__version__ = "0.1.0"

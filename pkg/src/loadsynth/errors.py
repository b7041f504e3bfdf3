"""Error hierarchy with CLI exit codes.

Every user-facing failure maps to a stable machine-readable code and a
process exit status; library-level contract violations (bad arguments to
pure functions) raise plain ValueError instead.
"""


class LoadSynthError(Exception):
    """Base for all reportable pipeline failures."""

    code = "ERROR"
    exit_code = 1


class ConfigError(LoadSynthError):
    """Invalid or inconsistent run configuration."""

    code = "CONFIG"
    exit_code = 2


class InputDataError(LoadSynthError):
    """Malformed or missing input data file."""

    code = "INPUT"
    exit_code = 3


class DegenerateWindowError(LoadSynthError):
    """A scaling denominator window integrated to zero or below."""

    code = "DEGENERATE"
    exit_code = 4


class OutputError(LoadSynthError):
    """Failure while writing an output file."""

    code = "IO"
    exit_code = 5

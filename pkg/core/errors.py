from typing import Optional


class ToolkitError(Exception):
    """Base error for the toolkit: a stable `code` plus a human `detail`."""

    code = "toolkit_error"

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail

    def __str__(self) -> str:
        return f"[{self.code}] {self.detail}"


class DimensionMismatchError(ToolkitError):
    code = "dimension_mismatch"


class EmptyDatasetError(ToolkitError):
    code = "empty_dataset"


class NonFiniteError(ToolkitError):
    code = "non_finite"


class InvalidProfileError(ToolkitError):
    code = "invalid_profile"


class ScheduleRangeError(ToolkitError):
    code = "schedule_range"


class InsufficientUnitsError(ToolkitError):
    code = "insufficient_units"


class StructureError(ToolkitError):
    code = "structure"


class ConfigError(ToolkitError):
    code = "config"


class SynthSpecError(ToolkitError):
    code = "synth_spec"


class IngestError(ToolkitError):
    code = "ingest"

    def __init__(self, detail: str, line: Optional[int] = None):
        if line is not None:
            detail = f"line {line}: {detail}"
        super().__init__(detail)
        self.line = line


# Exit codes returned by the CLI, per error family
EXIT_UNEXPECTED = 1
EXIT_CONFIG = 2
EXIT_INGEST = 3
EXIT_TOOLKIT = 4


def exit_code_for(error: BaseException) -> int:
    if isinstance(error, (ConfigError, SynthSpecError)):
        return EXIT_CONFIG
    if isinstance(error, IngestError):
        return EXIT_INGEST
    if isinstance(error, ToolkitError):
        return EXIT_TOOLKIT
    return EXIT_UNEXPECTED

"""Command output formatters."""

from typing import IO, Optional

from obqp.constants import REPORTER_FORMATS
from obqp.reporters.base import BaseReporter
from obqp.reporters.console import ConsoleReporter
from obqp.reporters.json_reporter import JsonReporter, render_json


def get_reporter(
    format: str,
    verbose: bool = False,
    output: Optional[IO[str]] = None,
    indent: Optional[int] = 2,
) -> BaseReporter:
    """Get a reporter instance by format name."""
    if format not in REPORTER_FORMATS:
        available = ", ".join(REPORTER_FORMATS)
        raise ValueError(f"Unknown format: {format}. Available: {available}")

    if format == "console":
        return ConsoleReporter(verbose=verbose, output=output)
    return JsonReporter(output=output, indent=indent)


__all__ = [
    "BaseReporter",
    "ConsoleReporter",
    "JsonReporter",
    "REPORTER_FORMATS",
    "get_reporter",
    "render_json",
]

"""JSON reporter for machine-readable output."""

import json
import sys
from typing import IO, Any, Optional

from obqp.constants import JSON_SCHEMA_VERSION
from obqp.reporters.base import BaseReporter


def render_json(command: str, payload: dict[str, Any], indent: Optional[int] = 2) -> str:
    """Versioned, key-sorted JSON text; equal payloads give identical bytes."""
    data = {"schema": JSON_SCHEMA_VERSION, "command": command, **payload}
    return json.dumps(data, indent=indent, sort_keys=True, ensure_ascii=True)


class JsonReporter(BaseReporter):
    """JSON reporter for machine-readable output."""

    def __init__(self, output: Optional[IO[str]] = None, indent: Optional[int] = 2) -> None:
        self.output = output or sys.stdout
        self.indent = indent

    def report(self, command: str, payload: dict[str, Any]) -> None:
        self.output.write(render_json(command, payload, self.indent) + "\n")

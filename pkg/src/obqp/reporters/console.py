"""Console reporter using Rich."""

import json
import sys
from typing import IO, Any, Optional

from rich.console import Console
from rich.markup import escape
from rich.panel import Panel
from rich.table import Table

from obqp.reporters.base import BaseReporter


def _cell(value: Any) -> str:
    if value is None:
        return "[dim]-[/dim]"
    if isinstance(value, bool):
        return "[green]yes[/green]" if value else "[red]no[/red]"
    if isinstance(value, (dict, list)):
        return escape(json.dumps(value, sort_keys=True))
    return escape(str(value))


class ConsoleReporter(BaseReporter):
    """Rich console reporter for human-readable output."""

    def __init__(self, verbose: bool = False, output: Optional[IO[str]] = None) -> None:
        self.verbose = verbose
        self.console = Console(file=output or sys.stdout)

    def _table(self, payload: dict[str, Any]) -> Table:
        table = Table(show_header=False, box=None, padding=(0, 2))
        table.add_column("Key", style="dim")
        table.add_column("Value")
        for key in sorted(payload):
            value = payload[key]
            if isinstance(value, list) and value and not self.verbose:
                table.add_row(key, f"{len(value)} item(s)")
            else:
                table.add_row(key, _cell(value))
        return table

    def report(self, command: str, payload: dict[str, Any]) -> None:
        self.console.print()
        self.console.print(Panel.fit(f"[bold]obqp {command}[/bold]", border_style="blue"))
        self.console.print(self._table(payload))

        certificate = payload.get("certificate")
        if isinstance(certificate, dict):
            self.console.print()
            self.console.print(f"[bold]Certificate ({certificate.get('level')}):[/bold]")
            for entry in certificate.get("entries", []):
                conj = entry.get("conjugator", "id")
                prefix = "" if conj == "id" else f"({conj}) "
                sign = "" if entry.get("sign", 1) > 0 else "^-1"
                letter = "H" if entry.get("type") == "half_twist" else "D"
                self.console.print(escape(f"  {prefix}{letter}[{entry.get('symbol')}]{sign}"))

        for violation in payload.get("violations") or []:
            level = escape(f"[{violation.get('level')}]")
            message = escape(str(violation.get("message")))
            self.console.print(f"  [yellow]⚠[/yellow] [dim]{level}[/dim] {message}")
        self.console.print()

    def report_error(self, command: str, error: dict[str, Any]) -> None:
        location = ""
        if error.get("line") is not None:
            location = f" (line {error['line']}"
            if error.get("column") is not None:
                location += f", column {error['column']}"
            location += ")"
        message = escape(str(error.get("message")))
        self.console.print(
            Panel.fit(
                f"[bold red]✗ {error.get('type')}{location}[/bold red]\n{message}",
                border_style="red",
            )
        )

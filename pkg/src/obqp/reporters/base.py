"""Base reporter class."""

from abc import ABC, abstractmethod
from typing import Any


class BaseReporter(ABC):
    """Base class for command output reporters."""

    @abstractmethod
    def report(self, command: str, payload: dict[str, Any]) -> None:
        """Output the result of a command."""
        pass

    def report_error(self, command: str, error: dict[str, Any]) -> None:
        self.report(command, {"error": error})

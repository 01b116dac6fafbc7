"""Tests for reporters."""

import io
import json
from typing import Any

import pytest

from obqp.models.open_book import PointedOpenBook
from obqp.quasipositivity.engine import classify
from obqp.reporters import ConsoleReporter, JsonReporter, get_reporter, render_json


@pytest.fixture
def classify_payload(trefoil_pob: PointedOpenBook) -> dict[str, Any]:
    """The classify payload of the trefoil word."""
    return {"target": "trefoil", "word": trefoil_pob.word.to_text(), **classify(trefoil_pob).to_dict()}


class TestJsonReporter:
    """Tests for JsonReporter."""

    def test_json_output(self, classify_payload: dict[str, Any]) -> None:
        output = io.StringIO()
        JsonReporter(output=output).report("classify", classify_payload)

        data = json.loads(output.getvalue())
        assert data["schema"] == 1
        assert data["command"] == "classify"
        assert data["word"] == "H[a] * H[a] * H[a]"

    def test_output_is_deterministic(self, classify_payload: dict[str, Any]) -> None:
        """Key order of the payload does not change the bytes written."""
        reordered = dict(reversed(list(classify_payload.items())))
        assert render_json("classify", classify_payload) == render_json("classify", reordered)

    def test_compact_output(self, classify_payload: dict[str, Any]) -> None:
        output = io.StringIO()
        JsonReporter(output=output, indent=None).report("classify", classify_payload)
        assert output.getvalue().count("\n") == 1

    def test_error_output(self) -> None:
        output = io.StringIO()
        JsonReporter(output=output).report_error("compile", {"type": "DiskCompileError", "message": "no"})

        data = json.loads(output.getvalue())
        assert data["error"] == {"type": "DiskCompileError", "message": "no"}


class TestConsoleReporter:
    """Tests for ConsoleReporter."""

    def test_report_output(self, classify_payload: dict[str, Any]) -> None:
        output = io.StringIO()
        ConsoleReporter(output=output).report("classify", classify_payload)

        text = output.getvalue()
        assert "obqp classify" in text
        assert "H[a] * H[a] * H[a]" in text
        assert "Certificate (stein)" in text

    def test_lists_collapse_unless_verbose(self, classify_payload: dict[str, Any]) -> None:
        quiet = io.StringIO()
        ConsoleReporter(output=quiet).report("classify", classify_payload)
        loud = io.StringIO()
        ConsoleReporter(verbose=True, output=loud).report("classify", classify_payload)

        assert "item(s)" in quiet.getvalue()
        assert "item(s)" not in loud.getvalue()

    def test_violations_listed(self, classify_payload: dict[str, Any]) -> None:
        output = io.StringIO()
        ConsoleReporter(output=output).report("classify", classify_payload)
        assert "[sqp]" in output.getvalue()

    def test_error_location(self) -> None:
        output = io.StringIO()
        error = {"type": "DocumentSyntaxError", "message": "Unclosed '['", "line": 2, "column": 11}
        ConsoleReporter(output=output).report_error("classify", error)

        text = output.getvalue()
        assert "line 2, column 11" in text
        assert "Unclosed '['" in text


class TestGetReporter:
    """Tests for get_reporter factory function."""

    def test_get_console_reporter(self) -> None:
        assert isinstance(get_reporter("console"), ConsoleReporter)

    def test_get_json_reporter(self) -> None:
        assert isinstance(get_reporter("json"), JsonReporter)

    def test_invalid_format(self) -> None:
        with pytest.raises(ValueError, match="Unknown format"):
            get_reporter("markdown")

    def test_reporter_options(self) -> None:
        output = io.StringIO()
        reporter = get_reporter("console", verbose=True, output=output)

        assert isinstance(reporter, ConsoleReporter)
        assert reporter.verbose is True

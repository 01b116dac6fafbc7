"""Tests for configuration loading."""

import tempfile
from pathlib import Path
from typing import Generator

import pytest

from obqp.config import load_config
from obqp.config.loader import (
    create_default_config_file,
    find_config_file,
    load_config_from_file,
)
from obqp.exceptions import ConfigLoadError
from obqp.models.config import ObqpConfig
from obqp.models.surface import HomologyQuotient

SAMPLE_CONFIG = """\
quotient: h1fminusp
point_push:
  positive_copy: right
  puncture_sign: -1
normalize:
  budget: 6
  max_states: 500
output:
  indent: 4
seed: 7
"""


@pytest.fixture
def sample_config_file() -> Generator[Path, None, None]:
    """Write a sample configuration to a temporary directory."""
    with tempfile.TemporaryDirectory() as tmpdir:
        path = Path(tmpdir) / "obqp.yml"
        path.write_text(SAMPLE_CONFIG)
        yield path


class TestFindConfigFile:
    """Tests for find_config_file."""

    def test_find_explicit_file(self, sample_config_file: Path) -> None:
        found = find_config_file(sample_config_file.parent, "obqp.yml")
        assert found == sample_config_file

    def test_find_default_filename(self) -> None:
        with tempfile.TemporaryDirectory() as tmpdir:
            config_path = Path(tmpdir) / "obqp.yml"
            config_path.write_text("seed: 1\n")

            assert find_config_file(tmpdir) == config_path

    def test_find_alternate_filename(self) -> None:
        with tempfile.TemporaryDirectory() as tmpdir:
            config_path = Path(tmpdir) / ".obqp.yaml"
            config_path.write_text("seed: 1\n")

            assert find_config_file(tmpdir) == config_path

    def test_search_walks_up(self) -> None:
        """A config in a parent directory is found from a nested one."""
        with tempfile.TemporaryDirectory() as tmpdir:
            config_path = Path(tmpdir) / "obqp.yml"
            config_path.write_text("seed: 1\n")
            nested = Path(tmpdir) / "a" / "b"
            nested.mkdir(parents=True)

            assert find_config_file(nested) == config_path


class TestLoadConfigFromFile:
    """Tests for load_config_from_file."""

    def test_load_valid_config(self, sample_config_file: Path) -> None:
        config = load_config_from_file(sample_config_file)

        assert config.quotient == HomologyQuotient.H1F_MINUS_P
        assert config.convention.positive_copy == "right"
        assert config.convention.puncture_sign == -1
        assert (config.budget, config.max_states) == (6, 500)
        assert config.max_fold_width == 2
        assert (config.indent, config.seed) == (4, 7)

    def test_load_nonexistent_file(self) -> None:
        with pytest.raises(ConfigLoadError, match="not found"):
            load_config_from_file("/nonexistent/obqp.yml")

    def test_load_invalid_yaml(self) -> None:
        with tempfile.TemporaryDirectory() as tmpdir:
            path = Path(tmpdir) / "obqp.yml"
            path.write_text("quotient: [unclosed\n")

            with pytest.raises(ConfigLoadError, match="Invalid YAML"):
                load_config_from_file(path)

    def test_load_empty_file(self) -> None:
        with tempfile.TemporaryDirectory() as tmpdir:
            path = Path(tmpdir) / "obqp.yml"
            path.write_text("")

            assert load_config_from_file(path) == ObqpConfig.default()

    def test_load_non_mapping(self) -> None:
        with tempfile.TemporaryDirectory() as tmpdir:
            path = Path(tmpdir) / "obqp.yml"
            path.write_text("- h1f\n")

            with pytest.raises(ConfigLoadError, match="dictionary"):
                load_config_from_file(path)

    def test_invalid_value(self) -> None:
        with tempfile.TemporaryDirectory() as tmpdir:
            path = Path(tmpdir) / "obqp.yml"
            path.write_text("normalize:\n  budget: many\n")

            with pytest.raises(ConfigLoadError, match="Invalid configuration value"):
                load_config_from_file(path)

    def test_invalid_push_convention(self) -> None:
        with tempfile.TemporaryDirectory() as tmpdir:
            path = Path(tmpdir) / "obqp.yml"
            path.write_text("point_push:\n  positive_copy: up\n")

            with pytest.raises(ConfigLoadError, match="Invalid configuration value"):
                load_config_from_file(path)


class TestLoadConfig:
    """Tests for load_config."""

    def test_load_with_explicit_path(self, sample_config_file: Path) -> None:
        assert load_config(sample_config_file).seed == 7

    def test_load_default_when_not_found(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.delenv("OBQP_SEED", raising=False)
        with tempfile.TemporaryDirectory() as tmpdir:
            assert load_config(start_path=tmpdir) == ObqpConfig.default()

    def test_seed_from_environment(
        self, sample_config_file: Path, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        """OBQP_SEED overrides the file and keeps every other value."""
        monkeypatch.setenv("OBQP_SEED", "11")
        config = load_config(sample_config_file)

        assert config.seed == 11
        assert config.budget == 6

    def test_bad_seed_from_environment(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("OBQP_SEED", "eleven")
        with tempfile.TemporaryDirectory() as tmpdir:
            with pytest.raises(ConfigLoadError, match="OBQP_SEED"):
                load_config(start_path=tmpdir)


class TestObqpConfig:
    """Tests for ObqpConfig."""

    def test_defaults(self) -> None:
        config = ObqpConfig.default()

        assert config.quotient == HomologyQuotient.H1F
        assert config.convention.positive_copy == "left"
        assert config.budget == 4

    def test_dict_round_trip(self) -> None:
        config = ObqpConfig(budget=9, seed=3)
        assert ObqpConfig.from_dict(config.to_dict()) == config

    def test_unknown_quotient(self) -> None:
        with pytest.raises(ValueError):
            ObqpConfig.from_dict({"quotient": "h2"})

    def test_bad_positive_copy(self) -> None:
        with pytest.raises(ValueError, match="positive_copy"):
            ObqpConfig.from_dict({"point_push": {"positive_copy": "up"}})

    def test_bad_puncture_sign(self) -> None:
        with pytest.raises(ValueError):
            ObqpConfig.from_dict({"point_push": {"puncture_sign": 2}})


class TestCreateDefaultConfigFile:
    """Tests for create_default_config_file."""

    def test_create_with_comments(self) -> None:
        with tempfile.TemporaryDirectory() as tmpdir:
            path = create_default_config_file(Path(tmpdir) / "obqp.yml")

            content = path.read_text()
            assert "# obqp configuration" in content
            assert load_config_from_file(path) == ObqpConfig.default()

    def test_create_without_comments(self) -> None:
        with tempfile.TemporaryDirectory() as tmpdir:
            path = create_default_config_file(Path(tmpdir) / "obqp.yml", include_comments=False)

            assert "#" not in path.read_text()
            assert load_config_from_file(path) == ObqpConfig.default()

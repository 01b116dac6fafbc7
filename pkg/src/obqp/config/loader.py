"""Configuration loader for obqp runs."""

import logging
import os
from pathlib import Path
from typing import Any, Optional, Union

import yaml

from obqp.constants import (
    ALTERNATE_CONFIG_FILENAMES,
    DEFAULT_CONFIG_FILENAME,
    SEED_ENV_VAR,
)
from obqp.exceptions import ConfigLoadError
from obqp.models.config import ObqpConfig

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]

DEFAULT_CONFIG_TEMPLATE = """# obqp configuration
# Settings shared by every obqp command. Command-line flags take precedence.

# Group in which the Stein test measures homological nontriviality:
# h1f (homology of the page) or h1fminusp (homology of the punctured page)
quotient: h1f

# How a point-push P[d,p] expands into a pair of Dehn twists
point_push:
  positive_copy: left   # left or right
  puncture_sign: 1      # sign of the puncture class in the right-hand copy

# Bounded search used by `obqp normalize`
normalize:
  budget: 4
  max_states: 20000
  max_fold_width: 2

output:
  indent: 2

# Fixes the exploration order of searches; results do not depend on it.
# The OBQP_SEED environment variable overrides this value.
seed: 0
"""


def _candidate_names(config_filename: Optional[str]) -> list[str]:
    names = [DEFAULT_CONFIG_FILENAME, *ALTERNATE_CONFIG_FILENAMES]
    if config_filename:
        names.insert(0, config_filename)
    return names


def find_config_file(
    start_path: Optional[PathLike] = None,
    config_filename: Optional[str] = None,
) -> Optional[Path]:
    """Nearest obqp config at or above ``start_path``; an explicit name is tried first."""
    start = Path(start_path) if start_path else Path.cwd()
    if config_filename and not start.is_dir() and Path(config_filename).is_file():
        return Path(config_filename)

    base = start if start.is_dir() else start.parent
    names = _candidate_names(config_filename)
    for directory in (base, *base.parents):
        hit = next((directory / name for name in names if (directory / name).is_file()), None)
        if hit is not None:
            logger.debug(f"Config file {hit} found from {base}")
            return hit
    return None


def _apply_env(config: ObqpConfig) -> ObqpConfig:
    raw = os.environ.get(SEED_ENV_VAR)
    if raw is None or raw == "":
        return config
    try:
        seed = int(raw)
    except ValueError as e:
        raise ConfigLoadError(f"{SEED_ENV_VAR} must be an integer, got {raw!r}") from e
    logger.debug(f"Seed {seed} taken from {SEED_ENV_VAR}")
    return ObqpConfig.from_dict({**config.to_dict(), "seed": seed})


def load_config_from_file(config_path: PathLike) -> ObqpConfig:
    """Read an ObqpConfig from YAML; an empty file means the defaults."""
    path = Path(config_path)
    if not path.is_file():
        raise ConfigLoadError(f"Configuration file not found: {path}")

    try:
        data = yaml.safe_load(path.read_text(encoding="utf-8"))
    except yaml.YAMLError as e:
        raise ConfigLoadError(f"Invalid YAML in {path}: {e}") from e
    except OSError as e:
        raise ConfigLoadError(f"Cannot read {path}: {e}") from e

    if data is None:
        return ObqpConfig.default()
    if not isinstance(data, dict):
        raise ConfigLoadError(f"{path} must hold a YAML dictionary, got {type(data).__name__}")
    try:
        return ObqpConfig.from_dict(data)
    except (TypeError, ValueError) as e:
        raise ConfigLoadError(f"Invalid configuration value in {path}: {e}") from e


def load_config(
    config_path: Optional[PathLike] = None,
    start_path: Optional[PathLike] = None,
) -> ObqpConfig:
    """Explicit file, else the nearest discovered one, else defaults; then OBQP_SEED."""
    path = Path(config_path) if config_path else find_config_file(start_path)
    if path is None:
        logger.debug("No obqp config found; using defaults")
        return _apply_env(ObqpConfig.default())
    logger.info(f"Configuration: {path}")
    return _apply_env(load_config_from_file(path))


def create_default_config_file(
    output_path: Optional[PathLike] = None,
    include_comments: bool = True,
) -> Path:
    """Write the default configuration, commented or as bare YAML."""
    path = Path(output_path) if output_path else Path.cwd() / DEFAULT_CONFIG_FILENAME
    if include_comments:
        content = DEFAULT_CONFIG_TEMPLATE
    else:
        defaults: dict[str, Any] = ObqpConfig.default().to_dict()
        content = yaml.safe_dump(defaults, default_flow_style=False, sort_keys=False)

    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(content, encoding="utf-8")
    logger.info(f"Wrote default configuration to {path}")
    return path

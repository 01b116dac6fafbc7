"""Configuration loading and management."""

from obqp.config.loader import (
    create_default_config_file,
    find_config_file,
    load_config,
    load_config_from_file,
)
from obqp.constants import (
    ALTERNATE_CONFIG_FILENAMES,
    DEFAULT_CONFIG_FILENAME,
)
from obqp.exceptions import ConfigLoadError
from obqp.models.config import ObqpConfig

__all__ = [
    "ALTERNATE_CONFIG_FILENAMES",
    "ConfigLoadError",
    "DEFAULT_CONFIG_FILENAME",
    "ObqpConfig",
    "create_default_config_file",
    "find_config_file",
    "load_config",
    "load_config_from_file",
]

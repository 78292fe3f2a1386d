"""
Configuration Management - Persistent user settings with fallback defaults.

This module loads, saves and validates fusionkk's configuration. Settings
are stored as JSON at ~/.fusionkk/config/config.json.

Configuration layers:
    1. Bundled defaults: resources/config/config.json (shipped with the repo)
    2. User config: ~/.fusionkk/config/config.json (created on first use)
    3. Reset: --reset-config flag or FUSIONKK_DEV env var forces a reset
    4. Command line flags override individual values for one invocation

Settings managed:
    - boundMultiplier: "p/q" safety factor of the invariant entry bounds (default "1")
    - jobs: Worker processes for the invariant search (default 1)
    - precisionBits: Starting precision of certified evaluations (default 64)
    - logLevel: Logging level name for diagnostics on stderr (default "WARNING")
    - modelDirectory: Extra directory searched for <name>.json models (default none)

See also:
    - path_util.py: Resolves bundled and per-user paths
    - main.py: Builds one Config per invocation and applies flag overrides
"""

import json
import logging
import os
import shutil
import sys
from fractions import Fraction
from typing import Any, Dict, Optional, Sequence

from src.exact_arith.cyclotomic import MIN_PRECISION_BITS
from src.exact_arith.rational import format_rational, parse_rational
from src.util.errors import ConfigError
from src.util.path_util import get_config_path, get_packaged_path

logger = logging.getLogger(__name__)

BUNDLED_CONFIG_FILE = os.path.join("resources", "config", "config.json")

DEFAULT_BOUND_MULTIPLIER = "1"
DEFAULT_JOBS = 1
DEFAULT_PRECISION_BITS = 64
DEFAULT_LOG_LEVEL = "WARNING"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def should_use_bundled_config(argv: Optional[Sequence[str]] = None) -> bool:
    """
    Check if the user config should be discarded and reset to bundled defaults.

    Args:
        argv: Command line to inspect (default sys.argv)

    Returns:
        bool: True for --reset-config or a non-empty FUSIONKK_DEV
    """
    argv = sys.argv if argv is None else argv
    return "--reset-config" in argv or bool(os.environ.get("FUSIONKK_DEV"))


def _copy_bundled(config_path: str) -> None:
    shutil.copy(get_packaged_path(BUNDLED_CONFIG_FILE), config_path)


def load(argv: Optional[Sequence[str]] = None) -> Dict[str, Any]:
    """
    Load configuration from the user's config file, with fallback to bundled defaults.

    Loading priority:
        1. Reset requested: replace the user config with the bundled defaults
        2. User config exists and is valid JSON: use it
        3. User config missing or corrupt: copy the bundled defaults and use those

    Returns:
        dict: Raw settings as stored (camelCase keys)
    """
    config_path = get_config_path()

    if should_use_bundled_config(argv):
        if os.path.exists(config_path):
            os.remove(config_path)
        _copy_bundled(config_path)
        logger.info("reset config to bundled defaults: %s", config_path)
        with open(config_path, "r", encoding="utf-8") as f:
            return json.load(f)

    try:
        with open(config_path, "r", encoding="utf-8") as f:
            data = json.load(f)
        if isinstance(data, dict):
            return data
        logger.warning("config %s is not a JSON object; restoring defaults", config_path)
    except FileNotFoundError:
        logger.debug("no user config yet, copying defaults to %s", config_path)
    except json.JSONDecodeError:
        logger.warning("config %s is not valid JSON; restoring defaults", config_path)

    _copy_bundled(config_path)
    with open(config_path, "r", encoding="utf-8") as f:
        return json.load(f)


def _positive_int(value: Any, key: str, minimum: int = 1) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise ConfigError(f"'{key}' must be an integer ≥ {minimum}, got {value!r}")
    return value


def _bound_multiplier(value: Any) -> Fraction:
    try:
        multiplier = parse_rational(value)
    except ValueError as error:
        raise ConfigError(f"'boundMultiplier' must be a rational 'p/q': {error}") from error
    if multiplier <= 0:
        raise ConfigError(f"'boundMultiplier' must be positive, got {value!r}")
    return multiplier


def _log_level(value: Any) -> str:
    level = str(value).upper()
    if level not in LOG_LEVELS:
        raise ConfigError(f"'logLevel' must be one of {', '.join(LOG_LEVELS)}, got {value!r}")
    return level


class Config:
    """
    Configuration with persistence and validation.

    Attributes:
        bound_multiplier (Fraction): Safety factor m in Z_ij ≤ ceil(m·d_i·d_j)
        jobs (int): Worker processes for the invariant search
        precision_bits (int): Starting precision of certified evaluations
        log_level (str): Logging level name
        model_directory (str | None): Extra directory searched for model files

    Missing keys fall back to the module defaults so older config files keep
    working; present but invalid values raise ConfigError.
    """

    def __init__(self, argv: Optional[Sequence[str]] = None, data: Optional[Dict[str, Any]] = None) -> None:
        config = load(argv) if data is None else data
        self.bound_multiplier = _bound_multiplier(config.get("boundMultiplier", DEFAULT_BOUND_MULTIPLIER))
        self.jobs = _positive_int(config.get("jobs", DEFAULT_JOBS), "jobs")
        self.precision_bits = _positive_int(
            config.get("precisionBits", DEFAULT_PRECISION_BITS), "precisionBits", MIN_PRECISION_BITS
        )
        self.log_level = _log_level(config.get("logLevel", DEFAULT_LOG_LEVEL))
        directory = config.get("modelDirectory")
        if directory is not None and not isinstance(directory, str):
            raise ConfigError(f"'modelDirectory' must be a path string, got {directory!r}")
        self.model_directory = os.path.expanduser(directory) if directory else None

    def override(
        self,
        bound_multiplier: Optional[Any] = None,
        jobs: Optional[int] = None,
        log_level: Optional[str] = None,
    ) -> "Config":
        """Apply command line values on top of the stored ones (for this run only)."""
        if bound_multiplier is not None:
            self.bound_multiplier = _bound_multiplier(bound_multiplier)
        if jobs is not None:
            self.jobs = _positive_int(jobs, "jobs")
        if log_level is not None:
            self.log_level = _log_level(log_level)
        return self

    def to_data(self) -> Dict[str, Any]:
        data = {
            "boundMultiplier": format_rational(self.bound_multiplier),
            "jobs": self.jobs,
            "precisionBits": self.precision_bits,
            "logLevel": self.log_level,
        }
        if self.model_directory:
            data["modelDirectory"] = self.model_directory
        return data

    def save(self) -> None:
        """Persist the current settings to ~/.fusionkk/config/config.json (camelCase keys)."""
        config_path = get_config_path()
        logger.debug("saving config to %s", config_path)
        with open(config_path, "w", encoding="utf-8") as f:
            json.dump(self.to_data(), f, indent=2)

"""
Path Utilities - Resolve bundled resources and the per-user data directory.

Two kinds of paths are handled here:
1. Bundled resources (default config, catalog model files) that ship with
   the repository and may be unpacked into a temporary directory when the
   tool is frozen into a single executable (``sys._MEIPASS``).
2. The per-user directory ``~/.fusionkk/`` holding the user config.

See also:
    - config.py: Loads and saves settings through get_config_path()
    - resources/models/: Serialized builtin models found through get_models_dir()
"""

import os
import sys
from pathlib import Path

APP_DIR_NAME = ".fusionkk"
MODELS_DIR = os.path.join("resources", "models")


def get_packaged_path(path: str) -> str:
    """
    Resolve a path relative to the project root, or to the frozen bundle.

    Args:
        path: Relative path from project root (e.g., "resources/models/ising.json")

    Returns:
        str: Absolute path to the resource

    Example:
        Source checkout: get_packaged_path("resources/config/config.json")
                        -> /home/me/fusionkk/resources/config/config.json
    """
    try:
        wd = sys._MEIPASS
        return os.path.abspath(os.path.join(wd, path))
    except AttributeError:
        # This file is src/util/path_util.py; the project root is three levels up.
        base = Path(__file__).parent.parent.parent
        return os.path.join(base, path)


def get_app_dir() -> str:
    """Return ``~/.fusionkk``, creating it if needed."""
    app_dir = os.path.join(str(Path.home()), APP_DIR_NAME)
    os.makedirs(app_dir, exist_ok=True)
    return app_dir


def get_config_path() -> str:
    """
    Get path to the user's configuration file, creating the directory if needed.

    Returns:
        str: Absolute path to ``~/.fusionkk/config/config.json``
    """
    config_dir = os.path.join(get_app_dir(), "config")
    if not os.path.exists(config_dir):
        os.makedirs(config_dir)
    return os.path.join(config_dir, "config.json")


def get_models_dir() -> str:
    """Directory of the serialized builtin models shipped with the repository."""
    return get_packaged_path(MODELS_DIR)

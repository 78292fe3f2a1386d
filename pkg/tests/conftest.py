"""
Shared pytest fixtures for fusionkk.

Builtin models are cached by the catalog, so the model fixtures are cheap
after their first use. Config fixtures redirect every read and write of
~/.fusionkk into a temporary directory.

A test that takes a ``catalog_name`` argument runs once per builtin model
(ids like ``su2_7`` or ``z_5``); models with a large ambient order or rank
are marked slow.
"""

import json
import math
from pathlib import Path
from typing import Any, Dict

import pytest

from src.catalog.builtin import builtin, catalog
from src.catalog.model_file import Model


# =============================================================================
# Catalog Parametrization
# =============================================================================

LARGE_AMBIENT_ORDER = 48
LARGE_RANK = 5


def _catalog_param(name, k, n):
    if name == "su2":
        label, order, rank = f"su2_{k}", 8 * (k + 2), k + 1
    elif name == "z_n":
        label, order, rank = f"z_{n}", math.lcm(4 * n, 24), n
    else:
        return pytest.param(name, id=name)
    marks = [pytest.mark.slow] if order > LARGE_AMBIENT_ORDER or rank > LARGE_RANK else []
    return pytest.param(label, id=label, marks=marks)


def pytest_generate_tests(metafunc):
    if "catalog_name" in metafunc.fixturenames:
        metafunc.parametrize("catalog_name", [_catalog_param(*entry) for entry in catalog()])


# =============================================================================
# Model Fixtures
# =============================================================================

@pytest.fixture
def trivial_model() -> Model:
    return builtin("trivial")


@pytest.fixture
def ising_model() -> Model:
    return builtin("ising")


@pytest.fixture
def fibonacci_model() -> Model:
    return builtin("fibonacci")


@pytest.fixture
def su2_4_model() -> Model:
    return builtin("su2", k=4)


@pytest.fixture
def ising_document() -> Dict[str, Any]:
    """The bundled ising model file, decoded."""
    path = Path(__file__).parent.parent / "resources" / "models" / "ising.json"
    return json.loads(path.read_text(encoding="utf-8"))


@pytest.fixture
def write_model(tmp_path):
    """Write a model document to a temp file and return its path."""

    def _write(document: Any, name: str = "model.json") -> Path:
        target = tmp_path / name
        if isinstance(document, str):
            target.write_text(document, encoding="utf-8")
        else:
            target.write_text(json.dumps(document), encoding="utf-8")
        return target

    return _write


# =============================================================================
# Config Fixtures
# =============================================================================

@pytest.fixture
def valid_config_data() -> Dict[str, Any]:
    return {
        "boundMultiplier": "3/2",
        "jobs": 2,
        "precisionBits": 96,
        "logLevel": "info",
    }


@pytest.fixture
def mock_config_path(tmp_path, mocker) -> Path:
    """
    Redirect get_config_path() to a temp config file holding the defaults.

    Returns:
        Path to temp config.json file
    """
    config_dir = tmp_path / ".fusionkk" / "config"
    config_dir.mkdir(parents=True, exist_ok=True)
    config_file = config_dir / "config.json"
    config_file.write_text(json.dumps({"boundMultiplier": "1", "jobs": 1, "precisionBits": 64, "logLevel": "WARNING"}))

    mocker.patch("src.util.path_util.get_config_path", return_value=str(config_file))
    mocker.patch("src.config.config.get_config_path", return_value=str(config_file))
    return config_file


@pytest.fixture
def mock_packaged_path(tmp_path, mocker) -> Path:
    """
    Redirect get_packaged_path() to a temp resources tree with a bundled config.

    Returns:
        Path to the temp project root
    """
    resources_dir = tmp_path / "resources" / "config"
    resources_dir.mkdir(parents=True, exist_ok=True)
    bundled = {"boundMultiplier": "1", "jobs": 1, "precisionBits": 64, "logLevel": "WARNING"}
    (resources_dir / "config.json").write_text(json.dumps(bundled))

    def mock_path(path: str) -> str:
        return str(tmp_path / path)

    mocker.patch("src.util.path_util.get_packaged_path", side_effect=mock_path)
    mocker.patch("src.config.config.get_packaged_path", side_effect=mock_path)
    return tmp_path


@pytest.fixture
def isolated_config(mock_config_path, mock_packaged_path, monkeypatch) -> Path:
    """Both config redirects, with FUSIONKK_DEV cleared."""
    monkeypatch.delenv("FUSIONKK_DEV", raising=False)
    return mock_config_path

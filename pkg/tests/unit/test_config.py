"""
Unit tests for fusionkk configuration management.

Every test redirects ~/.fusionkk/config/config.json into a temp directory
(see the mock_config_path / mock_packaged_path fixtures).
"""

import json
from fractions import Fraction

import pytest

from src.config.config import (
    DEFAULT_BOUND_MULTIPLIER,
    DEFAULT_JOBS,
    DEFAULT_PRECISION_BITS,
    Config,
    load,
    should_use_bundled_config,
)
from src.util.errors import ConfigError


def test_default_values():
    assert DEFAULT_BOUND_MULTIPLIER == "1"
    assert DEFAULT_JOBS == 1
    assert DEFAULT_PRECISION_BITS == 64


def test_load_valid_config(isolated_config, valid_config_data):
    isolated_config.write_text(json.dumps(valid_config_data))

    config = Config()

    assert config.bound_multiplier == Fraction(3, 2)
    assert config.jobs == 2
    assert config.precision_bits == 96
    assert config.log_level == "INFO"
    assert config.model_directory is None


def test_missing_keys_fall_back_to_defaults(isolated_config):
    isolated_config.write_text(json.dumps({"jobs": 4}))

    config = Config()

    assert config.jobs == 4
    assert config.bound_multiplier == 1
    assert config.precision_bits == 64
    assert config.log_level == "WARNING"


@pytest.mark.parametrize("content", ["", "{this is not valid json}", "[1, 2]"])
def test_corrupt_config_restores_bundled_defaults(isolated_config, content):
    isolated_config.write_text(content)

    data = load()

    assert data == {"boundMultiplier": "1", "jobs": 1, "precisionBits": 64, "logLevel": "WARNING"}
    assert json.loads(isolated_config.read_text()) == data


def test_missing_config_is_created(isolated_config):
    isolated_config.unlink()

    config = Config()

    assert isolated_config.exists()
    assert config.jobs == 1


def test_reset_flag_discards_user_config(isolated_config):
    isolated_config.write_text(json.dumps({"jobs": 7}))

    config = Config(["invariants", "--reset-config"])

    assert config.jobs == 1
    assert json.loads(isolated_config.read_text())["jobs"] == 1


def test_dev_environment_variable_forces_reset(monkeypatch):
    monkeypatch.setenv("FUSIONKK_DEV", "1")
    assert should_use_bundled_config([])
    monkeypatch.delenv("FUSIONKK_DEV")
    assert not should_use_bundled_config(["verify"])


@pytest.mark.parametrize(
    "data",
    [
        {"jobs": 0},
        {"jobs": "two"},
        {"jobs": True},
        {"boundMultiplier": "0"},
        {"boundMultiplier": "1.5"},
        {"precisionBits": 8},
        {"logLevel": "LOUD"},
        {"modelDirectory": 5},
    ],
)
def test_invalid_values_raise(data):
    with pytest.raises(ConfigError):
        Config(data=data)


def test_override_applies_flag_values():
    config = Config(data={})

    config.override(bound_multiplier="2", jobs=3, log_level="debug")

    assert config.bound_multiplier == 2
    assert config.jobs == 3
    assert config.log_level == "DEBUG"
    with pytest.raises(ConfigError):
        config.override(jobs=-1)


def test_model_directory_expands_home(monkeypatch, tmp_path):
    monkeypatch.setenv("HOME", str(tmp_path))
    config = Config(data={"modelDirectory": "~/models"})
    assert config.model_directory == str(tmp_path / "models")


def test_config_round_trip(isolated_config):
    config = Config()
    config.override(bound_multiplier="5/2", jobs=6)
    config.save()

    saved = json.loads(isolated_config.read_text())
    assert saved["boundMultiplier"] == "5/2"

    reloaded = Config()
    assert reloaded.bound_multiplier == Fraction(5, 2)
    assert reloaded.jobs == 6

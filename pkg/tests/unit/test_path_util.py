"""
Unit tests for path_util: bundled resources versus the per-user directory.
"""

import os
import sys
from pathlib import Path

from src.util.path_util import get_app_dir, get_config_path, get_models_dir, get_packaged_path


class TestGetPackagedPath:
    def test_source_checkout_resolves_from_project_root(self, monkeypatch):
        monkeypatch.delattr(sys, "_MEIPASS", raising=False)

        result = get_packaged_path("resources/config/config.json")

        assert os.path.isfile(result)
        assert Path(result).parent.parent.parent == Path(__file__).parent.parent.parent

    def test_frozen_bundle_uses_meipass(self, monkeypatch, tmp_path):
        monkeypatch.setattr(sys, "_MEIPASS", str(tmp_path), raising=False)

        result = get_packaged_path("resources/models/ising.json")

        assert result == os.path.abspath(str(tmp_path / "resources" / "models" / "ising.json"))

    def test_models_dir_holds_the_bundled_models(self, monkeypatch):
        monkeypatch.delattr(sys, "_MEIPASS", raising=False)
        names = sorted(os.listdir(get_models_dir()))
        assert names == ["fibonacci.json", "ising.json", "trivial.json"]


class TestUserDirectory:
    def test_config_path_lives_under_home(self, monkeypatch, tmp_path):
        monkeypatch.setattr(Path, "home", classmethod(lambda cls: tmp_path))

        result = get_config_path()

        assert result == str(tmp_path / ".fusionkk" / "config" / "config.json")
        assert os.path.isdir(os.path.dirname(result))

    def test_app_dir_is_created(self, monkeypatch, tmp_path):
        monkeypatch.setattr(Path, "home", classmethod(lambda cls: tmp_path))
        assert get_app_dir() == str(tmp_path / ".fusionkk")
        assert (tmp_path / ".fusionkk").is_dir()

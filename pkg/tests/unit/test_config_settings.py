"""Unit tests for engine settings."""

import pytest
from pydantic import ValidationError

from config import APPLY_ORDERS, Settings, get_settings


class TestSettings:
    """Test settings defaults and environment overrides."""

    def test_defaults(self):
        """Test the documented defaults."""
        settings = Settings(_env_file=None)
        assert settings.window_radius == 16
        assert settings.max_radius == 8
        assert settings.bs_depth == 8
        assert settings.kernel_conjugation_depth == 1
        assert settings.probe_workers == 4
        assert settings.apply_order == APPLY_ORDERS[0]

    def test_environment_override(self, monkeypatch):
        """Test that SHIFTFORGE_* variables are read."""
        monkeypatch.setenv("SHIFTFORGE_WINDOW_RADIUS", "5")
        monkeypatch.setenv("SHIFTFORGE_REPORT_DIR", "/tmp/reports")
        settings = Settings(_env_file=None)
        assert settings.window_radius == 5
        assert settings.report_dir == "/tmp/reports"

    def test_rejects_out_of_range(self, monkeypatch):
        """Test that bounds are enforced."""
        monkeypatch.setenv("SHIFTFORGE_MAX_RADIUS", "40")
        with pytest.raises(ValidationError):
            Settings(_env_file=None)

    def test_rejects_unknown_apply_order(self):
        """Test that only rightmost-first composition is accepted."""
        with pytest.raises(ValidationError):
            Settings(_env_file=None, apply_order="leftmost-first")

    def test_log_format(self, monkeypatch):
        """Test that the format is normalised and drives json_logs."""
        assert Settings(_env_file=None).json_logs is False
        monkeypatch.setenv("SHIFTFORGE_LOG_FORMAT", "JSON")
        assert Settings(_env_file=None).json_logs is True

    def test_rejects_unknown_log_settings(self):
        """Test unknown formats and level names."""
        with pytest.raises(ValidationError):
            Settings(_env_file=None, log_format="xml")
        with pytest.raises(ValidationError):
            Settings(_env_file=None, log_level="chatty")
        assert Settings(_env_file=None, log_level="debug").log_level == "DEBUG"

    def test_get_settings_is_cached(self):
        """Test that the getter returns one instance until the cache is cleared."""
        assert get_settings() is get_settings()

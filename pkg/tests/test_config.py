"""
Tests for the settings module.
"""

from src.config import settings


class TestValidateConfig:
    def test_defaults_are_valid(self):
        """The shipped defaults pass validation."""
        assert settings.validate_config() == []

    def test_default_values(self):
        """Defaults match the documented bounds."""
        assert settings.TRUNCATION_BOUND >= settings.STABILITY_BOUND
        assert settings.EXAMPLE_PRIME == 2
        assert settings.REPORT_SCHEMA_VERSION == 1

    def test_non_positive_bound(self, monkeypatch):
        """Bounds and sample sizes must be positive."""
        monkeypatch.setattr(settings, "BRUTE_FORCE_ORDER_BOUND", 0)
        monkeypatch.setattr(settings, "HEART_SAMPLE_SIZE", -1)
        problems = settings.validate_config()
        assert "BRUTE_FORCE_ORDER_BOUND must be positive, got 0" in problems
        assert "HEART_SAMPLE_SIZE must be positive, got -1" in problems

    def test_negative_truncation(self, monkeypatch):
        """Truncation bounds may be zero but not negative."""
        monkeypatch.setattr(settings, "TRUNCATION_BOUND", 0)
        assert settings.validate_config() == []
        monkeypatch.setattr(settings, "STABILITY_BOUND", -1)
        assert settings.validate_config() == ["Truncation bounds must be non-negative"]

    def test_example_prime(self, monkeypatch):
        """EXAMPLE_PRIME must be prime."""
        monkeypatch.setattr(settings, "EXAMPLE_PRIME", 9)
        assert settings.validate_config() == ["EXAMPLE_PRIME must be prime, got 9"]

    def test_log_format(self, monkeypatch):
        """Only console and json log formats exist."""
        monkeypatch.setattr(settings, "LOG_FORMAT", "JSON")
        assert settings.validate_config() == []
        monkeypatch.setattr(settings, "LOG_FORMAT", "xml")
        assert len(settings.validate_config()) == 1

    def test_unparsable_integer(self, monkeypatch):
        """A non-integer value falls back to the default and is reported."""
        monkeypatch.setattr(settings, "_UNPARSED", [])
        monkeypatch.setenv("DEFAULT_SEED", "seventeen")
        assert settings._int_setting("DEFAULT_SEED", 1729) == 1729
        assert settings.validate_config() == ["DEFAULT_SEED must be an integer, got 'seventeen'"]

    def test_integer_from_environment(self, monkeypatch):
        """Integer values are read from the environment."""
        monkeypatch.setenv("DEFAULT_SEED", "17")
        assert settings._int_setting("DEFAULT_SEED", 1729) == 17
        monkeypatch.delenv("DEFAULT_SEED")
        assert settings._int_setting("DEFAULT_SEED", 1729) == 1729

import pytest

from beatstego.config import available_profiles, load_settings, reset_settings
from beatstego.services.detection import DetectionConfig


def test_defaults_loaded():
    settings = load_settings()
    assert settings.profile == "defaults"
    assert settings.get("embedding", "delta") == 1.0
    assert settings.get("tracking", "hop") == 512
    assert settings.get("audio", "supported_rates") == [44100, 48000]
    assert settings.get("missing", "key", default="x") == "x"


def test_singleton_until_reset():
    first = load_settings()
    assert load_settings() is first
    reset_settings()
    assert load_settings() is not first


def test_profiles_available():
    assert available_profiles() == ["dj", "studio"]


def test_dj_profile_overrides_and_inherits():
    settings = load_settings("dj")
    assert settings.profile == "dj"
    assert settings.get("embedding", "phi") == 3
    assert settings.get("embedding", "delta") == 2
    assert settings.get("tsm", "max_factor") == 1.08
    assert settings.get("tsm", "half_width") == 32


def test_unknown_profile():
    with pytest.raises(ValueError):
        load_settings("club")


def test_env_overrides(monkeypatch):
    monkeypatch.setenv("BEATSTEGO__TRACKING__HOP", "256")
    monkeypatch.setenv("BEATSTEGO__EXTRACTION__STRICT", "false")
    monkeypatch.setenv("BEATSTEGO__LOGGING__LEVEL", "DEBUG")
    reset_settings()
    settings = load_settings()
    assert settings.get("tracking", "hop") == 256
    assert settings.get("extraction", "strict") is False
    assert settings.get("logging", "level") == "DEBUG"


def test_env_profile_selection(monkeypatch):
    monkeypatch.setenv("BEATSTEGO__PROFILE", "studio")
    reset_settings()
    settings = load_settings()
    assert settings.profile == "studio"
    assert "profile" not in settings.dump()


def test_replace_is_non_destructive():
    settings = load_settings()
    changed = settings.replace(embedding={"workers": 4})
    assert changed.get("embedding", "workers") == 4
    assert changed.get("embedding", "delta") == 1.0
    assert settings.get("embedding", "workers") == 1


def test_detection_config_from_settings(monkeypatch):
    monkeypatch.setenv("BEATSTEGO__DETECTION__STEGO_THRESHOLD", "0.7")
    reset_settings()
    config = DetectionConfig.from_settings(load_settings())
    assert config.stego_threshold == 0.7
    assert config.min_beats == 16

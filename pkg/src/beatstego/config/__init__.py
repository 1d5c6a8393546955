"""Configuration package for beatstego."""

from .settings import Settings, available_profiles, load_settings, reset_settings

__all__ = ["Settings", "load_settings", "reset_settings", "available_profiles"]

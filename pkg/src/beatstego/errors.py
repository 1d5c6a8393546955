"""Shared error base for beatstego."""

from __future__ import annotations


class BeatStegoError(Exception):
    """Base class for every domain error; ``name`` is what the CLI reports."""

    @property
    def name(self) -> str:
        return type(self).__name__


__all__ = ["BeatStegoError"]

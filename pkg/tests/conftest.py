import os

import pytest

from beatstego.config import load_settings, reset_settings
from beatstego.services.audio import synth_click_track


@pytest.fixture(autouse=True)
def beatstego_env(monkeypatch):
    for name in [n for n in os.environ if n.startswith("BEATSTEGO__")]:
        monkeypatch.delenv(name)
    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def settings():
    return load_settings()


@pytest.fixture
def click_cover(settings):
    def make(tempo_bpm=120.0, beats=40, sample_rate=44100):
        return synth_click_track(tempo_bpm, beats, sample_rate, settings=settings)

    return make

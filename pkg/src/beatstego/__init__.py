"""Hide, recover and detect text messages carried in the tempo of constant-bpm audio."""

__version__ = "0.1.0"

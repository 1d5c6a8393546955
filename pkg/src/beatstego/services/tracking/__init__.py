"""Beat tracking services: spectral flux, onset picking and beat grids."""

from .grid import (
    BeatGrid,
    TooFewBeats,
    TooFewOnsets,
    UnstableTempo,
    build_beat_grid,
    estimate_reference_tempo,
)
from .onset import AudioTooShort, OnsetFunction, pick_onsets, refine_onsets, spectral_flux
from .service import BeatTracking, TrackerService, track_beats

__all__ = [
    "OnsetFunction",
    "BeatGrid",
    "BeatTracking",
    "TrackerService",
    "spectral_flux",
    "pick_onsets",
    "refine_onsets",
    "build_beat_grid",
    "estimate_reference_tempo",
    "track_beats",
    "AudioTooShort",
    "TooFewOnsets",
    "TooFewBeats",
    "UnstableTempo",
]

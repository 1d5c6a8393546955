"""Extraction services: demodulate tempo units back into a message."""

from .demodulator import (
    TRACK_COLUMNS,
    NoMessage,
    TempoTrack,
    TrackedUnit,
    build_track,
    classify,
    classify_tempo,
    message_stream,
    unit_tempi,
)
from .repositories import UNIT_TEMPO_COLUMNS, TempoTrackRepository, unit_tempi_frame
from .service import ExtractionResult, ExtractService, extract

__all__ = [
    "TempoTrack",
    "TrackedUnit",
    "NoMessage",
    "ExtractService",
    "ExtractionResult",
    "TempoTrackRepository",
    "TRACK_COLUMNS",
    "UNIT_TEMPO_COLUMNS",
    "unit_tempi",
    "unit_tempi_frame",
    "classify",
    "classify_tempo",
    "build_track",
    "message_stream",
    "extract",
]

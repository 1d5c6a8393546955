"""Extraction service: tracker -> unit tempi -> symbols -> message."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from beatstego.config import Settings, load_settings
from beatstego.services.audio import AudioBuffer, InvalidParams
from beatstego.services.codec import DEFAULT_TABLE, CodeTable, SymbolStream, decode_symbols
from beatstego.services.tracking import BeatGrid, TrackerService
from .demodulator import TempoTrack, build_track, classify, message_stream, unit_tempi

logger = logging.getLogger(__name__)


@dataclass
class ExtractionResult:
    message: str
    track: TempoTrack
    stream: SymbolStream
    reference_tempo: float
    reference_source: str
    grid: BeatGrid

    def __iter__(self):
        # Unpacks as (message, track).
        yield self.message
        yield self.track


class ExtractService:
    def __init__(
        self,
        settings: Optional[Settings] = None,
        table: Optional[CodeTable] = None,
        tracker: Optional[TrackerService] = None,
    ):
        self.settings = settings or load_settings()
        self.table = table or DEFAULT_TABLE
        self.tracker = tracker or TrackerService(self.settings)
        cfg = self.settings.section("extraction")
        self.terminator_run = int(cfg.get("terminator_run", 3))
        self.strict = bool(cfg.get("strict", True))

    def measure(self, audio: AudioBuffer, phi: int, delta: float, x_ref: Optional[float] = None):
        """Run the tracker and classify every complete unit; returns (track, x_ref, source, grid)."""
        if int(phi) != phi or phi < 1:
            raise InvalidParams(f"phi must be an integer >= 1, got {phi}")
        if not delta > 0:
            raise InvalidParams(f"delta must be positive, got {delta}")
        grid = self.tracker.track(audio, x_ref).grid
        if x_ref is not None:
            reference, source = float(x_ref), "explicit"
        else:
            reference, source = self.tracker.reference_tempo(grid), "estimated"
        measured = unit_tempi(grid, int(phi))
        symbols = classify([tempo for _, tempo in measured], reference, delta)
        return build_track(measured, symbols), reference, source, grid

    def extract(
        self,
        audio: AudioBuffer,
        phi: int,
        delta: float,
        x_ref: Optional[float] = None,
        *,
        strict: Optional[bool] = None,
    ) -> ExtractionResult:
        track, reference, source, grid = self.measure(audio, phi, delta, x_ref)
        stream = message_stream(track.symbols, self.terminator_run)
        message = decode_symbols(stream, self.table, strict=self.strict if strict is None else strict)
        logger.info(
            "Extracted %d characters from %d units (x_ref=%.3f bpm, %s)",
            len(message),
            len(track),
            reference,
            source,
        )
        return ExtractionResult(message, track, stream, reference, source, grid)


def extract(
    audio: AudioBuffer,
    phi: int,
    delta: float,
    x_ref: Optional[float] = None,
    table: Optional[CodeTable] = None,
    *,
    settings: Optional[Settings] = None,
) -> ExtractionResult:
    return ExtractService(settings=settings, table=table).extract(audio, phi, delta, x_ref)


__all__ = ["ExtractService", "ExtractionResult", "extract"]

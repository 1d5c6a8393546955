"""Tracker service: audio -> onset function -> onsets -> beat grid."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from beatstego.config import Settings, load_settings
from beatstego.services.audio import AudioBuffer
from .grid import BeatGrid, build_beat_grid, estimate_reference_tempo
from .onset import OnsetFunction, pick_onsets, refine_onsets, spectral_flux

logger = logging.getLogger(__name__)


@dataclass
class BeatTracking:
    onset_function: OnsetFunction
    onsets: np.ndarray
    grid: BeatGrid


class TrackerService:
    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or load_settings()
        cfg = self.settings.section("tracking")
        self.window = int(cfg.get("window", 2048))
        self.hop = int(cfg.get("hop", 512))
        self.peak_radius = int(cfg.get("peak_radius", 3))
        self.threshold_k = float(cfg.get("threshold_k", 1.5))
        self.threshold_window_s = float(cfg.get("threshold_window_s", 1.0))
        self.min_spacing_s = float(cfg.get("min_spacing_s", 0.05))
        self.min_peak_ratio = float(cfg.get("min_peak_ratio", 0.01))
        self.ioi_tolerance = float(cfg.get("ioi_tolerance", 0.3))
        self.max_discard_ratio = float(cfg.get("max_discard_ratio", 0.2))
        self.max_fill = int(cfg.get("max_fill", 4))
        self.refine = bool(cfg.get("refine", True))
        self.refine_ratio = float(cfg.get("refine_ratio", 0.3))
        self.refine_radius_hops = int(cfg.get("refine_radius_hops", 2))

    def onset_function(self, audio: AudioBuffer) -> OnsetFunction:
        return spectral_flux(audio, window=self.window, hop=self.hop)

    def onsets(self, audio: AudioBuffer, onset: Optional[OnsetFunction] = None) -> np.ndarray:
        onset = onset or self.onset_function(audio)
        times = pick_onsets(
            onset,
            peak_radius=self.peak_radius,
            threshold_k=self.threshold_k,
            threshold_window_s=self.threshold_window_s,
            min_spacing_s=self.min_spacing_s,
            min_peak_ratio=self.min_peak_ratio,
        )
        if self.refine and times.size:
            times = refine_onsets(audio, times, hop=self.hop, radius_hops=self.refine_radius_hops, ratio=self.refine_ratio)
        return times

    def track(self, audio: AudioBuffer, tempo_hint: Optional[float] = None) -> BeatTracking:
        onset = self.onset_function(audio)
        times = self.onsets(audio, onset)
        grid = build_beat_grid(
            times,
            tempo_hint,
            source_duration_s=audio.duration_s,
            ioi_tolerance=self.ioi_tolerance,
            max_discard_ratio=self.max_discard_ratio,
            max_fill=self.max_fill,
        )
        logger.debug("Tracked %d onsets -> %d beats over %.2f s", times.size, len(grid), audio.duration_s)
        return BeatTracking(onset_function=onset, onsets=times, grid=grid)

    def reference_tempo(self, grid: BeatGrid) -> float:
        tempo = estimate_reference_tempo(grid)
        logger.info("Estimated reference tempo %.3f bpm from %d beats", tempo, len(grid))
        return tempo


def track_beats(audio: AudioBuffer, tempo_hint: Optional[float] = None, *, settings: Optional[Settings] = None) -> BeatGrid:
    return TrackerService(settings).track(audio, tempo_hint).grid


__all__ = ["TrackerService", "BeatTracking", "track_beats"]

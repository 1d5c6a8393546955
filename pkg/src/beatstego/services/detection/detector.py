"""Blind detection of tempo modulation from the Phi=1 unit tempi of a track."""

from __future__ import annotations

import logging
import math
from typing import List, Optional, Sequence

import numpy as np

from beatstego.config import Settings, load_settings
from beatstego.services.audio import AudioBuffer
from beatstego.services.extraction import unit_tempi
from beatstego.services.tracking import TooFewBeats, TrackerService
from .schemas import DetectionConfig, DetectionReport, HistogramBin

logger = logging.getLogger(__name__)


def tempo_histogram(tempi: np.ndarray, bin_bpm: float) -> List[HistogramBin]:
    """Fixed-width bins aligned to multiples of ``bin_bpm``, covering min..max."""
    if tempi.size == 0:
        return []
    start = math.floor(float(tempi.min()) / bin_bpm) * bin_bpm
    count = int(math.floor((float(tempi.max()) - start) / bin_bpm)) + 1
    edges = start + bin_bpm * np.arange(count + 1)
    counts, _ = np.histogram(tempi, bins=edges)
    return [HistogramBin(bin_start=float(edge), count=int(n)) for edge, n in zip(edges[:-1], counts)]


def score_tempi(tempi: Sequence[float], config: Optional[DetectionConfig] = None) -> DetectionReport:
    """Deviation ratio around the median, blended with how tightly deviations cluster at one level."""
    config = config or DetectionConfig()
    values = np.asarray(tempi, dtype=np.float64)
    if values.size + 1 < config.min_beats:
        raise TooFewBeats(int(values.size) + 1, config.min_beats)

    median = float(np.median(values))
    deviations = np.abs(values - median)
    deviating = deviations[deviations > config.deviation_gate * median]
    ratio = deviating.size / values.size

    if deviating.size:
        estimated = float(np.median(deviating))
        bimodality = float(np.mean(np.abs(deviating - estimated) <= config.bimodality_tolerance * estimated))
    else:
        estimated = None
        bimodality = 0.0

    score = 0.5 * min(1.0, ratio / config.ratio_scale) + 0.5 * bimodality
    score = min(1.0, max(0.0, score))
    return DetectionReport(
        verdict=config.verdict_for(score),
        score=score,
        estimated_delta_bpm=estimated,
        deviation_ratio=ratio,
        bimodality=bimodality,
        median_tempo_bpm=median,
        units=int(values.size),
        unit_tempo_histogram=tempo_histogram(values, config.histogram_bin_bpm),
    )


class DetectorService:
    def __init__(
        self,
        settings: Optional[Settings] = None,
        config: Optional[DetectionConfig] = None,
        tracker: Optional[TrackerService] = None,
    ):
        self.settings = settings or load_settings()
        self.config = config or DetectionConfig.from_settings(self.settings)
        self.tracker = tracker or TrackerService(self.settings)

    def unit_tempi(self, audio: AudioBuffer, tempo_hint: Optional[float] = None) -> np.ndarray:
        grid = self.tracker.track(audio, tempo_hint).grid
        if len(grid) < self.config.min_beats:
            raise TooFewBeats(len(grid), self.config.min_beats)
        return np.array([tempo for _, tempo in unit_tempi(grid, 1)])

    def detect(self, audio: AudioBuffer, tempo_hint: Optional[float] = None) -> DetectionReport:
        report = score_tempi(self.unit_tempi(audio, tempo_hint), self.config)
        logger.info(
            "Detection verdict %s (score=%.3f, deviation_ratio=%.3f, units=%d)",
            report.verdict.value,
            report.score,
            report.deviation_ratio,
            report.units,
        )
        return report


def detect(
    audio: AudioBuffer,
    config: Optional[DetectionConfig] = None,
    *,
    settings: Optional[Settings] = None,
) -> DetectionReport:
    return DetectorService(settings=settings, config=config).detect(audio)


__all__ = ["DetectorService", "detect", "score_tempi", "tempo_histogram"]

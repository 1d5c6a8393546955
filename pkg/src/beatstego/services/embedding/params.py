"""Stego key parameters: reference tempo X, tempo offset delta and unit length phi."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from beatstego.config import Settings, load_settings
from beatstego.services.audio import InvalidParams
from beatstego.services.audio.synth import MAX_TEMPO_BPM, MIN_TEMPO_BPM

logger = logging.getLogger(__name__)

# Delta must stay below this fraction of X.
HARD_CAP_RATIO = 0.1

# Listening bands for delta / X: (upper bound inclusive, label).
AUDIBILITY_BANDS = (
    (0.01, "inaudible"),
    (0.02, "trained-ear"),
    (0.03, "noticeable"),
)


@dataclass(frozen=True)
class EmbedParams:
    reference_tempo_x: float
    delta: float
    phi: int = 1
    first_beat_offset: float = 0.0

    def __post_init__(self) -> None:
        x, delta = float(self.reference_tempo_x), float(self.delta)
        if not MIN_TEMPO_BPM <= x <= MAX_TEMPO_BPM:
            raise InvalidParams(f"reference tempo {x} bpm outside [{MIN_TEMPO_BPM:g}, {MAX_TEMPO_BPM:g}]")
        if not 0 < delta < x * HARD_CAP_RATIO:
            raise InvalidParams(f"delta {delta} bpm must be in (0, {x * HARD_CAP_RATIO:g}) for X={x:g}")
        if int(self.phi) != self.phi or self.phi < 1:
            raise InvalidParams(f"phi must be an integer >= 1, got {self.phi}")
        if not self.first_beat_offset >= 0:
            raise InvalidParams(f"first beat offset must be non-negative, got {self.first_beat_offset}")
        object.__setattr__(self, "reference_tempo_x", x)
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "phi", int(self.phi))
        object.__setattr__(self, "first_beat_offset", float(self.first_beat_offset))

    @classmethod
    def from_settings(
        cls,
        reference_tempo_x: float,
        *,
        delta: Optional[float] = None,
        phi: Optional[int] = None,
        first_beat_offset: Optional[float] = None,
        settings: Optional[Settings] = None,
    ) -> "EmbedParams":
        cfg = (settings or load_settings()).section("embedding")
        return cls(
            reference_tempo_x=reference_tempo_x,
            delta=delta if delta is not None else cfg.get("delta", 1.0),
            phi=phi if phi is not None else cfg.get("phi", 1),
            first_beat_offset=first_beat_offset if first_beat_offset is not None else cfg.get("first_beat_offset", 0.0),
        )

    @property
    def ratio(self) -> float:
        return self.delta / self.reference_tempo_x

    @property
    def beat_s(self) -> float:
        return 60.0 / self.reference_tempo_x

    @property
    def unit_s(self) -> float:
        return self.phi * self.beat_s

    def tempo_for(self, sign: int) -> float:
        return self.reference_tempo_x + sign * self.delta


def audibility_band(params: EmbedParams) -> str:
    for bound, label in AUDIBILITY_BANDS:
        if params.ratio <= bound:
            return label
    return "obvious"


def check_audibility(params: EmbedParams, *, settings: Optional[Settings] = None) -> bool:
    """Log a warning when delta/X exceeds the audible margin; return whether it did."""
    margin = float((settings or load_settings()).get("embedding", "audible_margin", default=0.01))
    if params.ratio > margin:
        logger.warning(
            "Tempo change %.3f%% (delta=%g bpm at X=%g bpm) exceeds the %.1f%% inaudibility margin; band=%s",
            params.ratio * 100,
            params.delta,
            params.reference_tempo_x,
            margin * 100,
            audibility_band(params),
        )
        return True
    return False


__all__ = ["EmbedParams", "audibility_band", "check_audibility", "HARD_CAP_RATIO", "AUDIBILITY_BANDS"]

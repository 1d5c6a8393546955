from __future__ import annotations

from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field, model_validator

from beatstego.config import Settings, load_settings


class Verdict(str, Enum):
    CLEAN = "CLEAN"
    STEGO = "STEGO"
    INCONCLUSIVE = "INCONCLUSIVE"


class DetectionConfig(BaseModel):
    min_beats: int = Field(16, ge=2)
    deviation_gate: float = Field(0.0025, gt=0)
    ratio_scale: float = Field(0.2, gt=0)
    bimodality_tolerance: float = Field(0.2, gt=0)
    stego_threshold: float = Field(0.6, ge=0, le=1)
    clean_threshold: float = Field(0.3, ge=0, le=1)
    histogram_bin_bpm: float = Field(0.25, gt=0)

    @model_validator(mode="after")
    def _ordered_thresholds(self) -> "DetectionConfig":
        if self.clean_threshold > self.stego_threshold:
            raise ValueError("clean_threshold must not exceed stego_threshold")
        return self

    @classmethod
    def from_settings(cls, settings: Optional[Settings] = None) -> "DetectionConfig":
        cfg = (settings or load_settings()).section("detection")
        return cls(**{name: cfg[name] for name in cls.model_fields if name in cfg})

    def verdict_for(self, score: float) -> Verdict:
        if score >= self.stego_threshold:
            return Verdict.STEGO
        if score <= self.clean_threshold:
            return Verdict.CLEAN
        return Verdict.INCONCLUSIVE


class HistogramBin(BaseModel):
    bin_start: float
    count: int = Field(ge=0)


class DetectionReport(BaseModel):
    verdict: Verdict
    score: float = Field(ge=0.0, le=1.0)
    estimated_delta_bpm: Optional[float] = None
    deviation_ratio: float = Field(ge=0.0, le=1.0)
    bimodality: float = Field(0.0, ge=0.0, le=1.0)
    median_tempo_bpm: float
    units: int = Field(ge=0)
    unit_tempo_histogram: List[HistogramBin] = Field(default_factory=list)


__all__ = ["Verdict", "DetectionConfig", "HistogramBin", "DetectionReport"]

"""Embedding services: plan per-unit tempi and write the steganogram."""

from .params import AUDIBILITY_BANDS, HARD_CAP_RATIO, EmbedParams, audibility_band, check_audibility
from .planner import Capacity, InsufficientCapacity, PlannedUnit, TempoPlan, capacity, plan
from .service import EmbedResult, EmbedService, embed

__all__ = [
    "EmbedParams",
    "TempoPlan",
    "PlannedUnit",
    "Capacity",
    "InsufficientCapacity",
    "EmbedService",
    "EmbedResult",
    "embed",
    "plan",
    "capacity",
    "audibility_band",
    "check_audibility",
    "HARD_CAP_RATIO",
    "AUDIBILITY_BANDS",
]

"""Per-unit tempo planning and capacity accounting."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Tuple

from beatstego.errors import BeatStegoError
from beatstego.services.codec import Symbol
from .params import EmbedParams

_EPS = 1e-9

_SIGN = {Symbol.PLUS: 1, Symbol.MINUS: -1, Symbol.ZERO: 0}


class InsufficientCapacity(BeatStegoError):
    def __init__(self, needed_units: int, available_units: int):
        self.needed_units = needed_units
        self.available_units = available_units
        super().__init__(f"message needs {needed_units} units but the cover holds {available_units}")


@dataclass(frozen=True)
class PlannedUnit:
    symbol: Symbol
    tempo_bpm: float
    source_start_s: float
    source_end_s: float


@dataclass(frozen=True)
class TempoPlan:
    params: EmbedParams
    units: Tuple[PlannedUnit, ...]

    def __len__(self) -> int:
        return len(self.units)

    def counts(self) -> dict:
        result = {symbol.name: 0 for symbol in Symbol}
        for unit in self.units:
            result[unit.symbol.name] += 1
        return result


@dataclass(frozen=True)
class Capacity:
    units: int
    estimated_chars: int


def unit_start_s(params: EmbedParams, index: int) -> float:
    # Written as beat index * beat period so boundaries land on the same samples as the beats.
    return params.first_beat_offset + (index * params.phi) * params.beat_s


def capacity(params: EmbedParams, cover_duration_s: float) -> Capacity:
    usable = cover_duration_s - params.first_beat_offset
    if usable <= 0:
        return Capacity(units=0, estimated_chars=0)
    units = int(math.floor(usable * params.reference_tempo_x / (60.0 * params.phi) + _EPS))
    return Capacity(units=units, estimated_chars=units // 5)


def plan(stream: Sequence[Symbol], params: EmbedParams, cover_duration_s: float) -> TempoPlan:
    needed = len(stream)
    available = capacity(params, cover_duration_s).units
    if needed > available:
        raise InsufficientCapacity(needed, available)
    units = tuple(
        PlannedUnit(
            symbol=symbol,
            tempo_bpm=params.tempo_for(_SIGN[symbol]),
            source_start_s=unit_start_s(params, k),
            source_end_s=unit_start_s(params, k + 1),
        )
        for k, symbol in enumerate(stream)
    )
    return TempoPlan(params=params, units=units)


__all__ = ["TempoPlan", "PlannedUnit", "Capacity", "InsufficientCapacity", "capacity", "plan", "unit_start_s"]

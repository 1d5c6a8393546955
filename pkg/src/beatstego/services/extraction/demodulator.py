"""Group beats into units, measure unit tempi and classify them into symbols."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np
import pandas as pd

from beatstego.errors import BeatStegoError
from beatstego.services.codec import Symbol, SymbolStream
from beatstego.services.tracking import BeatGrid, TooFewBeats

TRACK_COLUMNS = ["unit_index", "start_time_s", "tempo_bpm", "symbol"]


class NoMessage(BeatStegoError):
    def __init__(self, units: int):
        self.units = units
        super().__init__(f"no raised or lowered unit among {units} measured units")


@dataclass(frozen=True)
class TrackedUnit:
    index: int
    start_s: float
    tempo_bpm: float
    symbol: Symbol


@dataclass(frozen=True)
class TempoTrack:
    units: Tuple[TrackedUnit, ...]

    def __len__(self) -> int:
        return len(self.units)

    @property
    def symbols(self) -> SymbolStream:
        return tuple(unit.symbol for unit in self.units)

    @property
    def tempi(self) -> np.ndarray:
        return np.array([unit.tempo_bpm for unit in self.units])

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [(u.index, u.start_s, u.tempo_bpm, u.symbol.value) for u in self.units],
            columns=TRACK_COLUMNS,
        )


def unit_tempi(grid: BeatGrid, phi: int) -> List[Tuple[float, float]]:
    """(start_s, tempo_bpm) per complete group of ``phi`` beats, anchored at the first beat."""
    times = grid.beat_times_s
    if times.size < phi + 1:
        raise TooFewBeats(int(times.size), phi + 1)
    count = (times.size - 1) // phi
    starts = times[0:count * phi:phi]
    ends = times[phi:(count + 1) * phi:phi]
    tempi = 60.0 * phi / (ends - starts)
    return [(float(s), float(t)) for s, t in zip(starts, tempi)]


def classify_tempo(tempo_bpm: float, x_ref: float, delta: float) -> Symbol:
    half = delta / 2.0
    if tempo_bpm >= x_ref + half:
        return Symbol.PLUS
    if tempo_bpm <= x_ref - half:
        return Symbol.MINUS
    return Symbol.ZERO


def classify(tempi: Sequence[float], x_ref: float, delta: float) -> SymbolStream:
    """Dead zone of width delta centred on x_ref; the symbol at index i belongs to unit i."""
    if not delta > 0:
        raise ValueError(f"delta must be positive, got {delta}")
    return tuple(classify_tempo(float(t), x_ref, delta) for t in tempi)


def build_track(measured: Sequence[Tuple[float, float]], symbols: SymbolStream) -> TempoTrack:
    return TempoTrack(
        units=tuple(
            TrackedUnit(index=i, start_s=start, tempo_bpm=tempo, symbol=symbol)
            for i, ((start, tempo), symbol) in enumerate(zip(measured, symbols))
        )
    )


def message_stream(symbols: Sequence[Symbol], terminator_run: int = 3) -> SymbolStream:
    """Drop pre-message ZEROs and cut at the first run of ``terminator_run`` ZEROs."""
    start = 0
    while start < len(symbols) and symbols[start] is Symbol.ZERO:
        start += 1
    if start == len(symbols):
        raise NoMessage(len(symbols))
    run = 0
    for index in range(start, len(symbols)):
        run = run + 1 if symbols[index] is Symbol.ZERO else 0
        if run >= terminator_run:
            return tuple(symbols[start:index - run + 1])
    return tuple(symbols[start:])


__all__ = [
    "TempoTrack",
    "TrackedUnit",
    "NoMessage",
    "TRACK_COLUMNS",
    "unit_tempi",
    "classify",
    "classify_tempo",
    "build_track",
    "message_stream",
]

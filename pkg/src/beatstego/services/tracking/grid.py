"""Beat grid construction and reference tempo estimation."""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from beatstego.errors import BeatStegoError

logger = logging.getLogger(__name__)

_TIME_EPS = 1e-9


class TooFewOnsets(BeatStegoError):
    def __init__(self, found: int, needed: int = 4):
        self.found = found
        self.needed = needed
        super().__init__(f"found {found} onsets; at least {needed} are needed to build a beat grid")


class TooFewBeats(BeatStegoError):
    def __init__(self, found: int, needed: int):
        self.found = found
        self.needed = needed
        super().__init__(f"found {found} beats; at least {needed} are needed")


class UnstableTempo(BeatStegoError):
    def __init__(self, discarded_ratio: float, limit: float):
        self.discarded_ratio = discarded_ratio
        self.limit = limit
        super().__init__(f"{discarded_ratio:.1%} of inter-onset intervals discarded (limit {limit:.0%})")


@dataclass(frozen=True, eq=False)
class BeatGrid:
    beat_times_s: np.ndarray
    source_duration_s: float

    def __post_init__(self) -> None:
        times = np.asarray(self.beat_times_s, dtype=np.float64)
        if times.ndim != 1:
            raise ValueError("beat times must be one-dimensional")
        if times.size > 1 and not np.all(np.diff(times) > 0):
            raise ValueError("beat times must be strictly increasing")
        if times.size and (times[0] < -_TIME_EPS or times[-1] > self.source_duration_s + _TIME_EPS):
            raise ValueError("beat times must lie within the source duration")
        times = times.copy()
        times.setflags(write=False)
        object.__setattr__(self, "beat_times_s", times)

    def __len__(self) -> int:
        return int(self.beat_times_s.size)

    @property
    def intervals_s(self) -> np.ndarray:
        return np.diff(self.beat_times_s)


def _fits(gap: float, period: float, tolerance: float, max_fill: int) -> bool:
    steps = int(round(gap / period))
    return 1 <= steps <= max_fill and abs(gap - steps * period) <= tolerance * period


def _start_index(times: np.ndarray, base: float, tolerance: float, max_fill: int, lookahead: int) -> int:
    """First onset that the next two aligned onsets confirm; 0 when none in the lookahead does."""
    for start in range(min(lookahead, times.size - 2)):
        anchor = float(times[start])
        confirmed = 0
        for onset in times[start + 1:start + 1 + lookahead]:
            if _fits(float(onset) - anchor, base, tolerance, max_fill):
                anchor = float(onset)
                confirmed += 1
                if confirmed == 2:
                    return start
    return 0


def build_beat_grid(
    onsets: Sequence[float],
    expected_tempo_hint: Optional[float] = None,
    *,
    source_duration_s: Optional[float] = None,
    ioi_tolerance: float = 0.3,
    max_discard_ratio: float = 0.2,
    max_fill: int = 4,
    history: int = 8,
) -> BeatGrid:
    """Clean an onset list into a beat grid.

    Onsets closer than ``(1 - tol)`` intervals to the last beat are dropped;
    gaps of about ``k`` intervals (``k <= max_fill``) get ``k - 1`` evenly
    spaced beats interpolated. Leading onsets that no aligned pair follows are
    skipped before the grid starts.
    """
    times = np.sort(np.asarray(onsets, dtype=np.float64))
    if times.size < 4:
        raise TooFewOnsets(int(times.size))

    base = 60.0 / expected_tempo_hint if expected_tempo_hint else float(np.median(np.diff(times)))
    start = _start_index(times, base, ioi_tolerance, max_fill, history)
    recent = deque([base], maxlen=history)
    beats = [float(times[start])]
    discarded = start
    inserted = 0

    for onset in times[start + 1:]:
        expected = float(np.median(recent))
        gap = float(onset) - beats[-1]
        if _fits(gap, expected, ioi_tolerance, max_fill):
            steps = int(round(gap / expected))
            anchor = beats[-1]
            for i in range(1, steps):
                beats.append(anchor + gap * i / steps)
            inserted += steps - 1
            beats.append(float(onset))
            recent.append(gap / steps)
        else:
            discarded += 1

    ratio = discarded / (times.size - 1)
    if ratio > max_discard_ratio:
        raise UnstableTempo(ratio, max_discard_ratio)
    if discarded or inserted:
        logger.debug("Beat grid: %d onsets discarded, %d beats interpolated", discarded, inserted)

    duration = source_duration_s if source_duration_s is not None else beats[-1]
    return BeatGrid(np.asarray(beats), max(duration, beats[-1]))


def estimate_reference_tempo(grid: BeatGrid) -> float:
    """60 / median inter-beat interval; robust to a modulated minority of units."""
    if len(grid) < 4:
        raise TooFewBeats(len(grid), 4)
    return 60.0 / float(np.median(grid.intervals_s))


__all__ = [
    "BeatGrid",
    "TooFewOnsets",
    "TooFewBeats",
    "UnstableTempo",
    "build_beat_grid",
    "estimate_reference_tempo",
]

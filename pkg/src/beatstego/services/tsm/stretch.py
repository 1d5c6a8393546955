"""Time-scale modification by band-limited (Kaiser-windowed sinc) resampling.

Playing a segment ``factor`` times faster shortens it to
``round(length / factor)`` samples and shifts its pitch by the same factor.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING, Optional, Union

import numpy as np

from beatstego.config import Settings, load_settings
from beatstego.errors import BeatStegoError
from beatstego.services.audio import AudioBuffer, InvalidParams, round_half_up
from beatstego.services.codec import Symbol

if TYPE_CHECKING:  # pragma: no cover
    from beatstego.services.embedding.params import EmbedParams

logger = logging.getLogger(__name__)


class EmptySegment(BeatStegoError):
    def __init__(self):
        super().__init__("cannot stretch an empty segment")


@dataclass(frozen=True)
class SpeedFactor:
    """Ratio output_tempo / input_tempo."""

    value: float

    def __post_init__(self) -> None:
        if not self.value > 0:
            raise InvalidParams(f"speed factor must be positive, got {self.value}")

    def __float__(self) -> float:
        return float(self.value)


FactorLike = Union[SpeedFactor, float]


def _sign(symbol: Symbol) -> int:
    if symbol is Symbol.PLUS:
        return 1
    if symbol is Symbol.MINUS:
        return -1
    return 0


def speed_factor(
    params: "EmbedParams", symbol: Symbol, *, settings: Optional[Settings] = None, warn: bool = True
) -> SpeedFactor:
    cfg = (settings or load_settings()).section("tsm")
    x = params.reference_tempo_x
    value = (x + _sign(symbol) * params.delta) / x
    low, high = float(cfg.get("min_factor", 0.9)), float(cfg.get("max_factor", 1.1))
    if not low <= value <= high:
        raise InvalidParams(f"speed factor {value:.6f} outside [{low}, {high}]")
    margin = float(cfg.get("warn_margin", 0.01))
    if warn and abs(value - 1.0) > margin + 1e-12:
        logger.warning("Speed factor %.6f exceeds the %.1f%% inaudibility margin", value, margin * 100)
    return SpeedFactor(value)


def stretched_length(length: int, factor: FactorLike) -> int:
    return round_half_up(length / float(factor))


def _kaiser(x: np.ndarray, beta: float) -> np.ndarray:
    # Continuous Kaiser window on [-1, 1].
    inside = np.clip(1.0 - x * x, 0.0, None)
    return np.i0(beta * np.sqrt(inside)) / np.i0(beta)


def stretch(
    segment: AudioBuffer,
    factor: FactorLike,
    *,
    half_width: Optional[int] = None,
    kaiser_beta: Optional[float] = None,
    block_size: Optional[int] = None,
    settings: Optional[Settings] = None,
) -> AudioBuffer:
    if segment.frames == 0:
        raise EmptySegment()
    ratio = float(factor)
    if ratio <= 0:
        raise InvalidParams(f"speed factor must be positive, got {ratio}")
    if ratio == 1.0:
        return segment

    cfg = (settings or load_settings()).section("tsm")
    width = int(half_width or cfg.get("half_width", 32))
    beta = float(kaiser_beta if kaiser_beta is not None else cfg.get("kaiser_beta", 8.6))
    block = int(block_size or cfg.get("block_size", 16384))

    n_in = segment.frames
    n_out = stretched_length(n_in, ratio)
    # Anti-alias when compressing time.
    cutoff = min(1.0, 1.0 / ratio)
    taps = np.arange(-width + 1, width + 1)
    # Zero padding beyond both ends: W on the left, W + 1 on the right.
    padded = np.pad(segment.samples, ((0, 0), (width, width + 1)))
    out = np.empty((segment.channels, n_out))

    for start in range(0, n_out, block):
        stop = min(start + block, n_out)
        position = np.arange(start, stop) * ratio
        base = np.floor(position).astype(np.int64)
        frac = position - base
        distance = frac[:, np.newaxis] - taps[np.newaxis, :]
        kernel = cutoff * np.sinc(cutoff * distance) * _kaiser(distance / width, beta)
        kernel /= kernel.sum(axis=1, keepdims=True)
        index = base[:, np.newaxis] + taps[np.newaxis, :] + width
        out[:, start:stop] = np.einsum("cjk,jk->cj", padded[:, index], kernel)

    return segment.with_samples(out)


__all__ = ["SpeedFactor", "EmptySegment", "speed_factor", "stretch", "stretched_length"]

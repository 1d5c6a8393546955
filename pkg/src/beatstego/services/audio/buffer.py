"""In-memory PCM audio container."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from beatstego.errors import BeatStegoError


class InvalidParams(BeatStegoError):
    def __init__(self, detail: str):
        self.detail = detail
        super().__init__(detail)


def round_half_up(value: float) -> int:
    return int(np.floor(value + 0.5))


@dataclass(frozen=True, eq=False)
class AudioBuffer:
    """Real-valued samples shaped ``(channels, frames)`` at ``sample_rate``.

    Amplitudes are nominally in [-1, 1]; values are only clamped when written
    to integer PCM.
    """

    sample_rate: int
    samples: np.ndarray

    def __post_init__(self) -> None:
        if int(self.sample_rate) <= 0:
            raise InvalidParams(f"sample_rate must be positive, got {self.sample_rate}")
        data = np.asarray(self.samples, dtype=np.float64)
        if data.ndim == 1:
            data = data[np.newaxis, :]
        if data.ndim != 2 or data.shape[0] not in (1, 2):
            raise InvalidParams(f"expected 1 or 2 channels, got array of shape {data.shape}")
        data = np.ascontiguousarray(data)
        data.setflags(write=False)
        object.__setattr__(self, "sample_rate", int(self.sample_rate))
        object.__setattr__(self, "samples", data)

    @classmethod
    def silence(cls, frames: int, sample_rate: int, channels: int = 1) -> "AudioBuffer":
        return cls(sample_rate=sample_rate, samples=np.zeros((channels, frames)))

    @classmethod
    def concat(cls, parts: Sequence["AudioBuffer"]) -> "AudioBuffer":
        if not parts:
            raise InvalidParams("cannot concatenate an empty list of buffers")
        rate, channels = parts[0].sample_rate, parts[0].channels
        for part in parts[1:]:
            if part.sample_rate != rate or part.channels != channels:
                raise InvalidParams("buffers differ in sample rate or channel count")
        return cls(sample_rate=rate, samples=np.concatenate([p.samples for p in parts], axis=1))

    @property
    def channels(self) -> int:
        return self.samples.shape[0]

    @property
    def frames(self) -> int:
        return self.samples.shape[1]

    def __len__(self) -> int:
        return self.frames

    @property
    def duration_s(self) -> float:
        return self.frames / self.sample_rate

    def mono(self) -> np.ndarray:
        """Channel average as a 1-D array."""
        return self.samples.mean(axis=0)

    def slice(self, start: int, stop: int) -> "AudioBuffer":
        return AudioBuffer(sample_rate=self.sample_rate, samples=self.samples[:, start:stop])

    def with_samples(self, samples: np.ndarray) -> "AudioBuffer":
        return AudioBuffer(sample_rate=self.sample_rate, samples=samples)

    def scaled(self, gain: float) -> "AudioBuffer":
        return self.with_samples(self.samples * gain)

    def equals(self, other: "AudioBuffer") -> bool:
        return (
            self.sample_rate == other.sample_rate
            and self.samples.shape == other.samples.shape
            and bool(np.array_equal(self.samples, other.samples))
        )


__all__ = ["AudioBuffer", "InvalidParams", "round_half_up"]

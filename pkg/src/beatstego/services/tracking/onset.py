"""Onset detection from half-wave-rectified spectral flux.

Frames are Hann-windowed and centered on ``k * hop - window / 2`` samples. One
full window of point reflection (``2 * x[0] - x[k]``) precedes the signal and
zeros follow it, so a tone starting at a zero crossing runs on unbroken into
the first frames while a transient at t = 0 still rises through them. Frame
times can be slightly negative.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view
from scipy.ndimage import maximum_filter1d, uniform_filter1d
from scipy.signal import get_window

from beatstego.errors import BeatStegoError
from beatstego.services.audio import AudioBuffer, InvalidParams

logger = logging.getLogger(__name__)

_FRAME_CHUNK = 1024


class AudioTooShort(BeatStegoError):
    def __init__(self, frames: int, hop: int):
        self.frames = frames
        self.hop = hop
        super().__init__(f"{frames} samples give fewer than 2 analysis frames centred inside the signal at hop {hop}")


@dataclass(frozen=True, eq=False)
class OnsetFunction:
    frame_times_s: np.ndarray
    flux_values: np.ndarray

    def __len__(self) -> int:
        return int(self.flux_values.size)

    @property
    def frame_period_s(self) -> float:
        if self.frame_times_s.size < 2:
            return 0.0
        return float(self.frame_times_s[1] - self.frame_times_s[0])


def spectral_flux(audio: AudioBuffer, window: int = 2048, hop: int = 512) -> OnsetFunction:
    if window <= 0 or window & (window - 1):
        raise InvalidParams(f"window must be a power of two, got {window}")
    if not 0 < hop <= window:
        raise InvalidParams(f"hop must be in (0, window], got {hop}")
    signal = audio.mono()
    n = signal.size
    n_frames = (n + window // 2) // hop + 1
    centres = np.arange(n_frames) * hop - window // 2
    if n == 0 or np.count_nonzero((centres >= 0) & (centres < n)) < 2:
        raise AudioTooShort(n, hop)

    padded_length = (n_frames - 1) * hop + window
    padded = np.zeros(padded_length)
    head = np.pad(signal, (window, 0), mode="reflect", reflect_type="odd")[:padded_length]
    padded[:head.size] = head
    frames = sliding_window_view(padded, window)[::hop]
    taper = get_window("hann", window)

    flux = np.zeros(n_frames)
    previous = None
    for start in range(0, n_frames, _FRAME_CHUNK):
        magnitude = np.abs(np.fft.rfft(frames[start:start + _FRAME_CHUNK] * taper, axis=1))
        stacked = magnitude if previous is None else np.vstack([previous, magnitude])
        rise = np.maximum(np.diff(stacked, axis=0), 0.0).sum(axis=1)
        first = start + 1 if previous is None else start
        flux[first:start + magnitude.shape[0]] = rise
        previous = magnitude[-1:]

    times = (np.arange(n_frames) * hop - window / 2) / audio.sample_rate
    return OnsetFunction(frame_times_s=times, flux_values=flux)


def pick_onsets(
    onset: OnsetFunction,
    *,
    peak_radius: int = 3,
    threshold_k: float = 1.5,
    threshold_window_s: float = 1.0,
    min_spacing_s: float = 0.05,
    min_peak_ratio: float = 0.01,
) -> np.ndarray:
    """Times of flux peaks that are local maxima and stand out from a 1-second neighbourhood."""
    flux = np.asarray(onset.flux_values, dtype=np.float64)
    if flux.size == 0 or not np.any(flux > 0):
        return np.empty(0)
    period = onset.frame_period_s or 1.0

    local_max = flux >= maximum_filter1d(flux, size=2 * peak_radius + 1, mode="constant", cval=0.0)
    width = max(1, int(round(threshold_window_s / period)))
    mean = uniform_filter1d(flux, size=width, mode="constant", cval=0.0)
    mean_sq = uniform_filter1d(flux * flux, size=width, mode="constant", cval=0.0)
    std = np.sqrt(np.clip(mean_sq - mean * mean, 0.0, None))
    floor = min_peak_ratio * flux.max()
    candidates = np.flatnonzero(local_max & (flux > mean + threshold_k * std) & (flux > floor))

    accepted: list[int] = []
    # strongest first; ties resolved toward the earlier frame
    for index in sorted(candidates, key=lambda i: (-flux[i], i)):
        if all(abs(onset.frame_times_s[index] - onset.frame_times_s[j]) >= min_spacing_s for j in accepted):
            accepted.append(index)
    times = np.sort(onset.frame_times_s[np.array(accepted, dtype=np.int64)])
    logger.debug("Picked %d onsets from %d candidates", len(accepted), len(candidates))
    return np.clip(times, 0.0, None)


def refine_onsets(
    audio: AudioBuffer,
    onsets: Sequence[float],
    *,
    hop: int = 512,
    radius_hops: int = 2,
    ratio: float = 0.3,
) -> np.ndarray:
    """Snap each onset to the first sample whose envelope reaches ``ratio`` of the local peak."""
    envelope = np.abs(audio.mono())
    rate = audio.sample_rate
    radius = radius_hops * hop
    refined = []
    for time in onsets:
        centre = int(round(time * rate))
        lo, hi = max(0, centre - radius), min(envelope.size, centre + radius + 1)
        segment = envelope[lo:hi]
        if segment.size == 0 or segment.max() <= 0:
            refined.append(float(time))
            continue
        peak = int(np.argmax(segment))
        first = int(np.flatnonzero(segment[: peak + 1] >= ratio * segment[peak])[0])
        refined.append((lo + first) / rate)
    return np.unique(np.asarray(refined, dtype=np.float64))


__all__ = ["OnsetFunction", "AudioTooShort", "spectral_flux", "pick_onsets", "refine_onsets"]

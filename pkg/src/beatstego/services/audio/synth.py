"""Synthetic constant-tempo click covers and their envelope-based ground truth."""

from __future__ import annotations

from typing import Optional

import numpy as np

from beatstego.config import Settings, load_settings
from .buffer import AudioBuffer, InvalidParams, round_half_up

MIN_TEMPO_BPM = 40.0
MAX_TEMPO_BPM = 300.0


def click_burst(sample_rate: int, click_ms: float, click_freq_hz: float, amplitude: float, fade_ms: float) -> np.ndarray:
    """Sine burst with linear fade-in/out."""
    length = max(1, round_half_up(click_ms / 1000.0 * sample_rate))
    t = np.arange(length) / sample_rate
    burst = amplitude * np.sin(2.0 * np.pi * click_freq_hz * t)
    fade = min(round_half_up(fade_ms / 1000.0 * sample_rate), length // 2)
    if fade > 0:
        ramp = np.arange(fade) / fade
        burst[:fade] *= ramp
        burst[length - fade:] *= ramp[::-1]
    return burst


def beat_sample_positions(tempo_bpm: float, beats: int, sample_rate: int, offset_s: float = 0.0) -> np.ndarray:
    period = 60.0 / tempo_bpm
    return np.array([round_half_up((offset_s + k * period) * sample_rate) for k in range(beats)], dtype=np.int64)


def synth_click_track(
    tempo_bpm: float,
    beats: int,
    sample_rate: Optional[int] = None,
    click_ms: Optional[float] = None,
    click_freq_hz: Optional[float] = None,
    *,
    amplitude: Optional[float] = None,
    fade_ms: Optional[float] = None,
    settings: Optional[Settings] = None,
) -> AudioBuffer:
    cfg = (settings or load_settings()).section("audio")
    sample_rate = int(sample_rate or cfg.get("sample_rate", 44100))
    click_ms = float(click_ms if click_ms is not None else cfg.get("click_ms", 10.0))
    click_freq_hz = float(click_freq_hz if click_freq_hz is not None else cfg.get("click_freq_hz", 1000.0))
    amplitude = float(amplitude if amplitude is not None else cfg.get("click_amplitude", 0.8))
    fade_ms = float(fade_ms if fade_ms is not None else cfg.get("fade_ms", 1.0))

    if not MIN_TEMPO_BPM <= tempo_bpm <= MAX_TEMPO_BPM:
        raise InvalidParams(f"tempo {tempo_bpm} bpm outside [{MIN_TEMPO_BPM:g}, {MAX_TEMPO_BPM:g}]")
    if int(beats) != beats or beats < 1:
        raise InvalidParams(f"beats must be a positive integer, got {beats}")
    if sample_rate <= 0:
        raise InvalidParams(f"sample rate must be positive, got {sample_rate}")
    period_ms = 60000.0 / tempo_bpm
    if not 0 < click_ms < period_ms:
        raise InvalidParams(f"click length {click_ms} ms must be positive and shorter than the beat period {period_ms:.3f} ms")
    if not 0 < amplitude <= 1.0:
        raise InvalidParams(f"click amplitude must be in (0, 1], got {amplitude}")

    total = round_half_up(beats * 60.0 / tempo_bpm * sample_rate)
    signal = np.zeros(total)
    burst = click_burst(sample_rate, click_ms, click_freq_hz, amplitude, fade_ms)
    for position in beat_sample_positions(tempo_bpm, int(beats), sample_rate):
        stop = min(position + burst.size, total)
        signal[position:stop] = burst[: stop - position]
    return AudioBuffer(sample_rate=sample_rate, samples=signal)


def detect_click_onsets(
    audio: AudioBuffer,
    threshold: Optional[float] = None,
    refractory_ms: Optional[float] = None,
    *,
    settings: Optional[Settings] = None,
) -> np.ndarray:
    """Onset times (s) of clicks found by thresholding the absolute envelope.

    Independent of the tracker; meant for synthetic material where every
    burst rises out of digital silence.
    """
    cfg = (settings or load_settings()).section("audio")
    threshold = float(threshold if threshold is not None else cfg.get("onset_threshold", 0.05))
    refractory_ms = float(refractory_ms if refractory_ms is not None else cfg.get("onset_refractory_ms", 50.0))
    above = np.flatnonzero(np.abs(audio.mono()) > threshold)
    if above.size == 0:
        return np.empty(0)
    refractory = refractory_ms / 1000.0 * audio.sample_rate
    keep = np.concatenate(([True], np.diff(above) > refractory))
    return above[keep] / audio.sample_rate


__all__ = [
    "synth_click_track",
    "click_burst",
    "beat_sample_positions",
    "detect_click_onsets",
    "MIN_TEMPO_BPM",
    "MAX_TEMPO_BPM",
]

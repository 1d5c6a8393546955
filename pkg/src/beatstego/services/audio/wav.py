"""RIFF/WAVE reading and writing through libsndfile."""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Optional, Sequence, Union

import numpy as np
import soundfile as sf

from beatstego.config import load_settings
from beatstego.errors import BeatStegoError
from .buffer import AudioBuffer

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]

_READABLE_SUBTYPES = {"PCM_16", "PCM_24"}
_WAV_FORMATS = {"WAV", "WAVEX"}
_INT32_SCALE = float(2**31)
_INT16_SCALE = 32768.0


class IoError(BeatStegoError):
    def __init__(self, path: PathLike, detail: str):
        self.path = str(path)
        self.detail = detail
        super().__init__(f"{path}: {detail}")


class UnsupportedFormat(BeatStegoError):
    def __init__(self, detail: str):
        self.detail = detail
        super().__init__(detail)


def _supported_rates(rates: Optional[Sequence[int]]) -> Sequence[int]:
    if rates is not None:
        return rates
    return load_settings().get("audio", "supported_rates", default=[44100, 48000])


def read_wav(path: PathLike, *, supported_rates: Optional[Sequence[int]] = None) -> AudioBuffer:
    path = Path(path)
    if not path.is_file():
        raise IoError(path, "file does not exist")
    try:
        info = sf.info(str(path))
    except OSError as exc:
        raise IoError(path, str(exc)) from exc
    except RuntimeError as exc:
        raise UnsupportedFormat(f"{path}: {exc}") from exc

    if info.format not in _WAV_FORMATS:
        raise UnsupportedFormat(f"{path}: container {info.format} is not RIFF/WAVE")
    if info.subtype not in _READABLE_SUBTYPES:
        raise UnsupportedFormat(f"{path}: sample format {info.subtype} (only 16/24-bit integer PCM)")
    if info.channels not in (1, 2):
        raise UnsupportedFormat(f"{path}: {info.channels} channels (only mono or stereo)")
    rates = _supported_rates(supported_rates)
    if info.samplerate not in rates:
        raise UnsupportedFormat(f"{path}: sample rate {info.samplerate} Hz not in {list(rates)}")

    try:
        # int32 reads are left-aligned, so one scale normalizes both 16- and 24-bit data.
        data, rate = sf.read(str(path), dtype="int32", always_2d=True)
    except OSError as exc:
        raise IoError(path, str(exc)) from exc
    except RuntimeError as exc:
        raise UnsupportedFormat(f"{path}: {exc}") from exc

    samples = data.T.astype(np.float64) / _INT32_SCALE
    logger.debug("Read %s: %d frames, %d ch, %d Hz, %s", path, samples.shape[1], info.channels, rate, info.subtype)
    return AudioBuffer(sample_rate=rate, samples=samples)


def quantize_pcm16(samples: np.ndarray) -> np.ndarray:
    scaled = np.round(np.asarray(samples, dtype=np.float64) * _INT16_SCALE)
    return np.clip(scaled, -32768, 32767).astype(np.int16)


def write_wav(buffer: AudioBuffer, path: PathLike, *, supported_rates: Optional[Sequence[int]] = None) -> None:
    """Write 16-bit PCM; amplitudes outside [-1, 1) are clamped."""
    path = Path(path)
    rates = _supported_rates(supported_rates)
    if buffer.sample_rate not in rates:
        raise UnsupportedFormat(f"sample rate {buffer.sample_rate} Hz not in {list(rates)}")
    pcm = quantize_pcm16(buffer.samples).T
    try:
        sf.write(str(path), pcm, buffer.sample_rate, subtype="PCM_16", format="WAV")
    except (OSError, RuntimeError) as exc:
        raise IoError(path, str(exc)) from exc
    logger.debug("Wrote %s: %d frames, %d ch, %d Hz", path, buffer.frames, buffer.channels, buffer.sample_rate)


__all__ = ["read_wav", "write_wav", "quantize_pcm16", "IoError", "UnsupportedFormat"]

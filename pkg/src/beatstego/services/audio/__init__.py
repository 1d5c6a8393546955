"""Audio services: PCM buffers, WAV I/O and synthetic click covers."""

from .buffer import AudioBuffer, InvalidParams, round_half_up
from .synth import beat_sample_positions, click_burst, detect_click_onsets, synth_click_track
from .wav import IoError, UnsupportedFormat, quantize_pcm16, read_wav, write_wav

__all__ = [
    "AudioBuffer",
    "InvalidParams",
    "IoError",
    "UnsupportedFormat",
    "read_wav",
    "write_wav",
    "quantize_pcm16",
    "synth_click_track",
    "click_burst",
    "beat_sample_positions",
    "detect_click_onsets",
    "round_half_up",
]

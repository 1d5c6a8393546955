import logging

import numpy as np
import pytest
from scipy.signal import butter, sosfiltfilt

from beatstego.services.audio import AudioBuffer, InvalidParams
from beatstego.services.codec import Symbol
from beatstego.services.embedding import EmbedParams
from beatstego.services.tsm import EmptySegment, SpeedFactor, speed_factor, stretch, stretched_length

TSM_LOGGER = "beatstego.services.tsm.stretch"


def _tone(freq_hz, seconds, rate=44100, amplitude=0.5):
    t = np.arange(int(seconds * rate)) / rate
    return AudioBuffer(rate, amplitude * np.sin(2 * np.pi * freq_hz * t))


@pytest.mark.parametrize("factor, expected", [(121 / 120, 47603), (119 / 120, 48403)])
def test_stretch_length_contract(factor, expected):
    segment = AudioBuffer(48000, np.zeros(48000))
    assert stretched_length(48000, factor) == expected
    assert stretch(segment, factor).frames == expected


def test_unit_factor_returns_input_unchanged():
    segment = _tone(440, 0.1)
    assert stretch(segment, 1.0) is segment


def test_empty_segment():
    with pytest.raises(EmptySegment):
        stretch(AudioBuffer(44100, np.zeros(0)), 1.01)


def test_non_positive_factor():
    with pytest.raises(InvalidParams):
        SpeedFactor(0.0)
    with pytest.raises(InvalidParams):
        stretch(_tone(440, 0.01), -1.0)


def test_tone_pitch_follows_factor():
    rate = 44100
    factor = 121 / 120
    out = stretch(_tone(1000, 1.0, rate), factor).mono()
    spectrum = np.abs(np.fft.rfft(out * np.hanning(out.size)))
    freqs = np.fft.rfftfreq(out.size, 1.0 / rate)
    peak = freqs[int(np.argmax(spectrum))]
    assert abs(peak - 1000 * factor) <= rate / out.size


def test_stretch_keeps_channels_and_level():
    left = _tone(500, 0.2).mono()
    segment = AudioBuffer(44100, np.vstack([left, -left]))
    out = stretch(segment, 0.99)
    assert out.channels == 2
    core = out.samples[:, 200:-200]
    assert np.allclose(core[0], -core[1])
    assert abs(np.max(np.abs(core)) - 0.5) < 0.01


def test_block_size_does_not_change_output():
    segment = _tone(700, 0.3)
    a = stretch(segment, 1.013, block_size=1000)
    b = stretch(segment, 1.013, block_size=50000)
    assert np.allclose(a.samples, b.samples)


def test_speed_factor_values(settings):
    params = EmbedParams(120, 1)
    assert float(speed_factor(params, Symbol.PLUS, settings=settings)) == pytest.approx(121 / 120)
    assert float(speed_factor(params, Symbol.MINUS, settings=settings)) == pytest.approx(119 / 120)
    assert float(speed_factor(params, Symbol.ZERO, settings=settings)) == 1.0


def test_speed_factor_bounds(settings):
    narrow = settings.replace(tsm={"min_factor": 0.95, "max_factor": 1.05})
    with pytest.raises(InvalidParams):
        speed_factor(EmbedParams(120, 8), Symbol.PLUS, settings=narrow)


def test_speed_factor_warns_outside_margin(settings, caplog):
    with caplog.at_level(logging.WARNING, logger=TSM_LOGGER):
        speed_factor(EmbedParams(120, 1), Symbol.PLUS, settings=settings)
    assert not [r for r in caplog.records if r.name == TSM_LOGGER]
    with caplog.at_level(logging.WARNING, logger=TSM_LOGGER):
        speed_factor(EmbedParams(120, 2), Symbol.MINUS, settings=settings)
    assert len([r for r in caplog.records if r.name == TSM_LOGGER]) == 1
    with caplog.at_level(logging.WARNING, logger=TSM_LOGGER):
        speed_factor(EmbedParams(120, 2), Symbol.PLUS, settings=settings, warn=False)
    assert len([r for r in caplog.records if r.name == TSM_LOGGER]) == 1


def _check_lengths(count, seed):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        length = int(rng.integers(1, 6000))
        factor = float(rng.uniform(0.98, 1.02))
        out = stretch(AudioBuffer(44100, rng.standard_normal(length) * 0.1), factor)
        assert out.frames == stretched_length(length, factor) == int(np.floor(length / factor + 0.5))


def test_length_contract_sample():
    _check_lengths(100, seed=11)


@pytest.mark.slow
def test_length_contract_full():
    _check_lengths(1000, seed=12)


def test_inverse_stretch_restores_length():
    rng = np.random.default_rng(21)
    for _ in range(200):
        length = int(rng.integers(1, 200000))
        factor = float(rng.uniform(0.9, 1.1))
        back = stretched_length(stretched_length(length, factor), 1.0 / factor)
        assert abs(back - length) <= 1
    segment = _tone(300, 0.25)
    restored = stretch(stretch(segment, 1.013), 1 / 1.013)
    assert abs(restored.frames - segment.frames) <= 1


def _low_passed_noise(seconds=1.0, rate=44100, cutoff_hz=2000, seed=5):
    rng = np.random.default_rng(seed)
    sos = butter(8, cutoff_hz, fs=rate, output="sos")
    noise = sosfiltfilt(sos, rng.standard_normal(int(seconds * rate)))
    return AudioBuffer(rate, 0.9 * noise / np.max(np.abs(noise)))


@pytest.mark.parametrize("factor", [119 / 120, 121 / 120, 0.98, 1.02])
def test_stretch_peak_stays_within_bound(click_cover, factor):
    for segment in (click_cover(120, 4), _tone(440, 0.5), _tone(3000, 0.5, amplitude=0.95), _low_passed_noise()):
        peak = np.max(np.abs(segment.samples))
        assert np.max(np.abs(stretch(segment, factor).samples)) <= peak * 1.05

import logging

import numpy as np
import pytest

from beatstego.services.audio import InvalidParams, detect_click_onsets
from beatstego.services.codec import Symbol, encode_text
from beatstego.services.embedding import (
    EmbedParams,
    EmbedService,
    InsufficientCapacity,
    audibility_band,
    capacity,
    check_audibility,
    embed,
    plan,
)

PARAMS_LOGGER = "beatstego.services.embedding.params"


def _param_warnings(caplog):
    return [r for r in caplog.records if r.name == PARAMS_LOGGER and r.levelno == logging.WARNING]


@pytest.mark.parametrize("phi, units", [(1, 120), (2, 60), (3, 40)])
def test_capacity(phi, units):
    assert capacity(EmbedParams(120, 1, phi), 60.0).units == units


def test_capacity_respects_offset():
    assert capacity(EmbedParams(120, 1, 1, first_beat_offset=1.0), 60.0).units == 118


@pytest.mark.parametrize(
    "kwargs",
    [
        {"reference_tempo_x": 120, "delta": 12},
        {"reference_tempo_x": 120, "delta": 0},
        {"reference_tempo_x": 120, "delta": 1, "phi": 0},
        {"reference_tempo_x": 20, "delta": 1},
        {"reference_tempo_x": 120, "delta": 1, "first_beat_offset": -0.5},
    ],
)
def test_params_validation(kwargs):
    with pytest.raises(InvalidParams):
        EmbedParams(**kwargs)


def test_params_from_profile():
    from beatstego.config import load_settings

    params = EmbedParams.from_settings(128, settings=load_settings("dj"))
    assert (params.delta, params.phi) == (2.0, 3)


def test_plan_units_and_insufficient_capacity():
    params = EmbedParams(120, 1)
    stream = encode_text("sos")
    tempo_plan = plan(stream, params, 6.0)
    assert len(tempo_plan) == 11
    assert tempo_plan.units[0].tempo_bpm == 121.0
    assert tempo_plan.units[3].symbol is Symbol.ZERO
    assert tempo_plan.units[4].tempo_bpm == 119.0
    assert tempo_plan.units[2].source_start_s == pytest.approx(1.0)
    assert tempo_plan.counts() == {"PLUS": 6, "MINUS": 3, "ZERO": 2}
    with pytest.raises(InsufficientCapacity) as info:
        plan(stream, params, 5.0)
    assert (info.value.needed_units, info.value.available_units) == (11, 10)


def test_single_unit_length(click_cover, settings):
    cover = click_cover(120, 8)
    stego, tempo_plan = embed(cover, "e", EmbedParams(120, 1), settings=settings)
    assert len(tempo_plan) == 1
    assert stego.frames == cover.frames - 22050 + 21868


def test_empty_message_returns_cover(click_cover, settings):
    cover = click_cover(120, 8)
    result = embed(cover, "", EmbedParams(120, 1), settings=settings)
    assert result.stego is cover
    assert len(result.plan) == 0


def test_insufficient_capacity_raised_before_stretching(click_cover, settings):
    with pytest.raises(InsufficientCapacity):
        embed(click_cover(120, 4), "sos", EmbedParams(120, 1), settings=settings)


def test_click_intervals_match_plan(click_cover, settings):
    cover = click_cover(120, 24)
    params = EmbedParams(120, 1, 1)
    result = EmbedService(settings).embed(cover, "sos", params)
    onsets = detect_click_onsets(result.stego, settings=settings)
    assert onsets.size == 24
    measured = 60.0 / np.diff(onsets)
    for index, unit in enumerate(result.plan.units):
        assert measured[index] == pytest.approx(unit.tempo_bpm, abs=0.2)
    assert np.allclose(measured[len(result.plan):], 120.0, atol=0.2)


def test_click_intervals_match_plan_multi_beat_units(click_cover, settings):
    cover = click_cover(100, 40)
    params = EmbedParams(100, 2, 3)
    result = EmbedService(settings).embed(cover, "et", params)
    onsets = detect_click_onsets(result.stego, settings=settings)
    for index, unit in enumerate(result.plan.units):
        span = onsets[(index + 1) * 3] - onsets[index * 3]
        assert 180.0 / span == pytest.approx(unit.tempo_bpm, abs=0.2)


def test_threaded_embedding_matches_serial(click_cover, settings):
    cover = click_cover(120, 32)
    params = EmbedParams(120, 1)
    serial = EmbedService(settings).embed(cover, "dancer", params).stego
    threaded = EmbedService(settings.replace(embedding={"workers": 3})).embed(cover, "dancer", params).stego
    assert serial.equals(threaded)


def test_embedding_is_deterministic(click_cover, settings):
    cover = click_cover(120, 24)
    a = embed(cover, "sos", EmbedParams(120, 1), settings=settings).stego
    b = embed(cover, "sos", EmbedParams(120, 1), settings=settings).stego
    assert a.equals(b)


@pytest.mark.parametrize(
    "x, delta, warned",
    [(120, 1, False), (100, 1, False), (120, 2, True), (150, 1.6, True), (200, 2, False)],
)
def test_audibility_warning_exactly_above_one_percent(settings, caplog, x, delta, warned):
    with caplog.at_level(logging.WARNING, logger=PARAMS_LOGGER):
        assert check_audibility(EmbedParams(x, delta), settings=settings) is warned
    assert len(_param_warnings(caplog)) == (1 if warned else 0)


def test_embed_warns_once(click_cover, settings, caplog):
    with caplog.at_level(logging.WARNING):
        result = embed(click_cover(120, 24), "sos", EmbedParams(120, 2), settings=settings)
    assert result.warned
    assert len(_param_warnings(caplog)) == 1
    assert len([r for r in caplog.records if r.levelno == logging.WARNING]) == 1


@pytest.mark.parametrize(
    "x, delta, band",
    [(120, 1, "inaudible"), (100, 1.5, "trained-ear"), (100, 2, "trained-ear"), (100, 2.5, "noticeable"), (100, 5, "obvious")],
)
def test_audibility_band(x, delta, band):
    assert audibility_band(EmbedParams(x, delta)) == band

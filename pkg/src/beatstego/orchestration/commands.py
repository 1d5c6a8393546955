"""Command handlers and the registry that dispatches them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, List, TextIO

from beatstego.config import Settings
from beatstego.services.audio import IoError, read_wav, synth_click_track, write_wav
from beatstego.services.codec import (
    decode_symbols,
    encode_text,
    symbols_from_text_form,
    symbols_to_text_form,
)
from beatstego.services.detection import DetectionReportRepository, DetectorService
from beatstego.services.embedding import EmbedParams, EmbedService, capacity
from beatstego.services.extraction import ExtractService, TempoTrackRepository, unit_tempi, unit_tempi_frame
from beatstego.services.tracking import TrackerService
from .schemas import RunConfig

Handler = Callable[[RunConfig, Settings, "Streams"], int]


@dataclass
class Streams:
    stdin: TextIO
    stdout: TextIO


class CommandRegistry:
    """Name -> handler map; handlers return an exit code."""

    def __init__(self):
        self._commands: Dict[str, Dict] = {}

    def register(self, name: str, func: Handler, *, description: str = "") -> None:
        self._commands[name] = {"func": func, "description": description}

    def list_commands(self) -> List[str]:
        return sorted(self._commands)

    def run(self, config: RunConfig, settings: Settings, streams: Streams) -> int:
        command = self._commands.get(config.command)
        if not command:
            raise KeyError(f"Unknown command: {config.command}")
        return command["func"](config, settings, streams)


def _rates(settings: Settings):
    return settings.get("audio", "supported_rates", default=[44100, 48000])


def _emit(streams: Streams, line: str = "") -> None:
    streams.stdout.write(line + "\n")


def gen_cover(config: RunConfig, settings: Settings, streams: Streams) -> int:
    audio = synth_click_track(config.tempo, config.beats, config.rate, settings=settings)
    write_wav(audio, config.output, supported_rates=_rates(settings))
    _emit(streams, f"frames={audio.frames}")
    _emit(streams, f"duration_s={audio.duration_s:.6f}")
    _emit(streams, f"sample_rate={audio.sample_rate}")
    return 0


def encode(config: RunConfig, settings: Settings, streams: Streams) -> int:
    params = EmbedParams.from_settings(
        config.tempo, delta=config.delta, phi=config.phi, first_beat_offset=config.offset, settings=settings
    )
    cover = read_wav(config.input, supported_rates=_rates(settings))
    room = capacity(params, cover.duration_s)
    _emit(streams, f"capacity_units={room.units}")
    _emit(streams, f"capacity_chars={room.estimated_chars}")
    result = EmbedService(settings).embed(cover, config.message, params, lenient=not config.strict)
    write_wav(result.stego, config.output, supported_rates=_rates(settings))
    counts = result.plan.counts()
    _emit(streams, f"units={len(result.plan)}")
    _emit(streams, f"plus={counts['PLUS']} minus={counts['MINUS']} zero={counts['ZERO']}")
    _emit(streams, f"audibility={result.band}")
    _emit(streams, f"frames={cover.frames}->{result.stego.frames}")
    return 0


def decode(config: RunConfig, settings: Settings, streams: Streams) -> int:
    cfg = settings.section("embedding")
    phi = config.phi if config.phi is not None else int(cfg.get("phi", 1))
    delta = config.delta if config.delta is not None else float(cfg.get("delta", 1.0))
    audio = read_wav(config.input, supported_rates=_rates(settings))
    result = ExtractService(settings).extract(audio, phi, delta, config.tempo, strict=config.strict)
    if config.csv is not None:
        TempoTrackRepository().write_track(result.track, config.csv)
    _emit(streams, result.message)
    return 0


def detect(config: RunConfig, settings: Settings, streams: Streams) -> int:
    audio = read_wav(config.input, supported_rates=_rates(settings))
    report = DetectorService(settings).detect(audio, config.tempo)
    if config.report_format == "json":
        text = report.model_dump_json(indent=2) + "\n"
    else:
        text = DetectionReportRepository().render(report)
    if config.output is None:
        streams.stdout.write(text)
        return 0
    try:
        config.output.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise IoError(config.output, str(exc)) from exc
    _emit(streams, f"verdict={report.verdict.value}")
    return 0


def analyze(config: RunConfig, settings: Settings, streams: Streams) -> int:
    phi = config.phi if config.phi is not None else 1
    audio = read_wav(config.input, supported_rates=_rates(settings))
    tracker = TrackerService(settings)
    grid = tracker.track(audio, config.tempo).grid
    measured = unit_tempi(grid, phi)
    TempoTrackRepository().write_frame(unit_tempi_frame(measured), config.output)
    _emit(streams, f"beats={len(grid)}")
    _emit(streams, f"units={len(measured)}")
    _emit(streams, f"reference_tempo_bpm={tracker.reference_tempo(grid):.6f}")
    return 0


def codec(config: RunConfig, settings: Settings, streams: Streams) -> int:
    text = streams.stdin.read().rstrip("\r\n")
    if config.codec_direction == "encode":
        _emit(streams, symbols_to_text_form(encode_text(text, lenient=not config.strict)))
    else:
        _emit(streams, decode_symbols(symbols_from_text_form(text.strip()), strict=config.strict))
    return 0


def register_commands(registry: CommandRegistry) -> None:
    registry.register("gen-cover", gen_cover, description="Synthesize a constant-tempo click cover")
    registry.register("encode", encode, description="Embed a message into a cover")
    registry.register("decode", decode, description="Extract a message from a stego track")
    registry.register("detect", detect, description="Blind detection of tempo modulation")
    registry.register("analyze", analyze, description="Write per-unit tempi as CSV")
    registry.register("codec", codec, description="Convert text and symbol strings on stdin/stdout")


__all__ = ["CommandRegistry", "Streams", "register_commands"]

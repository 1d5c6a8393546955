"""Embedding service: encode a message and stretch each planned unit of the cover."""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Set

from beatstego.config import Settings, load_settings
from beatstego.services.audio import AudioBuffer, round_half_up
from beatstego.services.codec import DEFAULT_TABLE, CodeTable, Symbol, SymbolStream, encode_text
from beatstego.services.tsm import SpeedFactor, speed_factor, stretch
from .params import EmbedParams, audibility_band, check_audibility
from .planner import Capacity, TempoPlan, capacity, plan

logger = logging.getLogger(__name__)


@dataclass
class EmbedResult:
    stego: AudioBuffer
    plan: TempoPlan
    stream: SymbolStream
    capacity: Capacity
    band: str
    warned: bool

    def __iter__(self):
        # Unpacks as (stego, plan).
        yield self.stego
        yield self.plan


class EmbedService:
    def __init__(self, settings: Optional[Settings] = None, table: Optional[CodeTable] = None):
        self.settings = settings or load_settings()
        self.table = table or DEFAULT_TABLE
        self.workers = int(self.settings.get("embedding", "workers", default=1))

    def embed(self, cover: AudioBuffer, message: str, params: EmbedParams, *, lenient: bool = False) -> EmbedResult:
        warned = check_audibility(params, settings=self.settings)
        stream = encode_text(message, self.table, lenient=lenient)
        room = capacity(params, cover.duration_s)
        tempo_plan = plan(stream, params, cover.duration_s)
        band = audibility_band(params)
        if not tempo_plan.units:
            return EmbedResult(cover, tempo_plan, stream, room, band, warned)

        factors = self._factors(params, {unit.symbol for unit in tempo_plan.units})
        rate = cover.sample_rate
        boundaries = [round_half_up(unit.source_start_s * rate) for unit in tempo_plan.units]
        boundaries.append(round_half_up(tempo_plan.units[-1].source_end_s * rate))
        boundaries[-1] = min(boundaries[-1], cover.frames)

        jobs = [
            (cover.slice(boundaries[k], boundaries[k + 1]), factors[unit.symbol])
            for k, unit in enumerate(tempo_plan.units)
        ]
        stretched = self._stretch_all(jobs)

        parts: List[AudioBuffer] = [cover.slice(0, boundaries[0]), *stretched, cover.slice(boundaries[-1], cover.frames)]
        stego = AudioBuffer.concat(parts)
        logger.info(
            "Embedded %d units (%s) at X=%g delta=%g phi=%d; %d -> %d frames",
            len(tempo_plan),
            tempo_plan.counts(),
            params.reference_tempo_x,
            params.delta,
            params.phi,
            cover.frames,
            stego.frames,
        )
        return EmbedResult(stego, tempo_plan, stream, room, band, warned)

    def _factors(self, params: EmbedParams, symbols: Set[Symbol]) -> Dict[Symbol, SpeedFactor]:
        # check_audibility already warned for these params
        return {symbol: speed_factor(params, symbol, settings=self.settings, warn=False) for symbol in symbols}

    def _stretch_all(self, jobs) -> List[AudioBuffer]:
        def run(job):
            segment, factor = job
            return stretch(segment, factor, settings=self.settings)

        if self.workers <= 1:
            return [run(job) for job in jobs]
        with ThreadPoolExecutor(max_workers=self.workers) as pool:
            # map preserves submission order
            return list(pool.map(run, jobs))


def embed(
    cover: AudioBuffer,
    message: str,
    params: EmbedParams,
    *,
    table: Optional[CodeTable] = None,
    settings: Optional[Settings] = None,
) -> EmbedResult:
    return EmbedService(settings=settings, table=table).embed(cover, message, params)


__all__ = ["EmbedService", "EmbedResult", "embed"]

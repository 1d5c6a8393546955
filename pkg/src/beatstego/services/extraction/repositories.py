"""CSV output for tempo tracks and raw unit tempi."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence, Tuple, Union

import pandas as pd

from beatstego.services.audio import IoError
from .demodulator import TempoTrack

PathLike = Union[str, Path]

UNIT_TEMPO_COLUMNS = ["unit_index", "start_time_s", "tempo_bpm"]
_FLOAT_FORMAT = "%.6f"


def unit_tempi_frame(measured: Sequence[Tuple[float, float]]) -> pd.DataFrame:
    return pd.DataFrame(
        [(i, start, tempo) for i, (start, tempo) in enumerate(measured)],
        columns=UNIT_TEMPO_COLUMNS,
    )


class TempoTrackRepository:
    """Writes unit tables as CSV with fixed headers."""

    def __init__(self, float_format: str = _FLOAT_FORMAT):
        self.float_format = float_format

    def render(self, frame: pd.DataFrame) -> str:
        return frame.to_csv(index=False, float_format=self.float_format, lineterminator="\n")

    def write_frame(self, frame: pd.DataFrame, path: PathLike) -> None:
        try:
            Path(path).write_text(self.render(frame), encoding="utf-8")
        except OSError as exc:
            raise IoError(path, str(exc)) from exc

    def write_track(self, track: TempoTrack, path: PathLike) -> None:
        self.write_frame(track.to_frame(), path)

    def read_track_frame(self, path: PathLike) -> pd.DataFrame:
        try:
            return pd.read_csv(path, dtype={"symbol": str})
        except OSError as exc:
            raise IoError(path, str(exc)) from exc


__all__ = ["TempoTrackRepository", "unit_tempi_frame", "UNIT_TEMPO_COLUMNS"]

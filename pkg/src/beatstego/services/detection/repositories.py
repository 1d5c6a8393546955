"""Plain-text detection report: key=value lines followed by histogram rows."""

from __future__ import annotations

from pathlib import Path
from typing import Dict, Union

import pandas as pd

from beatstego.services.audio import IoError
from .schemas import DetectionReport

PathLike = Union[str, Path]

HISTOGRAM_COLUMNS = ("bin_start", "count")
HISTOGRAM_HEADER = ",".join(HISTOGRAM_COLUMNS)


def _fmt(value) -> str:
    if value is None:
        return "none"
    if isinstance(value, float):
        return f"{value:.6f}"
    return str(value)


class DetectionReportRepository:
    def render(self, report: DetectionReport) -> str:
        fields: Dict[str, object] = {
            "verdict": report.verdict.value,
            "score": report.score,
            "deviation_ratio": report.deviation_ratio,
            "estimated_delta_bpm": report.estimated_delta_bpm,
            "bimodality": report.bimodality,
            "median_tempo_bpm": report.median_tempo_bpm,
            "units": report.units,
        }
        lines = [f"{key}={_fmt(value)}" for key, value in fields.items()]
        frame = pd.DataFrame(
            [(b.bin_start, b.count) for b in report.unit_tempo_histogram],
            columns=list(HISTOGRAM_COLUMNS),
        )
        histogram = frame.to_csv(index=False, float_format="%.6f", lineterminator="\n")
        return "\n".join(lines) + "\n" + histogram

    def write(self, report: DetectionReport, path: PathLike) -> None:
        try:
            Path(path).write_text(self.render(report), encoding="utf-8")
        except OSError as exc:
            raise IoError(path, str(exc)) from exc


__all__ = ["DetectionReportRepository", "HISTOGRAM_COLUMNS", "HISTOGRAM_HEADER"]

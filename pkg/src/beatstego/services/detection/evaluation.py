"""ROC sweep and AUC over detector scores of labelled clean/stego sets."""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from beatstego.errors import BeatStegoError
from beatstego.services.audio import AudioBuffer
from .detector import DetectorService

logger = logging.getLogger(__name__)


class EmptySet(BeatStegoError):
    def __init__(self, which: str):
        self.which = which
        super().__init__(f"{which} set is empty")


@dataclass(frozen=True)
class RocPoint:
    threshold: float
    fpr: float
    tpr: float


@dataclass
class EvaluationResult:
    auc: float
    roc_points: List[RocPoint]
    clean_scores: List[float]
    stego_scores: List[float]

    def __iter__(self):
        yield self.auc
        yield self.roc_points


def roc_curve(clean_scores: Sequence[float], stego_scores: Sequence[float], points: int = 101) -> List[RocPoint]:
    """A track is flagged when its score is >= the threshold; points sorted by (fpr, tpr)."""
    clean = np.asarray(clean_scores, dtype=np.float64)
    stego = np.asarray(stego_scores, dtype=np.float64)
    if clean.size == 0:
        raise EmptySet("clean")
    if stego.size == 0:
        raise EmptySet("stego")

    thresholds = np.union1d(np.linspace(0.0, 1.0, points), np.concatenate([clean, stego]))
    thresholds = np.append(thresholds, np.inf)
    curve = [
        RocPoint(float(t), float(np.mean(clean >= t)), float(np.mean(stego >= t)))
        for t in thresholds
    ]
    curve.sort(key=lambda p: (p.fpr, p.tpr))
    return curve


def auc(curve: Sequence[RocPoint]) -> float:
    fpr = np.array([p.fpr for p in curve])
    tpr = np.array([p.tpr for p in curve])
    return float(np.trapezoid(tpr, fpr))


def evaluate_scores(clean_scores: Sequence[float], stego_scores: Sequence[float], points: int = 101) -> EvaluationResult:
    curve = roc_curve(clean_scores, stego_scores, points)
    return EvaluationResult(auc(curve), curve, [float(s) for s in clean_scores], [float(s) for s in stego_scores])


def batch_evaluate(
    clean_set: Sequence[AudioBuffer],
    stego_set: Sequence[AudioBuffer],
    *,
    detector: Optional[DetectorService] = None,
    workers: Optional[int] = None,
) -> EvaluationResult:
    if not clean_set:
        raise EmptySet("clean")
    if not stego_set:
        raise EmptySet("stego")
    detector = detector or DetectorService()
    cfg = detector.settings.section("detection")
    workers = int(workers if workers is not None else cfg.get("workers", 1))
    points = int(cfg.get("roc_points", 101))

    def score(audio: AudioBuffer) -> float:
        return detector.detect(audio).score

    tracks = list(clean_set) + list(stego_set)
    if workers <= 1:
        scores = [score(audio) for audio in tracks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            scores = list(pool.map(score, tracks))

    result = evaluate_scores(scores[: len(clean_set)], scores[len(clean_set):], points)
    logger.info("Evaluated %d clean / %d stego tracks: AUC=%.3f", len(clean_set), len(stego_set), result.auc)
    return result


__all__ = ["EmptySet", "RocPoint", "EvaluationResult", "roc_curve", "auc", "evaluate_scores", "batch_evaluate"]

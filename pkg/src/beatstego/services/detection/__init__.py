"""Detection services: blind steganalysis of unit tempo statistics."""

from .detector import DetectorService, detect, score_tempi, tempo_histogram
from .evaluation import EmptySet, EvaluationResult, RocPoint, auc, batch_evaluate, evaluate_scores, roc_curve
from .repositories import HISTOGRAM_COLUMNS, HISTOGRAM_HEADER, DetectionReportRepository
from .schemas import DetectionConfig, DetectionReport, HistogramBin, Verdict

__all__ = [
    "Verdict",
    "DetectionConfig",
    "DetectionReport",
    "HistogramBin",
    "DetectorService",
    "DetectionReportRepository",
    "EvaluationResult",
    "RocPoint",
    "EmptySet",
    "HISTOGRAM_COLUMNS",
    "HISTOGRAM_HEADER",
    "detect",
    "score_tempi",
    "tempo_histogram",
    "roc_curve",
    "auc",
    "evaluate_scores",
    "batch_evaluate",
]

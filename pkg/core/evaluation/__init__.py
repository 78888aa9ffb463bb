from core.evaluation.confusion import ConfusionMatrix, confusion, pooled
from core.evaluation.experiment import (
    ComparisonReport,
    DatasetSummary,
    ExperimentReport,
    FittedPipeline,
    FoldResult,
    compare_normalizers,
    cross_validate,
    evaluate_matrix,
    extract_matrix,
    fit_pipeline,
    plan_folds,
    predict_rows,
    protocol_label,
    run_experiment,
)
from core.evaluation.folds import FoldPlan, make_folds
from core.evaluation.metrics import (
    TABLE_ORDER,
    UNDEFINED,
    MetricsReport,
    MetricValue,
    metrics,
    round_half_up_percent,
)
from core.evaluation.serialize import (
    serialize_comparison,
    serialize_fold,
    serialize_report,
)

__all__ = [
    "TABLE_ORDER",
    "UNDEFINED",
    "ComparisonReport",
    "ConfusionMatrix",
    "DatasetSummary",
    "ExperimentReport",
    "FittedPipeline",
    "FoldPlan",
    "FoldResult",
    "MetricValue",
    "MetricsReport",
    "compare_normalizers",
    "confusion",
    "cross_validate",
    "evaluate_matrix",
    "extract_matrix",
    "fit_pipeline",
    "make_folds",
    "metrics",
    "plan_folds",
    "pooled",
    "predict_rows",
    "protocol_label",
    "round_half_up_percent",
    "run_experiment",
    "serialize_comparison",
    "serialize_fold",
    "serialize_report",
]

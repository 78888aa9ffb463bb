from __future__ import annotations

from dataclasses import asdict
from typing import Any

from core.evaluation.experiment import (
    ComparisonReport,
    DatasetSummary,
    ExperimentReport,
    FoldResult,
)
from core.evaluation.metrics import TABLE_ORDER


def serialize_dataset_summary(summary: DatasetSummary) -> dict[str, Any]:
    return asdict(summary)


def serialize_fold(result: FoldResult) -> dict[str, Any]:
    return {
        "fold": result.fold,
        "n_train": result.n_train,
        "n_test": result.n_test,
        "confusion": result.confusion.as_dict(),
        "metrics": result.metrics.as_dict(),
        "n_support": result.n_support,
        "gamma": result.gamma,
        "converged": result.converged,
        "constant_columns": list(result.constant_columns),
    }


def serialize_report(report: ExperimentReport) -> dict[str, Any]:
    return {
        "protocol": report.protocol,
        "dataset": serialize_dataset_summary(report.dataset),
        "pooled": {
            "confusion": report.pooled.as_dict(),
            "total": report.pooled.total,
            "metrics": report.pooled_metrics.as_dict(),
        },
        "folds": [serialize_fold(result) for result in report.folds],
        "warnings": list(report.warnings),
    }


def serialize_comparison(comparison: ComparisonReport) -> dict[str, Any]:
    rows = []
    for method, report in comparison.reports.items():
        percents = report.pooled_metrics.percents()
        rows.append(
            {
                "normalizer": method,
                "confusion": report.pooled.as_dict(),
                **{name: percents[name] for name in TABLE_ORDER},
            }
        )
    return {
        "rows": rows,
        "reports": {
            method: serialize_report(report)
            for method, report in comparison.reports.items()
        },
    }

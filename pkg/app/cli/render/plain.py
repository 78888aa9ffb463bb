from __future__ import annotations

from core.evaluation import (
    TABLE_ORDER,
    ComparisonReport,
    ConfusionMatrix,
    ExperimentReport,
    MetricsReport,
)

# how the five metrics are labelled in summary lines
METRIC_LABELS = {
    "REC": "Rec",
    "SPE": "Spe",
    "ACC": "Acc",
    "F1": "F1",
    "PRE": "Pre",
}


def format_metrics_line(report: MetricsReport) -> str:
    """'Rec=100.0 Spe=98.6 Acc=99.2 F1=99.0 Pre=98.0'."""
    percents = report.percents()
    return " ".join(f"{METRIC_LABELS[name]}={percents[name]}" for name in TABLE_ORDER)


def format_confusion(cm: ConfusionMatrix) -> str:
    return f"TP={cm.TP} FP={cm.FP} TN={cm.TN} FN={cm.FN} (total {cm.total})"


def render_plain_metrics(cm: ConfusionMatrix, report: MetricsReport) -> str:
    return "\n".join([format_confusion(cm), format_metrics_line(report)])


def render_plain_report(report: ExperimentReport) -> str:
    dataset = report.dataset
    per_class = dataset.segments_per_class
    subjects = dataset.subjects_per_class
    lines = [
        f"Protocol: {report.protocol}",
        (
            f"Dataset: {dataset.n_segments} segments from {dataset.n_files} files "
            f"at {dataset.sample_rate} Hz "
            f"(positive={per_class['positive']} from {len(subjects['positive'])} "
            f"subjects, negative={per_class['negative']} from "
            f"{len(subjects['negative'])} subjects)"
        ),
        f"Normalizer: {report.config.normalizer.value}",
        "",
        "Folds:",
    ]
    for fold in report.folds:
        lines.append(
            f"  {fold.fold}: n_test={fold.n_test} {format_confusion(fold.confusion)} "
            f"Acc={fold.metrics.ACC.percent}"
        )
    lines.extend(
        [
            "",
            f"Pooled: {format_confusion(report.pooled)}",
            f"        {format_metrics_line(report.pooled_metrics)}",
        ]
    )
    if report.warnings:
        lines.append("")
        lines.append("Warnings:")
        lines.extend(f"- {warning}" for warning in report.warnings)
    return "\n".join(lines)


def render_plain_comparison(comparison: ComparisonReport) -> str:
    header = ["Normalizer"] + [METRIC_LABELS[name] for name in TABLE_ORDER]
    rows = [header]
    for method, report in comparison.reports.items():
        percents = report.pooled_metrics.percents()
        rows.append([method] + [percents[name] for name in TABLE_ORDER])

    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    lines = [
        "  ".join(cell.ljust(width) for cell, width in zip(row, widths, strict=True))
        .rstrip()
        for row in rows
    ]
    first = next(iter(comparison.reports.values()), None)
    if first is not None:
        lines.insert(0, f"Protocol: {first.protocol}")
        lines.insert(1, "")
    return "\n".join(lines)

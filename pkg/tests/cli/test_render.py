from __future__ import annotations

import pytest
from rich.console import Console

from app.cli.render import (
    format_confusion,
    format_metrics_line,
    render_plain_comparison,
    render_plain_metrics,
    render_plain_report,
    render_rich_comparison,
    render_rich_report,
)
from core.config import ExperimentConfig
from core.enums import NormalizerMethod
from core.evaluation import ConfusionMatrix, metrics
from core.evaluation.experiment import (
    ComparisonReport,
    DatasetSummary,
    ExperimentReport,
    FoldResult,
    protocol_label,
)


def _report(
    normalizer: NormalizerMethod = NormalizerMethod.zscore,
    warnings: tuple[str, ...] = (),
) -> ExperimentReport:
    config = ExperimentConfig(normalizer=normalizer, folds=2)
    first = ConfusionMatrix(TP=24, FP=1, TN=36, FN=0)
    second = ConfusionMatrix(TP=24, FP=0, TN=36, FN=0)
    pooled = first + second
    return ExperimentReport(
        config=config,
        protocol=protocol_label(config),
        dataset=DatasetSummary(
            n_files=4,
            n_segments=121,
            sample_rate=48000,
            segments_per_class={"positive": 48, "negative": 73},
            subjects_per_class={"positive": ["p1", "p2"], "negative": ["n1", "n2"]},
        ),
        folds=tuple(
            FoldResult(
                fold=i,
                n_train=121 - cm.total,
                n_test=cm.total,
                confusion=cm,
                metrics=metrics(cm),
                n_support=10,
                gamma=0.0185,
                converged=True,
            )
            for i, cm in enumerate((first, second))
        ),
        pooled=pooled,
        pooled_metrics=metrics(pooled),
        warnings=warnings,
    )


@pytest.fixture
def console() -> Console:
    return Console(record=True, width=120, color_system=None)


def test_metrics_line_follows_table_order() -> None:
    report = metrics(ConfusionMatrix(TP=48, FP=1, TN=72, FN=0))

    assert format_metrics_line(report) == (
        "Rec=100.0 Spe=98.6 Acc=99.2 F1=99.0 Pre=98.0"
    )


def test_undefined_metrics_are_spelled_out() -> None:
    report = metrics(ConfusionMatrix(TN=5))

    assert "Rec=undefined" in format_metrics_line(report)
    assert "Spe=100.0" in format_metrics_line(report)


def test_confusion_summary() -> None:
    cm = ConfusionMatrix(TP=48, FP=1, TN=72, FN=0)

    assert format_confusion(cm) == "TP=48 FP=1 TN=72 FN=0 (total 121)"
    assert render_plain_metrics(cm, metrics(cm)).splitlines() == [
        "TP=48 FP=1 TN=72 FN=0 (total 121)",
        "Rec=100.0 Spe=98.6 Acc=99.2 F1=99.0 Pre=98.0",
    ]


def test_plain_report_lists_folds_and_pooled_counts() -> None:
    text = render_plain_report(_report(warnings=("small class",)))

    lines = text.splitlines()
    assert lines[0].startswith("Protocol: 2-fold segment_stratified")
    assert "121 segments from 4 files at 48000 Hz" in lines[1]
    assert "Normalizer: zscore" in lines
    assert "Pooled: TP=48 FP=1 TN=72 FN=0 (total 121)" in lines
    assert any(line.startswith("  0: n_test=61") for line in lines)
    assert lines[-1] == "- small class"


def test_plain_comparison_is_a_table() -> None:
    comparison = ComparisonReport(
        config=ExperimentConfig(folds=2),
        reports={
            "zscore": _report(NormalizerMethod.zscore),
            "minmax": _report(NormalizerMethod.minmax),
        },
    )

    lines = render_plain_comparison(comparison).splitlines()

    assert lines[0].startswith("Protocol: ")
    assert lines[1] == ""
    assert lines[2].split() == ["Normalizer", "Rec", "Spe", "Acc", "F1", "Pre"]
    assert lines[3].split() == ["zscore", "100.0", "98.6", "99.2", "99.0", "98.0"]
    assert lines[4].split()[0] == "minmax"


def test_rich_report_has_a_panel_and_a_pooled_row(console: Console) -> None:
    render_rich_report(_report(warnings=("small class",)), console)

    text = console.export_text()
    assert "Cross-validation" in text
    assert "fold 0" in text
    assert "pooled" in text
    assert "48/1/72/0" in text
    assert "small class" in text


def test_rich_comparison_lists_every_normalizer(console: Console) -> None:
    comparison = ComparisonReport(
        config=ExperimentConfig(folds=2),
        reports={"zscore": _report(), "none": _report(NormalizerMethod.none)},
    )

    render_rich_comparison(comparison, console)

    text = console.export_text()
    assert "Normalizer comparison" in text
    assert "zscore" in text
    assert "none: TP=48 FP=1 TN=72 FN=0 (total 121)" in text

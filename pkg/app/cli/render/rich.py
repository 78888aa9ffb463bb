from __future__ import annotations

from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from app.cli.render.plain import METRIC_LABELS, format_confusion
from core.evaluation import (
    TABLE_ORDER,
    ComparisonReport,
    ConfusionMatrix,
    ExperimentReport,
    MetricsReport,
)


def _mk_console() -> Console:
    return Console(stderr=False)


def _metrics_table(title: str) -> Table:
    table = Table(title=title, show_lines=False)
    table.add_column("Run", no_wrap=True)
    for name in TABLE_ORDER:
        table.add_column(METRIC_LABELS[name], justify="right", no_wrap=True)
    table.add_column("TP/FP/TN/FN", justify="right", no_wrap=True)
    return table


def _add_metrics_row(
    table: Table,
    label: str,
    cm: ConfusionMatrix,
    report: MetricsReport,
    *,
    style: str | None = None,
) -> None:
    percents = report.percents()
    table.add_row(
        label,
        *(percents[name] for name in TABLE_ORDER),
        f"{cm.TP}/{cm.FP}/{cm.TN}/{cm.FN}",
        style=style,
    )


def render_rich_metrics(
    cm: ConfusionMatrix,
    report: MetricsReport,
    console: Console | None = None,
) -> None:
    console = console or _mk_console()
    table = _metrics_table("Evaluation")
    _add_metrics_row(table, "model", cm, report)
    console.print(table)


def render_rich_report(
    report: ExperimentReport,
    console: Console | None = None,
) -> None:
    console = console or _mk_console()
    console.print(
        Panel(
            f"{report.protocol}\n"
            f"{report.dataset.n_segments} segments, "
            f"normalizer {report.config.normalizer.value}",
            title="Cross-validation",
            expand=True,
        )
    )

    table = _metrics_table("Per-fold and pooled metrics")
    for fold in report.folds:
        _add_metrics_row(table, f"fold {fold.fold}", fold.confusion, fold.metrics)
    _add_metrics_row(
        table,
        "pooled",
        report.pooled,
        report.pooled_metrics,
        style="bold",
    )
    console.print(table)

    if report.warnings:
        console.print(
            Panel(
                "\n".join(f"- {w}" for w in report.warnings),
                title="Warnings",
                border_style="yellow",
                expand=True,
            )
        )


def render_rich_comparison(
    comparison: ComparisonReport,
    console: Console | None = None,
) -> None:
    console = console or _mk_console()
    table = _metrics_table("Normalizer comparison (pooled)")
    for method, report in comparison.reports.items():
        _add_metrics_row(table, method, report.pooled, report.pooled_metrics)
    console.print(table)
    for method, report in comparison.reports.items():
        console.print(f"[dim]{method}: {format_confusion(report.pooled)}[/dim]")

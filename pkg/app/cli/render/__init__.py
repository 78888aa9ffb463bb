from app.cli.render.plain import (
    METRIC_LABELS,
    format_confusion,
    format_metrics_line,
    render_plain_comparison,
    render_plain_metrics,
    render_plain_report,
)
from app.cli.render.rich import (
    render_rich_comparison,
    render_rich_metrics,
    render_rich_report,
)

__all__ = [
    "METRIC_LABELS",
    "format_confusion",
    "format_metrics_line",
    "render_plain_comparison",
    "render_plain_metrics",
    "render_plain_report",
    "render_rich_comparison",
    "render_rich_metrics",
    "render_rich_report",
]

from __future__ import annotations

from pathlib import Path

from rich.console import Console

from app.cli.commands.common import load_manifest_for
from app.cli.config import CliInvocation
from app.cli.render import (
    render_plain_comparison,
    render_plain_report,
    render_rich_comparison,
    render_rich_report,
)
from app.json_output import (
    COMPARISON_FILE,
    REPORT_FILE,
    build_comparison_payload,
    build_report_payload,
    write_json,
)
from core.enums import OutputFormat
from core.evaluation import compare_normalizers, run_experiment


def handle_cross_validate_command(invocation: CliInvocation) -> list[Path]:
    config = invocation.config
    manifest = load_manifest_for(config)
    report = run_experiment(manifest, config)

    report_path = config.out_dir / REPORT_FILE
    write_json(report_path, build_report_payload(report))
    if config.output_format is OutputFormat.rich:
        render_rich_report(report, Console())
    else:
        print(render_plain_report(report))
    print(f"Wrote {report_path.as_posix()}")
    return [report_path]


def handle_compare_command(invocation: CliInvocation) -> list[Path]:
    config = invocation.config
    manifest = load_manifest_for(config)
    comparison = compare_normalizers(manifest, config)

    path = config.out_dir / COMPARISON_FILE
    write_json(path, build_comparison_payload(comparison))
    if config.output_format is OutputFormat.rich:
        render_rich_comparison(comparison, Console())
    else:
        print(render_plain_comparison(comparison))
    print(f"Wrote {path.as_posix()}")
    return [path]

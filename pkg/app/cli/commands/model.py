from __future__ import annotations

from pathlib import Path
from typing import Any

from loguru import logger
from rich.console import Console

from app.cli.commands.common import load_manifest_for
from app.cli.config import CliInvocation
from app.cli.render import render_plain_metrics, render_rich_metrics
from app.json_output import (
    METRICS_FILE,
    MODEL_FILE,
    NORMALIZATION_FILE,
    build_metrics_payload,
    build_model_payload,
    build_normalization_payload,
    feature_set_definition,
    read_json,
    write_json,
)
from core.enums import OutputFormat
from core.evaluation import (
    FittedPipeline,
    confusion,
    extract_matrix,
    fit_pipeline,
    metrics,
    predict_rows,
)
from core.exceptions import ConfigError, CoughDwtError, StageError
from core.normalize import normalization_params_from_dict
from core.svm import model_from_dict
from data.loaders import require_both_classes


def handle_train_command(invocation: CliInvocation) -> list[Path]:
    config = invocation.config
    manifest = load_manifest_for(config)
    try:
        require_both_classes(manifest)
    except CoughDwtError as e:
        raise StageError(cause=e, stage=e.stage) from e

    matrix, _ = extract_matrix(manifest, config)
    fitted = fit_pipeline(matrix, config)

    model_path = config.out_dir / MODEL_FILE
    params_path = config.out_dir / NORMALIZATION_FILE
    write_json(model_path, build_model_payload(config, fitted.model))
    write_json(params_path, build_normalization_payload(config, fitted.params))

    model = fitted.model
    gamma = "n/a" if model.kernel.gamma is None else f"{model.kernel.gamma:.6g}"
    print(
        f"Trained {model.kernel.kind.value} SVM on {matrix.n_rows} segments: "
        f"{model.n_support} support vectors, gamma={gamma}, "
        f"{'converged' if model.converged else 'iteration budget reached'}"
    )
    print(f"Wrote {model_path.as_posix()} and {params_path.as_posix()}")
    return [model_path, params_path]


def _read_artifact(path: Path, what: str) -> dict[str, Any]:
    if not path.is_file():
        msg = f"{what} not found: {path}"
        raise ConfigError(msg)
    try:
        return read_json(path)
    except ValueError as e:
        msg = f"{what} {path} is not valid JSON: {e}"
        raise ConfigError(msg) from e


def load_fitted_pipeline(model_path: Path) -> tuple[FittedPipeline, dict[str, Any]]:
    """Model plus the normalization params it references; returns the raw model."""
    raw_model = _read_artifact(model_path, "model file")
    ref = raw_model.get("normalization_params_ref") or NORMALIZATION_FILE
    raw_params = _read_artifact(model_path.parent / ref, "normalization params")
    try:
        fitted = FittedPipeline(
            params=normalization_params_from_dict(raw_params),
            model=model_from_dict(raw_model),
        )
    except CoughDwtError as e:
        raise StageError(cause=e, stage=e.stage) from e
    return fitted, raw_model


def handle_evaluate_command(invocation: CliInvocation) -> list[Path]:
    config = invocation.config
    if config.model_path is None:
        msg = "evaluate needs --model (a model.json written by train)"
        raise ConfigError(msg)

    fitted, raw_model = load_fitted_pipeline(config.model_path)
    trained_with = raw_model.get("feature_set")
    if trained_with is not None and trained_with != feature_set_definition(config):
        msg = (
            "feature settings differ from the ones the model was trained with: "
            f"model {trained_with}, current {feature_set_definition(config)}"
        )
        raise ConfigError(msg)

    manifest = load_manifest_for(config)
    matrix, _ = extract_matrix(manifest, config)
    predicted = predict_rows(fitted, matrix)
    try:
        cm = confusion(matrix.labels, predicted)
        report = metrics(cm)
    except CoughDwtError as e:
        raise StageError(cause=e, stage=e.stage) from e

    metrics_path = config.out_dir / METRICS_FILE
    write_json(
        metrics_path,
        build_metrics_payload(
            config, cm, report, model_file=config.model_path.as_posix()
        ),
    )
    logger.info("Evaluated {} segments", matrix.n_rows)
    if config.output_format is OutputFormat.rich:
        render_rich_metrics(cm, report, Console())
    else:
        print(render_plain_metrics(cm, report))
    return [metrics_path]

from __future__ import annotations

import json
from datetime import UTC, datetime
from pathlib import Path
from typing import Any

from core.config import ExperimentConfig
from core.constants import STAT_NAMES, band_names, feature_names
from core.evaluation import (
    ComparisonReport,
    ConfusionMatrix,
    ExperimentReport,
    MetricsReport,
    serialize_comparison,
    serialize_report,
)
from core.normalize import NormalizationParams, serialize_normalization_params
from core.svm import SvmModel, serialize_model

SCHEMA_VERSION = "1.0"

FEATURES_FILE = "features.csv"
FEATURES_META_FILE = "features.json"
MODEL_FILE = "model.json"
NORMALIZATION_FILE = "normalization.json"
METRICS_FILE = "metrics.json"
REPORT_FILE = "report.json"
COMPARISON_FILE = "comparison.json"
COEFFS_DIR = "coeffs"
COEFFS_INDEX_FILE = "index.json"


def utc_timestamp() -> str:
    return datetime.now(UTC).isoformat(timespec="seconds")


def feature_set_definition(config: ExperimentConfig) -> dict[str, Any]:
    """What each feature column means; embedded in every artifact."""
    return {
        "wavelet": config.wavelet,
        "levels": config.levels,
        "boundary": config.boundary.value,
        "signal_prenorm": config.signal_prenorm,
        "bands": list(band_names(config.levels)),
        "statistics": list(STAT_NAMES),
        "feature_count": len(feature_names(config.levels)),
    }


def _header(config: ExperimentConfig, artifact: str) -> dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "artifact": artifact,
        "config": config.to_dict(),
        "feature_set": feature_set_definition(config),
    }


def build_features_meta_payload(
    config: ExperimentConfig,
    *,
    n_rows: int,
    warnings: list[str],
) -> dict[str, Any]:
    return {
        **_header(config, "features"),
        "features_file": FEATURES_FILE,
        "n_rows": n_rows,
        "warnings": list(warnings),
    }


def build_model_payload(config: ExperimentConfig, model: SvmModel) -> dict[str, Any]:
    return {
        **_header(config, "model"),
        **serialize_model(model, normalization_params_ref=NORMALIZATION_FILE),
    }


def build_normalization_payload(
    config: ExperimentConfig,
    params: NormalizationParams,
) -> dict[str, Any]:
    return {
        **_header(config, "normalization"),
        **serialize_normalization_params(params),
    }


def build_metrics_payload(
    config: ExperimentConfig,
    cm: ConfusionMatrix,
    report: MetricsReport,
    *,
    model_file: str,
) -> dict[str, Any]:
    return {
        **_header(config, "metrics"),
        "model_file": model_file,
        "confusion": cm.as_dict(),
        "total": cm.total,
        "metrics": report.as_dict(),
    }


def build_report_payload(
    report: ExperimentReport,
    *,
    generated_at: str | None = None,
) -> dict[str, Any]:
    return {
        **_header(report.config, "experiment_report"),
        **serialize_report(report),
        "generated_at": generated_at or utc_timestamp(),
    }


def build_comparison_payload(
    comparison: ComparisonReport,
    *,
    generated_at: str | None = None,
) -> dict[str, Any]:
    return {
        **_header(comparison.config, "normalizer_comparison"),
        **serialize_comparison(comparison),
        "generated_at": generated_at or utc_timestamp(),
    }


def build_coeffs_index_payload(
    config: ExperimentConfig,
    segments: list[dict[str, Any]],
) -> dict[str, Any]:
    return {**_header(config, "coefficients"), "segments": segments}


def write_json(path: Path, payload: dict[str, Any]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(
        json.dumps(payload, indent=2, ensure_ascii=False) + "\n",
        encoding="utf-8",
    )


def read_json(path: Path) -> dict[str, Any]:
    return json.loads(Path(path).read_text(encoding="utf-8"))

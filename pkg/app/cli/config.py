"""Resolve command-line flags and an optional JSON file into an ExperimentConfig.

Precedence: built-in defaults < config file < flags.
"""

from __future__ import annotations

import json
from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Any

from jsonschema import Draft202012Validator

from app.cli.parser import build_parser
from core.config import ExperimentConfig
from core.enums import Command
from core.exceptions import ConfigError

PROJECT_ROOT = Path(__file__).resolve().parents[2]
CONFIG_SCHEMA_PATH = PROJECT_ROOT / "schemas" / "experiment_config.schema.json"

# config-file / flag key -> ExperimentConfig field
CONFIG_KEYS: dict[str, str] = {
    "manifest": "manifest_path",
    "wavelet": "wavelet",
    "levels": "levels",
    "boundary": "boundary",
    "duration_ms": "segment_duration_ms",
    "prenorm_signal": "signal_prenorm",
    "norm": "normalizer",
    "paper_mode": "paper_mode",
    "kernel": "kernel",
    "gamma": "gamma",
    "c": "C",
    "positive_weight": "positive_class_weight",
    "tolerance": "tolerance",
    "max_passes": "max_passes",
    "folds": "folds",
    "split": "split",
    "seed": "seed",
    "out": "out_dir",
    "model": "model_path",
    "format": "output_format",
}


@dataclass(frozen=True)
class CliInvocation:
    command: Command
    config: ExperimentConfig
    verbose: bool = False
    limit: int | None = None


@lru_cache(maxsize=1)
def load_config_schema() -> dict[str, Any]:
    return json.loads(CONFIG_SCHEMA_PATH.read_text(encoding="utf-8"))


def validate_config_file(values: Any) -> list[str]:
    """Schema violations as sorted 'path: message' strings."""
    validator = Draft202012Validator(load_config_schema())
    errors = sorted(validator.iter_errors(values), key=lambda error: list(error.path))
    return [
        f"{'/'.join(str(p) for p in error.path) or '<root>'}: {error.message}"
        for error in errors
    ]


def read_config_file(path: Path | str) -> dict[str, Any]:
    path = Path(path)
    if not path.is_file():
        msg = f"config file not found: {path}"
        raise ConfigError(msg)
    try:
        values = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        msg = f"config file {path} is not valid JSON: {e}"
        raise ConfigError(msg) from e

    errors = validate_config_file(values)
    if errors:
        msg = f"invalid config file {path}: " + "; ".join(errors)
        raise ConfigError(msg)
    return values


def _flag_values(namespace: Any) -> dict[str, Any]:
    return {
        key: getattr(namespace, key)
        for key in CONFIG_KEYS
        if getattr(namespace, key, None) is not None
    }


def parse_config(argv: Sequence[str] | None = None) -> CliInvocation:
    parser = build_parser()
    args = parser.parse_args(argv)
    command = Command(args.command)

    merged: dict[str, Any] = {}
    if args.config is not None:
        merged.update(read_config_file(args.config))
    merged.update(_flag_values(args))

    if not merged.get("manifest"):
        msg = "missing manifest: pass --manifest or set 'manifest' in --config"
        raise ConfigError(msg)
    if command is Command.evaluate and not merged.get("model"):
        msg = "evaluate needs --model (a model.json written by train)"
        raise ConfigError(msg)

    limit = getattr(args, "limit", None)
    if limit is not None and limit < 1:
        msg = "limit must be ≥ 1"
        raise ConfigError(msg)

    config = ExperimentConfig.from_mapping(
        {CONFIG_KEYS[key]: value for key, value in merged.items()}
    )
    return CliInvocation(
        command=command,
        config=config,
        verbose=bool(args.verbose),
        limit=limit,
    )

from __future__ import annotations

import json
from pathlib import Path

import pytest

from app.cli.config import parse_config, read_config_file, validate_config_file
from core.config import ExperimentConfig
from core.enums import (
    Boundary,
    Command,
    KernelKind,
    NormalizerMethod,
    OutputFormat,
    SplitMode,
)
from core.exceptions import ConfigError


def _write_config(path: Path, values: dict) -> Path:
    path.write_text(json.dumps(values), encoding="utf-8")
    return path


def test_defaults_when_only_a_manifest_is_given() -> None:
    invocation = parse_config(["cross-validate", "--manifest", "data/manifest.csv"])
    config = invocation.config

    assert invocation.command is Command.cross_validate
    assert config.manifest_path == Path("data/manifest.csv")
    assert config.wavelet == "db4"
    assert config.levels == 5
    assert config.boundary is Boundary.symmetric
    assert config.segment_duration_ms == 1640
    assert config.normalizer is NormalizerMethod.zscore
    assert config.kernel is KernelKind.rbf
    assert config.gamma is None
    assert config.folds == 10
    assert config.split is SplitMode.segment_stratified
    assert config.seed == 0
    assert config.out_dir == Path("out")
    assert config.output_format is OutputFormat.plain
    assert not invocation.verbose


def test_flags_override_defaults() -> None:
    invocation = parse_config(
        [
            "cross-validate",
            "--manifest",
            "m.csv",
            "--norm",
            "minmax",
            "--paper-mode",
            "--kernel",
            "linear",
            "--c",
            "2.5",
            "--split",
            "subject_grouped",
            "-v",
        ]
    )
    config = invocation.config

    assert config.normalizer is NormalizerMethod.minmax
    assert config.paper_mode
    assert config.kernel is KernelKind.linear
    assert config.C == 2.5
    assert config.split is SplitMode.subject_grouped
    assert invocation.verbose


def test_zero_levels_is_rejected() -> None:
    with pytest.raises(ConfigError, match="levels must be ≥ 1"):
        parse_config(["extract", "--manifest", "m.csv", "--levels", "0"])


def test_missing_manifest_is_rejected() -> None:
    with pytest.raises(ConfigError, match="missing manifest"):
        parse_config(["extract"])


def test_evaluate_requires_a_model() -> None:
    with pytest.raises(ConfigError, match="--model"):
        parse_config(["evaluate", "--manifest", "m.csv"])


def test_dump_limit_must_be_positive() -> None:
    with pytest.raises(ConfigError, match="limit must be ≥ 1"):
        parse_config(["dump-coeffs", "--manifest", "m.csv", "--limit", "0"])


def test_bad_flag_values_raise_instead_of_exiting() -> None:
    with pytest.raises(ConfigError):
        parse_config(["extract", "--manifest", "m.csv", "--norm", "robust"])
    with pytest.raises(ConfigError):
        parse_config(["classify", "--manifest", "m.csv"])


def test_config_file_values_yield_to_flags(tmp_path: Path) -> None:
    path = _write_config(
        tmp_path / "exp.json",
        {"manifest": "m.csv", "norm": "minmax", "folds": 5, "seed": 9},
    )

    config = parse_config(
        ["cross-validate", "--config", str(path), "--folds", "3"]
    ).config

    assert config.normalizer is NormalizerMethod.minmax
    assert config.folds == 3
    assert config.seed == 9


def test_config_file_with_unknown_key_is_rejected(tmp_path: Path) -> None:
    path = _write_config(tmp_path / "exp.json", {"manifest": "m.csv", "colour": 1})

    with pytest.raises(ConfigError, match="invalid config file"):
        read_config_file(path)


def test_config_file_must_be_json(tmp_path: Path) -> None:
    path = tmp_path / "exp.json"
    path.write_text("{manifest: m.csv", encoding="utf-8")

    with pytest.raises(ConfigError, match="not valid JSON"):
        read_config_file(path)
    with pytest.raises(ConfigError, match="not found"):
        read_config_file(tmp_path / "missing.json")


def test_schema_errors_are_sorted_by_path() -> None:
    errors = validate_config_file({"seed": "x", "levels": "five"})

    assert errors == [
        "levels: 'five' is not of type 'integer'",
        "seed: 'x' is not of type 'integer'",
    ]


def test_experiment_config_round_trips_through_plain_values() -> None:
    config = ExperimentConfig.from_mapping(
        {"manifest_path": "a/m.csv", "normalizer": "minmax", "gamma": 0.1}
    )

    values = config.to_dict()

    assert values["manifest_path"] == "a/m.csv"
    assert values["normalizer"] == "minmax"
    assert ExperimentConfig.from_mapping(values) == config


@pytest.mark.parametrize(
    ("values", "message"),
    [
        ({"levels": 0}, "levels must be"),
        ({"segment_duration_ms": 0}, "duration_ms must be"),
        ({"gamma": -1.0}, "gamma must be"),
        ({"C": 0}, "C must be"),
        ({"folds": 1}, "folds must be"),
        ({"wavelet": "sym4"}, "unsupported wavelet"),
        ({"normalizer": "robust"}, "invalid normalizer"),
        ({"colour": "red"}, "unknown config keys"),
    ],
)
def test_invalid_config_values(values: dict, message: str) -> None:
    with pytest.raises(ConfigError, match=message):
        ExperimentConfig.from_mapping(values)

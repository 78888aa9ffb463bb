from __future__ import annotations

from dataclasses import asdict, dataclass, fields
from enum import Enum
from pathlib import Path
from typing import Any

from core.constants import (
    DEFAULT_C,
    DEFAULT_FOLDS,
    DEFAULT_MAX_PASSES,
    DEFAULT_SEED,
    DEFAULT_TOLERANCE,
    DEFAULT_WAVELET,
    DWT_LEVELS,
    SEGMENT_DURATION_MS,
    SUPPORTED_WAVELETS,
)
from core.enums import (
    Boundary,
    KernelKind,
    NormalizerMethod,
    OutputFormat,
    SplitMode,
)
from core.exceptions import ConfigError

_ENUM_FIELDS: dict[str, type[Enum]] = {
    "boundary": Boundary,
    "normalizer": NormalizerMethod,
    "kernel": KernelKind,
    "split": SplitMode,
    "output_format": OutputFormat,
}
_PATH_FIELDS = ("manifest_path", "out_dir", "model_path")


@dataclass(frozen=True)
class ExperimentConfig:
    """Fully resolved settings for one command run.

    Every random choice downstream is derived from ``seed``.
    """

    manifest_path: Path | None = None
    wavelet: str = DEFAULT_WAVELET
    levels: int = DWT_LEVELS
    boundary: Boundary = Boundary.symmetric
    segment_duration_ms: float = SEGMENT_DURATION_MS
    signal_prenorm: bool = False
    normalizer: NormalizerMethod = NormalizerMethod.zscore
    paper_mode: bool = False
    kernel: KernelKind = KernelKind.rbf
    gamma: float | None = None  # None: 1 / (d * mean feature variance)
    C: float = DEFAULT_C
    positive_class_weight: float = 1.0
    tolerance: float = DEFAULT_TOLERANCE
    max_passes: int = DEFAULT_MAX_PASSES
    folds: int = DEFAULT_FOLDS
    split: SplitMode = SplitMode.segment_stratified
    seed: int = DEFAULT_SEED
    out_dir: Path = Path("out")
    model_path: Path | None = None
    output_format: OutputFormat = OutputFormat.plain

    def __post_init__(self) -> None:
        for name, enum_type in _ENUM_FIELDS.items():
            value = getattr(self, name)
            if not isinstance(value, enum_type):
                msg = f"invalid {name} {value!r}"
                raise ConfigError(msg)
        if self.wavelet not in SUPPORTED_WAVELETS:
            msg = (
                f"unsupported wavelet {self.wavelet!r}; "
                f"choose one of {', '.join(SUPPORTED_WAVELETS)}"
            )
            raise ConfigError(msg)
        if self.levels < 1:
            msg = "levels must be ≥ 1"
            raise ConfigError(msg)
        if not self.segment_duration_ms > 0:
            msg = "duration_ms must be > 0"
            raise ConfigError(msg)
        if self.gamma is not None and not self.gamma > 0:
            msg = "gamma must be > 0"
            raise ConfigError(msg)
        if not self.C > 0:
            msg = "C must be > 0"
            raise ConfigError(msg)
        if not self.positive_class_weight > 0:
            msg = "positive_weight must be > 0"
            raise ConfigError(msg)
        if not self.tolerance > 0:
            msg = "tolerance must be > 0"
            raise ConfigError(msg)
        if self.max_passes < 1:
            msg = "max_passes must be ≥ 1"
            raise ConfigError(msg)
        if self.folds < 2:
            msg = "folds must be ≥ 2"
            raise ConfigError(msg)
        if isinstance(self.seed, bool) or not isinstance(self.seed, int):
            msg = f"seed must be an integer, got {self.seed!r}"
            raise ConfigError(msg)

    @classmethod
    def from_mapping(cls, values: dict[str, Any]) -> ExperimentConfig:
        """Build from plain values (strings for enums and paths)."""
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(values) - known)
        if unknown:
            msg = f"unknown config keys: {', '.join(unknown)}"
            raise ConfigError(msg)

        coerced: dict[str, Any] = {}
        for key, value in values.items():
            if value is not None and key in _ENUM_FIELDS:
                try:
                    value = _ENUM_FIELDS[key](value)
                except ValueError as e:
                    msg = f"invalid {key} {value!r}"
                    raise ConfigError(msg) from e
            elif value is not None and key in _PATH_FIELDS:
                value = Path(value)
            coerced[key] = value
        return cls(**coerced)

    def to_dict(self) -> dict[str, Any]:
        out = asdict(self)
        for key, value in out.items():
            if isinstance(value, Enum):
                out[key] = value.value
            elif isinstance(value, Path):
                out[key] = value.as_posix()
        return out

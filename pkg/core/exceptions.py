from __future__ import annotations

from dataclasses import dataclass

from core.enums import Stage


class CoughDwtError(Exception):
    """Base exception for project-level, domain-specific errors."""

    stage: Stage = Stage.pipeline_cli


class DatasetError(CoughDwtError):
    stage = Stage.dataset_io


class WavFormatError(DatasetError):
    """Raised when a WAV container is not 16-bit PCM mono or is damaged."""


class WaveletError(CoughDwtError):
    stage = Stage.wavelet


class FeatureError(CoughDwtError):
    stage = Stage.features


class NormalizationError(CoughDwtError):
    stage = Stage.normalize


class SvmError(CoughDwtError):
    stage = Stage.svm


class EvaluationError(CoughDwtError):
    stage = Stage.eval


class ConfigError(CoughDwtError):
    stage = Stage.pipeline_cli


@dataclass(frozen=True)
class StageError(CoughDwtError):
    """
    Raised by the experiment runner when a stage fails.

    cause: the original error
    stage: the module that failed
    fold: the fold being processed, or None outside the fold loop
    """

    cause: Exception
    stage: Stage = Stage.pipeline_cli
    fold: int | None = None

    def __str__(self) -> str:
        where = f"[{self.stage.value}]"
        if self.fold is not None:
            where += f" fold {self.fold}"
        return f"{where}: {self.cause}"

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from core.constants import (
    DEFAULT_C,
    DEFAULT_MAX_PASSES,
    DEFAULT_SEED,
    DEFAULT_TOLERANCE,
)
from core.enums import KernelKind, Label
from core.exceptions import SvmError

EQUALITY_TOLERANCE = 1e-6


@dataclass(frozen=True)
class KernelSpec:
    kind: KernelKind = KernelKind.rbf
    gamma: float | None = None

    def __post_init__(self) -> None:
        if self.kind is KernelKind.rbf:
            if self.gamma is None or not self.gamma > 0:
                msg = f"rbf kernel requires gamma > 0, got {self.gamma}"
                raise SvmError(msg)


@dataclass(frozen=True)
class TrainConfig:
    C: float = DEFAULT_C
    tolerance: float = DEFAULT_TOLERANCE
    max_passes: int = DEFAULT_MAX_PASSES
    seed: int = DEFAULT_SEED
    positive_class_weight: float = 1.0

    def __post_init__(self) -> None:
        if not self.C > 0:
            msg = f"C must be > 0, got {self.C}"
            raise SvmError(msg)
        if not self.tolerance > 0:
            msg = f"tolerance must be > 0, got {self.tolerance}"
            raise SvmError(msg)
        if self.max_passes < 1:
            msg = f"max_passes must be ≥ 1, got {self.max_passes}"
            raise SvmError(msg)
        if not self.positive_class_weight > 0:
            msg = "positive_class_weight must be > 0"
            raise SvmError(msg)

    def box(self, signs: np.ndarray) -> np.ndarray:
        """Per-example upper bound on alpha (C, scaled for the positive class)."""
        return np.where(signs > 0, self.C * self.positive_class_weight, self.C)


@dataclass(frozen=True, eq=False)
class SvmModel:
    support_vectors: np.ndarray
    dual_coeffs: np.ndarray  # alpha_i * y_i
    bias: float
    kernel: KernelSpec
    C: float
    feature_names: tuple[str, ...] = ()
    positive_class_weight: float = 1.0
    label_map: dict[int, Label] = field(
        default_factory=lambda: {1: Label.positive, -1: Label.negative}
    )
    iterations: int = 0
    converged: bool = True

    def __post_init__(self) -> None:
        if self.support_vectors.ndim != 2 or self.support_vectors.shape[0] == 0:
            msg = "a trained model needs at least one support vector"
            raise SvmError(msg)
        if self.dual_coeffs.shape != (self.support_vectors.shape[0],):
            msg = "dual_coeffs must align with support_vectors"
            raise SvmError(msg)
        bound = self.C * max(1.0, self.positive_class_weight)
        if np.any(np.abs(self.dual_coeffs) > bound * (1 + 1e-12)):
            msg = "dual coefficient magnitude exceeds the box constraint"
            raise SvmError(msg)
        if abs(float(np.sum(self.dual_coeffs))) > EQUALITY_TOLERANCE:
            msg = "dual coefficients must sum to zero"
            raise SvmError(msg)

    @property
    def n_support(self) -> int:
        return int(self.support_vectors.shape[0])

    @property
    def dimension(self) -> int:
        return int(self.support_vectors.shape[1])

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from core.enums import Label
from core.exceptions import FeatureError


@dataclass(frozen=True, eq=False)
class FeatureVector:
    values: np.ndarray
    names: tuple[str, ...]

    def __post_init__(self) -> None:
        if self.values.shape != (len(self.names),):
            msg = (
                f"feature values shape {self.values.shape} does not match "
                f"{len(self.names)} names"
            )
            raise FeatureError(msg)

    def __len__(self) -> int:
        return len(self.names)

    def as_dict(self) -> dict[str, float]:
        return {
            name: float(v) for name, v in zip(self.names, self.values, strict=True)
        }


@dataclass(frozen=True, eq=False)
class FeatureMatrix:
    """Rows of feature vectors with aligned labels and (subject_id, index) sources."""

    values: np.ndarray
    feature_names: tuple[str, ...]
    labels: tuple[Label, ...]
    sources: tuple[tuple[str, int], ...]

    def __post_init__(self) -> None:
        if self.values.ndim != 2:
            msg = f"feature matrix must be 2-D, got shape {self.values.shape}"
            raise FeatureError(msg)
        n_rows, n_cols = self.values.shape
        if n_cols != len(self.feature_names):
            msg = (
                f"feature matrix has {n_cols} columns but "
                f"{len(self.feature_names)} names"
            )
            raise FeatureError(msg)
        if not (n_rows == len(self.labels) == len(self.sources)):
            msg = "rows, labels and sources must have equal length"
            raise FeatureError(msg)

    @classmethod
    def from_rows(
        cls,
        rows: Sequence[FeatureVector],
        labels: Sequence[Label],
        sources: Sequence[tuple[str, int]],
    ) -> FeatureMatrix:
        if not rows:
            msg = "cannot build a feature matrix from zero rows"
            raise FeatureError(msg)
        names = rows[0].names
        if any(row.names != names for row in rows):
            msg = "feature vectors disagree on feature names"
            raise FeatureError(msg)
        return cls(
            values=np.vstack([row.values for row in rows]),
            feature_names=names,
            labels=tuple(labels),
            sources=tuple(sources),
        )

    @property
    def n_rows(self) -> int:
        return self.values.shape[0]

    @property
    def signs(self) -> np.ndarray:
        """Labels as +1 (positive) / -1 (negative)."""
        return np.array([label.sign for label in self.labels], dtype=np.float64)

    @property
    def subject_ids(self) -> tuple[str, ...]:
        return tuple(subject for subject, _ in self.sources)

    def take(self, indices: Sequence[int] | np.ndarray) -> FeatureMatrix:
        idx = [int(i) for i in indices]
        return FeatureMatrix(
            values=self.values[idx],
            feature_names=self.feature_names,
            labels=tuple(self.labels[i] for i in idx),
            sources=tuple(self.sources[i] for i in idx),
        )

    def with_values(self, values: np.ndarray) -> FeatureMatrix:
        return FeatureMatrix(
            values=values,
            feature_names=self.feature_names,
            labels=self.labels,
            sources=self.sources,
        )

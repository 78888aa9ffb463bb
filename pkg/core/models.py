# dataset-level dataclasses shared by data/ and core/

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from core.constants import SEGMENT_DURATION_MS
from core.enums import Label


@dataclass(frozen=True)
class ManifestEntry:
    path: Path
    label: Label
    subject_id: str
    metadata: dict[str, str] = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        if not str(self.path).strip():
            msg = "ManifestEntry path cannot be empty."
            raise ValueError(msg)
        if not isinstance(self.label, Label):
            msg = f"ManifestEntry label must be a Label, got {self.label!r}."
            raise ValueError(msg)


@dataclass(frozen=True)
class DatasetManifest:
    entries: tuple[ManifestEntry, ...]
    source: Path | None = None

    @property
    def class_counts(self) -> tuple[int, int]:
        """(n_positive, n_negative)."""
        counts = Counter(e.label for e in self.entries)
        return counts[Label.positive], counts[Label.negative]

    @property
    def subjects(self) -> dict[Label, tuple[str, ...]]:
        out: dict[Label, list[str]] = {Label.positive: [], Label.negative: []}
        for entry in self.entries:
            if entry.subject_id not in out[entry.label]:
                out[entry.label].append(entry.subject_id)
        return {label: tuple(ids) for label, ids in out.items()}

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True, eq=False)
class AudioSegment:
    """Fixed-duration window of a recording; samples are in [-1, 1]."""

    samples: np.ndarray
    sample_rate: int
    label: Label
    subject_id: str
    segment_index: int
    duration_ms: float = SEGMENT_DURATION_MS

    def __post_init__(self) -> None:
        if self.sample_rate <= 0:
            msg = "AudioSegment sample_rate must be positive."
            raise ValueError(msg)
        expected = round(self.sample_rate * self.duration_ms / 1000)
        if len(self.samples) != expected:
            msg = (
                f"AudioSegment holds {len(self.samples)} samples; "
                f"{self.duration_ms} ms at {self.sample_rate} Hz needs {expected}."
            )
            raise ValueError(msg)

    @property
    def source(self) -> tuple[str, int]:
        return (self.subject_id, self.segment_index)

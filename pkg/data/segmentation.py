from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

import numpy as np
from loguru import logger

from core.constants import SEGMENT_DURATION_MS
from core.exceptions import DatasetError
from core.models import AudioSegment, DatasetManifest
from data.wav import read_wav


def window_length(sample_rate: int, duration_ms: float) -> int:
    return round(sample_rate * duration_ms / 1000)


def segment(
    samples: np.ndarray,
    sample_rate: int,
    duration_ms: float = SEGMENT_DURATION_MS,
) -> list[np.ndarray]:
    """Cut consecutive non-overlapping windows; the trailing remainder is dropped."""
    if duration_ms <= 0:
        msg = f"duration_ms must be > 0, got {duration_ms}"
        raise DatasetError(msg)
    if sample_rate <= 0:
        msg = f"sample_rate must be > 0, got {sample_rate}"
        raise DatasetError(msg)

    samples = np.asarray(samples, dtype=np.float64)
    if samples.size == 0:
        msg = "cannot segment an empty signal"
        raise DatasetError(msg)

    width = window_length(sample_rate, duration_ms)
    if width <= 0:
        msg = f"window of {duration_ms} ms at {sample_rate} Hz has no samples"
        raise DatasetError(msg)

    count = samples.size // width
    if count == 0:
        logger.warning(
            "Signal of {} samples is shorter than one {} ms window ({} samples)",
            samples.size,
            duration_ms,
            width,
        )
        return []

    return [samples[k * width : (k + 1) * width].copy() for k in range(count)]


@dataclass
class SegmentCorpus:
    segments: list[AudioSegment]
    sample_rate: int
    warnings: list[str] = field(default_factory=list)


def load_segments(
    manifest: DatasetManifest,
    duration_ms: float = SEGMENT_DURATION_MS,
) -> SegmentCorpus:
    """Decode and window every manifest entry in order.

    segment_index counts windows per subject across that subject's files, so
    (subject_id, segment_index) identifies a segment uniquely.
    """
    segments: list[AudioSegment] = []
    warnings: list[str] = []
    rate: int | None = None
    per_subject: dict[str, int] = defaultdict(int)

    for entry in manifest.entries:
        samples, entry_rate = read_wav(entry.path)
        if rate is None:
            rate = entry_rate
        elif entry_rate != rate:
            msg = (
                f"non-uniform sample rate: {entry.path} is {entry_rate} Hz, "
                f"expected {rate} Hz"
            )
            raise DatasetError(msg)

        windows = segment(samples, entry_rate, duration_ms)
        if not windows:
            warnings.append(
                f"{entry.path}: shorter than one {duration_ms} ms window; skipped"
            )
        for window in windows:
            segments.append(
                AudioSegment(
                    samples=window,
                    sample_rate=entry_rate,
                    label=entry.label,
                    subject_id=entry.subject_id,
                    segment_index=per_subject[entry.subject_id],
                    duration_ms=duration_ms,
                )
            )
            per_subject[entry.subject_id] += 1

    if rate is None or not segments:
        msg = "manifest produced no segments"
        raise DatasetError(msg)

    logger.info("Loaded {} segments at {} Hz", len(segments), rate)
    return SegmentCorpus(segments=segments, sample_rate=rate, warnings=warnings)

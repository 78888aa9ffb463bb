"""Synthetic two-class cough-like corpus for desk-scale end-to-end runs.

Each segment is noise confined to one wavelet detail band: positives put their
energy in one band, negatives in another, so the classes are separable by the
band-energy features.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np
from loguru import logger

from core.constants import SEGMENT_DURATION_MS
from core.enums import Boundary, Label
from core.exceptions import DatasetError
from core.models import ManifestEntry
from core.wavelet import (
    WaveletDecomposition,
    expected_band_lengths,
    get_wavelet,
    idwt_reconstruct,
)
from data.loaders import write_manifest
from data.segmentation import window_length
from data.wav import write_wav

MANIFEST_NAME = "manifest.csv"


@dataclass(frozen=True)
class SyntheticCorpusSpec:
    segments_per_class: int = 60
    subjects_per_class: int = 6
    sample_rate: int = 8000
    duration_ms: float = SEGMENT_DURATION_MS
    positive_band: int = 2  # D2
    negative_band: int = 4  # D4
    wavelet: str = "db4"
    levels: int = 5
    peak: float = 0.5
    noise_floor: float = 0.01
    seed: int = 0

    def __post_init__(self) -> None:
        if self.segments_per_class < 1 or self.subjects_per_class < 1:
            msg = "need at least one segment and one subject per class"
            raise DatasetError(msg)
        if self.subjects_per_class > self.segments_per_class:
            msg = "subjects_per_class cannot exceed segments_per_class"
            raise DatasetError(msg)
        for band in (self.positive_band, self.negative_band):
            if not 1 <= band <= self.levels:
                msg = f"band D{band} outside 1..{self.levels}"
                raise DatasetError(msg)
        if self.positive_band == self.negative_band:
            msg = "the two classes must use different bands"
            raise DatasetError(msg)
        if not 0 < self.peak <= 1:
            msg = f"peak must lie in (0, 1], got {self.peak}"
            raise DatasetError(msg)

    def band_for(self, label: Label) -> int:
        return self.positive_band if label is Label.positive else self.negative_band


def synthesize_segment(
    rng: np.random.Generator,
    band: int,
    length: int,
    spec: SyntheticCorpusSpec,
) -> np.ndarray:
    """Random coefficients in detail band ``band`` only, synthesized to a signal."""
    wavelet = get_wavelet(spec.wavelet)
    lengths = expected_band_lengths(
        length, wavelet.filter_length, spec.levels, Boundary.periodic
    )
    bands = [np.zeros(n) for n in lengths]
    bands[band - 1] = rng.standard_normal(lengths[band - 1])

    signal = idwt_reconstruct(
        WaveletDecomposition(
            bands=tuple(bands),
            spec=wavelet,
            boundary=Boundary.periodic,
            original_length=length,
        )
    )
    signal = signal + spec.noise_floor * rng.standard_normal(length)
    return spec.peak * signal / np.max(np.abs(signal))


def _segments_per_subject(spec: SyntheticCorpusSpec) -> list[int]:
    base, extra = divmod(spec.segments_per_class, spec.subjects_per_class)
    return [base + (1 if k < extra else 0) for k in range(spec.subjects_per_class)]


def generate_dataset(
    out_dir: Path | str,
    spec: SyntheticCorpusSpec | None = None,
) -> Path:
    """Write one WAV per subject plus a manifest; returns the manifest path."""
    spec = spec or SyntheticCorpusSpec()
    out_dir = Path(out_dir)
    rng = np.random.default_rng(spec.seed)
    width = window_length(spec.sample_rate, spec.duration_ms)
    if width < 2**spec.levels:
        msg = f"window of {width} samples is too short for {spec.levels} levels"
        raise DatasetError(msg)

    entries: list[ManifestEntry] = []
    for label in (Label.positive, Label.negative):
        prefix = "pos" if label is Label.positive else "neg"
        for k, n_segments in enumerate(_segments_per_subject(spec)):
            subject_id = f"{prefix}{k:02d}"
            samples = np.concatenate(
                [
                    synthesize_segment(rng, spec.band_for(label), width, spec)
                    for _ in range(n_segments)
                ]
            )
            path = out_dir / "audio" / f"{subject_id}.wav"
            write_wav(path, samples, spec.sample_rate)
            entries.append(ManifestEntry(path=path, label=label, subject_id=subject_id))

    manifest_path = out_dir / MANIFEST_NAME
    write_manifest(manifest_path, entries)
    logger.info(
        "Wrote synthetic corpus: {} segments per class, {} subjects per class, to {}",
        spec.segments_per_class,
        spec.subjects_per_class,
        out_dir,
    )
    return manifest_path

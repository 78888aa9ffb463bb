from __future__ import annotations

from collections.abc import Sequence

import numpy as np
from loguru import logger

from core.constants import DWT_LEVELS, feature_names
from core.enums import Boundary
from core.exceptions import FeatureError
from core.features.matrix import FeatureMatrix, FeatureVector
from core.features.stats import band_features
from core.models import AudioSegment
from core.normalize.scaling import zscore_signal
from core.wavelet import WaveletDecomposition, WaveletSpec, dwt_decompose


def extract_features(
    decomp: WaveletDecomposition,
    levels: int = DWT_LEVELS,
) -> FeatureVector:
    """Concatenate band statistics over D1..Dn, An."""
    if len(decomp.bands) != levels + 1:
        msg = (
            f"expected {levels + 1} bands for a {levels}-level decomposition, "
            f"got {len(decomp.bands)}"
        )
        raise FeatureError(msg)

    values = np.concatenate([band_features(band) for band in decomp.bands])
    return FeatureVector(values=values, names=feature_names(levels))


def segment_features(
    samples: np.ndarray,
    spec: WaveletSpec,
    *,
    levels: int = DWT_LEVELS,
    boundary: Boundary = Boundary.symmetric,
    signal_prenorm: bool = False,
) -> FeatureVector:
    signal = zscore_signal(samples) if signal_prenorm else samples
    decomp = dwt_decompose(signal, spec, levels, boundary)
    return extract_features(decomp, levels)


def build_feature_matrix(
    segments: Sequence[AudioSegment],
    spec: WaveletSpec,
    *,
    levels: int = DWT_LEVELS,
    boundary: Boundary = Boundary.symmetric,
    signal_prenorm: bool = False,
) -> FeatureMatrix:
    """One row per segment, in segment order; rows never depend on each other."""
    rows = [
        segment_features(
            seg.samples,
            spec,
            levels=levels,
            boundary=boundary,
            signal_prenorm=signal_prenorm,
        )
        for seg in segments
    ]
    logger.info(
        "Extracted {} features from {} segments ({}, {} levels)",
        len(feature_names(levels)),
        len(rows),
        spec.name,
        levels,
    )
    return FeatureMatrix.from_rows(
        rows,
        labels=[seg.label for seg in segments],
        sources=[seg.source for seg in segments],
    )

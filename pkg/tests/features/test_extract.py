from __future__ import annotations

import numpy as np
import pytest

from core.constants import FEATURE_COUNT, FEATURE_NAMES, STAT_NAMES
from core.enums import Label
from core.exceptions import FeatureError
from core.features import build_feature_matrix, extract_features, segment_features
from core.models import AudioSegment
from core.wavelet import dwt_decompose, get_wavelet

DB4 = get_wavelet("db4")
WINDOW = 13120


def _segments(n: int, seed: int = 0) -> list[AudioSegment]:
    rng = np.random.default_rng(seed)
    return [
        AudioSegment(
            samples=rng.uniform(-0.5, 0.5, WINDOW),
            sample_rate=8000,
            label=Label.positive if k % 2 else Label.negative,
            subject_id=f"s{k % 3}",
            segment_index=k // 3,
        )
        for k in range(n)
    ]


def test_full_window_yields_54_named_features() -> None:
    x = np.random.default_rng(0).uniform(-1.0, 1.0, 78720)

    vector = segment_features(x, DB4)

    assert len(vector) == FEATURE_COUNT == 54
    assert vector.names == FEATURE_NAMES
    assert vector.names[0] == "D1_mean"
    assert vector.names[-1] == "A5_entropy"
    assert np.all(np.isfinite(vector.values))


def test_feature_count_follows_levels() -> None:
    vector = segment_features(np.ones(WINDOW), DB4, levels=3)

    assert len(vector) == 4 * len(STAT_NAMES)
    assert vector.names[-1] == "A3_entropy"


def test_band_count_must_match_levels() -> None:
    decomp = dwt_decompose(np.ones(256), DB4, 3)

    with pytest.raises(FeatureError, match="expected 6 bands"):
        extract_features(decomp, levels=5)


def test_doubling_amplitude_scales_features_predictably() -> None:
    for seg in _segments(50):
        base = segment_features(seg.samples, DB4).as_dict()
        doubled = segment_features(2.0 * seg.samples, DB4).as_dict()
        for name, value in base.items():
            stat = name.split("_", 1)[1]
            if stat in ("mean", "mav", "sd", "rms"):
                expected = 2.0 * value
            elif stat == "energy":
                expected = 4.0 * value
            else:
                expected = value
            assert doubled[name] == pytest.approx(expected, rel=1e-9, abs=1e-12)


def test_signal_prenorm_removes_amplitude_dependence() -> None:
    seg = _segments(1)[0]

    base = segment_features(seg.samples, DB4, signal_prenorm=True)
    scaled = segment_features(3.0 * seg.samples + 0.1, DB4, signal_prenorm=True)

    np.testing.assert_allclose(scaled.values, base.values, rtol=1e-9, atol=1e-12)


def test_matrix_rows_follow_segment_order() -> None:
    segments = _segments(6, seed=2)
    order = [4, 0, 5, 2, 1, 3]

    matrix = build_feature_matrix(segments, DB4)
    permuted = build_feature_matrix([segments[i] for i in order], DB4)

    assert matrix.values.shape == (6, 54)
    np.testing.assert_array_equal(permuted.values, matrix.values[order])
    assert permuted.labels == tuple(matrix.labels[i] for i in order)
    assert matrix.sources[0] == ("s0", 0)


def test_extraction_is_deterministic() -> None:
    segments = _segments(3, seed=5)

    first = build_feature_matrix(segments, DB4)
    second = build_feature_matrix(segments, DB4)

    np.testing.assert_array_equal(first.values, second.values)

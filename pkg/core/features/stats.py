"""Per-band summary statistics (time-domain and nonlinear measures)."""

from __future__ import annotations

import numpy as np
from scipy import stats

from core.constants import DEGENERATE_VARIANCE
from core.exceptions import FeatureError


def zero_crossings(coeffs: np.ndarray) -> int:
    """Strict sign changes between consecutive nonzero values."""
    signs = np.sign(coeffs[coeffs != 0])
    return int(np.count_nonzero(signs[1:] != signs[:-1]))


def shannon_entropy(coeffs: np.ndarray, energy: float) -> float:
    """Entropy of the normalized energy distribution, 0 for a silent band."""
    if energy <= 0:
        return 0.0
    return float(stats.entropy(coeffs**2))


def band_features(coeffs: np.ndarray) -> np.ndarray:
    """Nine statistics, in STAT_NAMES order, for one coefficient band."""
    c = np.asarray(coeffs, dtype=np.float64).ravel()
    n = c.size
    if n == 0:
        msg = "cannot compute features of an empty band"
        raise FeatureError(msg)

    energy = float(np.dot(c, c))
    mean = float(np.mean(c))
    mav = float(np.mean(np.abs(c)))
    sd = float(np.std(c, ddof=1)) if n > 1 else 0.0
    rms = float(np.sqrt(energy / n))

    if float(np.var(c)) < DEGENERATE_VARIANCE:
        skew = 0.0
        kurt = 0.0
    else:
        skew = float(stats.skew(c, bias=True))
        kurt = float(stats.kurtosis(c, fisher=True, bias=True))

    values = np.array(
        [
            mean,
            mav,
            sd,
            rms,
            energy,
            float(zero_crossings(c)),
            skew,
            kurt,
            shannon_entropy(c, energy),
        ],
        dtype=np.float64,
    )
    return values

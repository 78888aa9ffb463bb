from __future__ import annotations

# Recording protocol
SEGMENT_DURATION_MS = 1640
PCM_SCALE = 32768.0

# Wavelet defaults
DEFAULT_WAVELET = "db4"
DWT_LEVELS = 5
SUPPORTED_WAVELETS: tuple[str, ...] = (
    "haar",
    "db1",
    "db2",
    "db3",
    "db4",
    "db5",
    "db6",
    "db7",
    "db8",
    "db9",
    "db10",
)
FILTER_TOLERANCE = 1e-12

# Feature set: order is part of the artifact contract
STAT_NAMES: tuple[str, ...] = (
    "mean",
    "mav",
    "sd",
    "rms",
    "energy",
    "zc",
    "skew",
    "kurt",
    "entropy",
)
DEGENERATE_VARIANCE = 1e-24

# SVM defaults
DEFAULT_C = 1.0
DEFAULT_TOLERANCE = 1e-3
DEFAULT_MAX_PASSES = 100
KERNEL_TAU = 1e-12

# Evaluation defaults
DEFAULT_FOLDS = 10
DEFAULT_SEED = 0

MANIFEST_COLUMNS: tuple[str, ...] = ("path", "label", "subject_id")


def band_names(levels: int = DWT_LEVELS) -> tuple[str, ...]:
    """Band identifiers in decomposition order: D1..Dn, An."""
    return tuple(f"D{k}" for k in range(1, levels + 1)) + (f"A{levels}",)


def feature_names(levels: int = DWT_LEVELS) -> tuple[str, ...]:
    return tuple(
        f"{band}_{stat}" for band in band_names(levels) for stat in STAT_NAMES
    )


FEATURE_NAMES = feature_names()
FEATURE_COUNT = len(FEATURE_NAMES)  # 54

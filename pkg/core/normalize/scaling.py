"""z-score and min-max column scaling, fitted on training rows only."""

from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np
from loguru import logger

from core.enums import NormalizerMethod
from core.exceptions import NormalizationError
from core.normalize.params import NormalizationParams

if TYPE_CHECKING:
    from core.features.matrix import FeatureMatrix


def _as_method(method: NormalizerMethod | str) -> NormalizerMethod:
    try:
        return NormalizerMethod(method)
    except ValueError:
        msg = f"unknown normalizer {method!r}"
        raise NormalizationError(msg) from None


def fit_normalizer(
    method: NormalizerMethod | str,
    matrix: FeatureMatrix,
) -> NormalizationParams:
    """Column statistics over the given rows; zscore uses the n-1 sd."""
    method = _as_method(method)
    values = np.asarray(matrix.values, dtype=np.float64)
    if values.ndim != 2 or values.shape[0] == 0:
        msg = "cannot fit a normalizer on an empty matrix"
        raise NormalizationError(msg)

    names = tuple(matrix.feature_names)
    col_min = values.min(axis=0)
    col_max = values.max(axis=0)
    constant = col_max == col_min

    if method is NormalizerMethod.none:
        return NormalizationParams(
            method=method,
            feature_names=names,
            constant_flags=np.zeros(len(names), dtype=bool),
        )

    if np.any(constant):
        logger.debug("{} constant feature column(s) in fit", int(constant.sum()))

    if method is NormalizerMethod.zscore:
        means = values.mean(axis=0)
        if values.shape[0] > 1:
            sds = values.std(axis=0, ddof=1)
        else:
            sds = np.zeros(values.shape[1])
        sds = np.where(constant, 0.0, sds)
        return NormalizationParams(
            method=method,
            feature_names=names,
            constant_flags=constant,
            means=means,
            sds=sds,
        )

    return NormalizationParams(
        method=method,
        feature_names=names,
        constant_flags=constant,
        mins=col_min,
        maxs=col_max,
    )


def apply_to_values(params: NormalizationParams, values: np.ndarray) -> np.ndarray:
    values = np.asarray(values, dtype=np.float64)
    if values.ndim != 2 or values.shape[1] != params.n_columns:
        msg = (
            f"column-count mismatch: params have {params.n_columns} columns, "
            f"matrix has shape {values.shape}"
        )
        raise NormalizationError(msg)

    if params.method is NormalizerMethod.none:
        return values.copy()

    flags = params.constant_flags
    if params.method is NormalizerMethod.zscore:
        center = params.means
        spread = params.sds
    else:
        center = params.mins
        spread = params.maxs - params.mins

    # out-of-range test values are extrapolated, never clipped
    safe = np.where(flags, 1.0, spread)
    out = (values - center) / safe
    out[:, flags] = 0.0
    return out


def apply_normalizer(
    params: NormalizationParams,
    matrix: FeatureMatrix,
) -> FeatureMatrix:
    if tuple(matrix.feature_names) != params.feature_names:
        if len(matrix.feature_names) != params.n_columns:
            msg = (
                f"column-count mismatch: params have {params.n_columns} columns, "
                f"matrix has {len(matrix.feature_names)}"
            )
        else:
            msg = "feature names differ from the fitted columns"
        raise NormalizationError(msg)
    return matrix.with_values(apply_to_values(params, matrix.values))


def zscore_signal(samples: np.ndarray) -> np.ndarray:
    """Standardize one raw signal (optional pre-DWT step); constant input maps to 0."""
    x = np.asarray(samples, dtype=np.float64)
    if x.size < 2 or np.all(x == x[0]):
        return np.zeros_like(x)
    return (x - x.mean()) / x.std(ddof=1)

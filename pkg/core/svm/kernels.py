from __future__ import annotations

import numpy as np

from core.enums import KernelKind
from core.exceptions import SvmError
from core.svm.models import KernelSpec


def _check_dims(x: np.ndarray, y: np.ndarray) -> None:
    if x.shape[-1] != y.shape[-1]:
        msg = f"dimension mismatch: {x.shape[-1]} vs {y.shape[-1]}"
        raise SvmError(msg)


def kernel_eval(spec: KernelSpec, x: np.ndarray, y: np.ndarray) -> float:
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.ndim != 1 or y.ndim != 1:
        msg = "kernel_eval expects two vectors"
        raise SvmError(msg)
    _check_dims(x, y)

    if spec.kind is KernelKind.linear:
        return float(np.dot(x, y))
    diff = x - y
    return float(np.exp(-spec.gamma * np.dot(diff, diff)))


def gram_matrix(spec: KernelSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """K[i, j] = kernel(a[i], b[j])."""
    a = np.atleast_2d(np.asarray(a, dtype=np.float64))
    b = np.atleast_2d(np.asarray(b, dtype=np.float64))
    _check_dims(a, b)

    if spec.kind is KernelKind.linear:
        return a @ b.T
    diff = a[:, None, :] - b[None, :, :]
    sq_dist = np.einsum("ijk,ijk->ij", diff, diff)
    return np.exp(-spec.gamma * sq_dist)


def default_gamma(values: np.ndarray) -> float:
    """1 / (d * mean column variance); falls back to 1/d for constant data."""
    values = np.atleast_2d(np.asarray(values, dtype=np.float64))
    d = values.shape[1]
    variance = float(np.mean(values.var(axis=0)))
    if not np.isfinite(variance) or variance <= 0:
        return 1.0 / d
    return 1.0 / (d * variance)

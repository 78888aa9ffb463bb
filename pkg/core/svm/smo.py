"""Sequential minimal optimization for the two-class soft-margin dual.

Solves  min_a  1/2 a'Qa - e'a  s.t.  0 <= a_i <= C_i,  y'a = 0,
with Q_ij = y_i y_j K(x_i, x_j). Each step picks the maximal violating pair
and updates those two multipliers analytically; the loop stops once the KKT
gap max_{I_up}(-y G) - min_{I_low}(-y G) is within the tolerance.
"""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np
from loguru import logger

from core.constants import KERNEL_TAU
from core.exceptions import SvmError
from core.svm.kernels import gram_matrix
from core.svm.models import KernelSpec, SvmModel, TrainConfig


def _as_signs(y: Sequence[float] | np.ndarray) -> np.ndarray:
    signs = np.asarray(y, dtype=np.float64).ravel()
    if not np.all(np.isin(signs, (-1.0, 1.0))):
        msg = "labels must be -1 or +1"
        raise SvmError(msg)
    return signs


def _select_working_set(
    alpha: np.ndarray,
    grad: np.ndarray,
    signs: np.ndarray,
    box: np.ndarray,
    order: np.ndarray,
) -> tuple[int, int, float]:
    score = -signs * grad
    up = ((signs > 0) & (alpha < box)) | ((signs < 0) & (alpha > 0))
    low = ((signs < 0) & (alpha < box)) | ((signs > 0) & (alpha > 0))

    # ties resolve by position in the seeded permutation
    up_idx = order[up[order]]
    low_idx = order[low[order]]
    if up_idx.size == 0 or low_idx.size == 0:
        return -1, -1, 0.0

    i = int(up_idx[np.argmax(score[up_idx])])
    j = int(low_idx[np.argmin(score[low_idx])])
    return i, j, float(score[i] - score[j])


def _update_pair(
    i: int,
    j: int,
    alpha: np.ndarray,
    grad: np.ndarray,
    signs: np.ndarray,
    box: np.ndarray,
    q: np.ndarray,
) -> None:
    c_i, c_j = box[i], box[j]
    old_i, old_j = alpha[i], alpha[j]

    if signs[i] != signs[j]:
        quad = q[i, i] + q[j, j] + 2.0 * q[i, j]
        if quad <= 0:
            quad = KERNEL_TAU
        delta = (-grad[i] - grad[j]) / quad
        diff = alpha[i] - alpha[j]
        alpha[i] += delta
        alpha[j] += delta
        if diff > 0:
            if alpha[j] < 0:
                alpha[j] = 0.0
                alpha[i] = diff
        elif alpha[i] < 0:
            alpha[i] = 0.0
            alpha[j] = -diff
        if diff > c_i - c_j:
            if alpha[i] > c_i:
                alpha[i] = c_i
                alpha[j] = c_i - diff
        elif alpha[j] > c_j:
            alpha[j] = c_j
            alpha[i] = c_j + diff
    else:
        quad = q[i, i] + q[j, j] - 2.0 * q[i, j]
        if quad <= 0:
            quad = KERNEL_TAU
        delta = (grad[i] - grad[j]) / quad
        total = alpha[i] + alpha[j]
        alpha[i] -= delta
        alpha[j] += delta
        if total > c_i:
            if alpha[i] > c_i:
                alpha[i] = c_i
                alpha[j] = total - c_i
        elif alpha[j] < 0:
            alpha[j] = 0.0
            alpha[i] = total
        if total > c_j:
            if alpha[j] > c_j:
                alpha[j] = c_j
                alpha[i] = total - c_j
        elif alpha[i] < 0:
            alpha[i] = 0.0
            alpha[j] = total

    grad += q[:, i] * (alpha[i] - old_i) + q[:, j] * (alpha[j] - old_j)


def _compute_bias(
    alpha: np.ndarray,
    grad: np.ndarray,
    signs: np.ndarray,
    box: np.ndarray,
) -> float:
    """Average y*G over free multipliers, else the midpoint of the feasible range."""
    y_grad = signs * grad
    at_upper = alpha >= box
    at_lower = alpha <= 0
    free = ~(at_upper | at_lower)

    if np.any(free):
        rho = float(np.mean(y_grad[free]))
    else:
        ub_mask = (at_upper & (signs < 0)) | (at_lower & (signs > 0))
        lb_mask = (at_upper & (signs > 0)) | (at_lower & (signs < 0))
        ub = float(np.min(y_grad[ub_mask])) if np.any(ub_mask) else np.inf
        lb = float(np.max(y_grad[lb_mask])) if np.any(lb_mask) else -np.inf
        rho = (ub + lb) / 2.0
    return -rho


def train_smo(
    x: np.ndarray,
    y: Sequence[float] | np.ndarray,
    kernel: KernelSpec,
    config: TrainConfig | None = None,
    *,
    feature_names: tuple[str, ...] = (),
) -> SvmModel:
    config = config or TrainConfig()
    x = np.atleast_2d(np.asarray(x, dtype=np.float64))
    signs = _as_signs(y)

    n = x.shape[0]
    if signs.size != n:
        msg = f"{n} rows but {signs.size} labels"
        raise SvmError(msg)
    if not np.all(np.isfinite(x)):
        msg = "non-finite features in training matrix"
        raise SvmError(msg)
    if np.all(signs > 0) or np.all(signs < 0):
        msg = "single-class training data: need at least one example per class"
        raise SvmError(msg)

    k = gram_matrix(kernel, x, x)
    q = (signs[:, None] * signs[None, :]) * k
    box = config.box(signs)

    alpha = np.zeros(n)
    grad = -np.ones(n)
    order = np.random.default_rng(config.seed).permutation(n)
    max_iter = config.max_passes * max(n, 2)

    iterations = 0
    while True:
        i, j, gap = _select_working_set(alpha, grad, signs, box, order)
        converged = i < 0 or gap <= config.tolerance
        if converged or iterations >= max_iter:
            break
        _update_pair(i, j, alpha, grad, signs, box, q)
        iterations += 1

    if not converged:
        logger.warning(
            "SMO stopped after {} iterations without reaching tolerance {}",
            iterations,
            config.tolerance,
        )
    else:
        logger.debug("SMO converged in {} iterations", iterations)

    bias = _compute_bias(alpha, grad, signs, box)
    support = alpha > 0
    if not np.any(support):
        msg = "training produced no support vectors"
        raise SvmError(msg)

    return SvmModel(
        support_vectors=x[support].copy(),
        dual_coeffs=alpha[support] * signs[support],
        bias=bias,
        kernel=kernel,
        C=config.C,
        feature_names=feature_names,
        positive_class_weight=config.positive_class_weight,
        iterations=iterations,
        converged=converged,
    )


def dual_objective(model: SvmModel) -> float:
    """Dual objective sum(a) - 1/2 a'Qa evaluated at the model's multipliers."""
    coeffs = model.dual_coeffs
    k = gram_matrix(model.kernel, model.support_vectors, model.support_vectors)
    return float(np.sum(np.abs(coeffs)) - 0.5 * coeffs @ k @ coeffs)

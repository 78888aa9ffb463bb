from __future__ import annotations

import numpy as np

from core.enums import Label
from core.exceptions import SvmError
from core.svm.kernels import gram_matrix
from core.svm.models import SvmModel


def _check_dimension(model: SvmModel, x: np.ndarray) -> None:
    if x.shape[-1] != model.dimension:
        msg = (
            f"dimension mismatch: model expects {model.dimension} features, "
            f"got {x.shape[-1]}"
        )
        raise SvmError(msg)


def decision_values(model: SvmModel, x: np.ndarray) -> np.ndarray:
    """f(x) = sum_i coef_i K(sv_i, x) + b for every row of ``x``."""
    x = np.atleast_2d(np.asarray(x, dtype=np.float64))
    _check_dimension(model, x)
    k = gram_matrix(model.kernel, x, model.support_vectors)
    return k @ model.dual_coeffs + model.bias


def label_for(model: SvmModel, decision: float) -> Label:
    # decision 0 belongs to the positive class
    return model.label_map[1 if decision >= 0 else -1]


def predict(model: SvmModel, x: np.ndarray) -> tuple[Label, float]:
    x = np.asarray(x, dtype=np.float64)
    if x.ndim != 1:
        msg = f"predict expects one feature vector, got shape {x.shape}"
        raise SvmError(msg)
    decision = float(decision_values(model, x)[0])
    return label_for(model, decision), decision


def predict_batch(model: SvmModel, x: np.ndarray) -> tuple[list[Label], np.ndarray]:
    decisions = decision_values(model, x)
    return [label_for(model, float(d)) for d in decisions], decisions

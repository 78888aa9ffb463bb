from __future__ import annotations

from typing import Any

import numpy as np

from core.enums import KernelKind, Label
from core.exceptions import SvmError
from core.svm.models import KernelSpec, SvmModel


def serialize_model(
    model: SvmModel,
    *,
    normalization_params_ref: str | None = None,
) -> dict[str, Any]:
    """Model fields as plain JSON values; floats keep their exact repr."""
    return {
        "kernel": model.kernel.kind.value,
        "gamma": model.kernel.gamma,
        "C": model.C,
        "positive_class_weight": model.positive_class_weight,
        "bias": model.bias,
        "support_vectors": [[float(v) for v in row] for row in model.support_vectors],
        "dual_coeffs": [float(c) for c in model.dual_coeffs],
        "feature_names": list(model.feature_names),
        "normalization_params_ref": normalization_params_ref,
        "label_map": {str(k): v.value for k, v in sorted(model.label_map.items())},
        "iterations": model.iterations,
        "converged": model.converged,
    }


def model_from_dict(raw: dict[str, Any]) -> SvmModel:
    try:
        kind = KernelKind(raw["kernel"])
        gamma = raw.get("gamma")
        kernel = KernelSpec(kind, None if gamma is None else float(gamma))
        raw_map = raw.get("label_map") or {"1": "positive", "-1": "negative"}
        label_map = {int(k): Label(v) for k, v in raw_map.items()}
        return SvmModel(
            support_vectors=np.array(raw["support_vectors"], dtype=np.float64),
            dual_coeffs=np.array(raw["dual_coeffs"], dtype=np.float64),
            bias=float(raw["bias"]),
            kernel=kernel,
            C=float(raw["C"]),
            feature_names=tuple(raw.get("feature_names", ())),
            positive_class_weight=float(raw.get("positive_class_weight", 1.0)),
            label_map=label_map,
            iterations=int(raw.get("iterations", 0)),
            converged=bool(raw.get("converged", True)),
        )
    except (KeyError, TypeError, ValueError) as e:
        msg = f"malformed model file: {e}"
        raise SvmError(msg) from e

from __future__ import annotations

from typing import Any

import numpy as np

from core.enums import NormalizerMethod
from core.exceptions import NormalizationError
from core.normalize.params import NormalizationParams


def serialize_normalization_params(params: NormalizationParams) -> dict[str, Any]:
    columns: list[dict[str, Any]] = []
    for j, name in enumerate(params.feature_names):
        if params.method is NormalizerMethod.zscore:
            columns.append(
                {"name": name, "m": float(params.means[j]), "sd": float(params.sds[j])}
            )
        elif params.method is NormalizerMethod.minmax:
            columns.append(
                {
                    "name": name,
                    "min": float(params.mins[j]),
                    "max": float(params.maxs[j]),
                }
            )
        else:
            columns.append({"name": name})

    return {
        "method": params.method.value,
        "columns": columns,
        "constant_flags": [bool(flag) for flag in params.constant_flags],
    }


def normalization_params_from_dict(raw: dict[str, Any]) -> NormalizationParams:
    try:
        method = NormalizerMethod(raw["method"])
        columns = list(raw["columns"])
        names = tuple(str(col["name"]) for col in columns)
        flags = np.array([bool(f) for f in raw["constant_flags"]], dtype=bool)

        if method is NormalizerMethod.zscore:
            return NormalizationParams(
                method=method,
                feature_names=names,
                constant_flags=flags,
                means=np.array([float(col["m"]) for col in columns]),
                sds=np.array([float(col["sd"]) for col in columns]),
            )
        if method is NormalizerMethod.minmax:
            return NormalizationParams(
                method=method,
                feature_names=names,
                constant_flags=flags,
                mins=np.array([float(col["min"]) for col in columns]),
                maxs=np.array([float(col["max"]) for col in columns]),
            )
        return NormalizationParams(
            method=method,
            feature_names=names,
            constant_flags=flags,
        )
    except (KeyError, TypeError, ValueError) as e:
        msg = f"malformed normalization params: {e}"
        raise NormalizationError(msg) from e

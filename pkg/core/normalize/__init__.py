from core.normalize.params import NormalizationParams
from core.normalize.scaling import (
    apply_normalizer,
    apply_to_values,
    fit_normalizer,
    zscore_signal,
)
from core.normalize.serialize import (
    normalization_params_from_dict,
    serialize_normalization_params,
)

__all__ = [
    "NormalizationParams",
    "apply_normalizer",
    "apply_to_values",
    "fit_normalizer",
    "normalization_params_from_dict",
    "serialize_normalization_params",
    "zscore_signal",
]

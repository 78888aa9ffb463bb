from core.features.export import write_feature_csv
from core.features.extract import (
    build_feature_matrix,
    extract_features,
    segment_features,
)
from core.features.matrix import FeatureMatrix, FeatureVector
from core.features.stats import band_features, shannon_entropy, zero_crossings

__all__ = [
    "FeatureMatrix",
    "FeatureVector",
    "band_features",
    "build_feature_matrix",
    "extract_features",
    "segment_features",
    "shannon_entropy",
    "write_feature_csv",
    "zero_crossings",
]

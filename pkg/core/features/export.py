from __future__ import annotations

import csv
from pathlib import Path

from core.features.matrix import FeatureMatrix
from core.wavelet.serialize import format_real

_TRAILING_COLUMNS = ("label", "subject_id", "segment_index")


def write_feature_csv(path: Path, matrix: FeatureMatrix) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(matrix.feature_names + _TRAILING_COLUMNS)
        for row, label, (subject_id, index) in zip(
            matrix.values, matrix.labels, matrix.sources, strict=True
        ):
            writer.writerow(
                [format_real(v) for v in row] + [label.value, subject_id, index]
            )

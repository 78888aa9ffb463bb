from __future__ import annotations

import csv
from pathlib import Path
from typing import Any

from core.wavelet.transform import WaveletDecomposition


def format_real(value: float) -> str:
    """17 significant digits: enough to round-trip any float64."""
    return format(float(value), ".17g")


def decomposition_rows(decomp: WaveletDecomposition) -> list[tuple[str, int, str]]:
    rows: list[tuple[str, int, str]] = []
    for name, band in zip(decomp.names, decomp.bands, strict=True):
        rows.extend((name, index, format_real(v)) for index, v in enumerate(band))
    return rows


def write_coefficients_csv(path: Path, decomp: WaveletDecomposition) -> None:
    """Write a `band,index,value` table for external plotting."""
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(("band", "index", "value"))
        writer.writerows(decomposition_rows(decomp))


def serialize_decomposition_shape(decomp: WaveletDecomposition) -> dict[str, Any]:
    return {
        "wavelet": decomp.spec.name,
        "boundary": decomp.boundary.value,
        "levels": decomp.levels,
        "original_length": decomp.original_length,
        "bands": dict(zip(decomp.names, decomp.band_lengths, strict=True)),
    }

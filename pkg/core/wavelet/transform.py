"""Multilevel DWT built from single-level two-channel filter bank steps."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import pywt

from core.constants import band_names
from core.enums import Boundary
from core.exceptions import WaveletError
from core.wavelet.filters import WaveletSpec

# pywt signal-extension modes for each boundary policy
_PYWT_MODES: dict[Boundary, str] = {
    Boundary.symmetric: "symmetric",
    Boundary.periodic: "periodization",
}


@dataclass(frozen=True, eq=False)
class WaveletDecomposition:
    bands: tuple[np.ndarray, ...]  # D1..Dn, An
    spec: WaveletSpec
    boundary: Boundary
    original_length: int

    @property
    def levels(self) -> int:
        return len(self.bands) - 1

    @property
    def band_lengths(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.bands)

    @property
    def names(self) -> tuple[str, ...]:
        return band_names(self.levels)

    @property
    def details(self) -> tuple[np.ndarray, ...]:
        return self.bands[:-1]

    @property
    def approximation(self) -> np.ndarray:
        return self.bands[-1]

    def level_input_lengths(self) -> tuple[int, ...]:
        """Input length seen by each analysis level, level 1 first."""
        return (self.original_length,) + self.band_lengths[: self.levels - 1]


def band_length(input_length: int, filter_length: int, boundary: Boundary) -> int:
    if boundary is Boundary.periodic:
        return -(-input_length // 2)
    return (input_length + filter_length - 1) // 2


def expected_band_lengths(
    length: int,
    filter_length: int,
    levels: int,
    boundary: Boundary,
) -> tuple[int, ...]:
    details: list[int] = []
    current = length
    for _ in range(levels):
        current = band_length(current, filter_length, boundary)
        details.append(current)
    return tuple(details) + (current,)


def _as_signal(signal: np.ndarray) -> np.ndarray:
    arr = np.asarray(signal, dtype=np.float64)
    if arr.ndim != 1:
        msg = f"expected a 1-D signal, got shape {arr.shape}"
        raise WaveletError(msg)
    return arr


def dwt_single_level(
    signal: np.ndarray,
    spec: WaveletSpec,
    boundary: Boundary = Boundary.symmetric,
) -> tuple[np.ndarray, np.ndarray]:
    """One analysis step: extend, filter with dec_lo/dec_hi, keep every 2nd."""
    x = _as_signal(signal)
    if x.size < 2:
        msg = f"signal shorter than 2 samples (got {x.size})"
        raise WaveletError(msg)

    approx, detail = pywt.dwt(x, spec.backend, mode=_PYWT_MODES[boundary])
    expected = band_length(x.size, spec.filter_length, boundary)
    if approx.size != expected or detail.size != expected:
        msg = (
            f"{spec.name}/{boundary}: got band length {approx.size}, "
            f"expected {expected}"
        )
        raise WaveletError(msg)
    return approx, detail


def dwt_decompose(
    signal: np.ndarray,
    spec: WaveletSpec,
    levels: int,
    boundary: Boundary = Boundary.symmetric,
) -> WaveletDecomposition:
    """Iterate the analysis step on the approximation channel."""
    x = _as_signal(signal)
    if levels < 1:
        msg = f"levels must be ≥ 1, got {levels}"
        raise WaveletError(msg)
    if x.size < 2**levels:
        msg = (
            f"too few samples for {levels} levels: {x.size} < {2**levels}"
        )
        raise WaveletError(msg)

    details: list[np.ndarray] = []
    approx = x
    for level in range(1, levels + 1):
        if boundary is Boundary.periodic and approx.size < spec.filter_length:
            msg = (
                f"too few samples at level {level}: input of {approx.size} is "
                f"shorter than the {spec.name} filter ({spec.filter_length})"
            )
            raise WaveletError(msg)
        if approx.size < 2:
            msg = f"too few samples at level {level}: {approx.size}"
            raise WaveletError(msg)
        approx, detail = dwt_single_level(approx, spec, boundary)
        details.append(detail)

    return WaveletDecomposition(
        bands=tuple(details) + (approx,),
        spec=spec,
        boundary=boundary,
        original_length=int(x.size),
    )


def check_consistency(decomp: WaveletDecomposition) -> None:
    if decomp.levels < 1:
        msg = "decomposition needs at least one detail band and one approximation"
        raise WaveletError(msg)
    expected = expected_band_lengths(
        decomp.original_length,
        decomp.spec.filter_length,
        decomp.levels,
        decomp.boundary,
    )
    if decomp.band_lengths != expected:
        msg = (
            f"inconsistent band lengths {decomp.band_lengths}, "
            f"expected {expected}"
        )
        raise WaveletError(msg)


def idwt_reconstruct(decomp: WaveletDecomposition) -> np.ndarray:
    """Synthesis from the coarsest level down, trimming to each level's input."""
    check_consistency(decomp)

    mode = _PYWT_MODES[decomp.boundary]
    targets = decomp.level_input_lengths()
    approx = np.asarray(decomp.approximation, dtype=np.float64)
    for level in range(decomp.levels, 0, -1):
        detail = np.asarray(decomp.bands[level - 1], dtype=np.float64)
        out = pywt.idwt(approx, detail, decomp.spec.backend, mode=mode)
        target = targets[level - 1]
        if out.size < target:
            msg = f"level {level} synthesis produced {out.size} < {target} samples"
            raise WaveletError(msg)
        approx = out[:target]
    return approx


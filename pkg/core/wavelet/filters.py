"""Orthogonal filter banks for the Daubechies family.

Taps come from PyWavelets' embedded coefficient tables and are checked against
the orthogonality identities before use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import pywt

from core.constants import FILTER_TOLERANCE, SUPPORTED_WAVELETS
from core.exceptions import WaveletError


@dataclass(frozen=True)
class WaveletSpec:
    name: str
    dec_lo: tuple[float, ...]
    dec_hi: tuple[float, ...]
    rec_lo: tuple[float, ...]
    rec_hi: tuple[float, ...]
    vanishing_moments: int

    def __post_init__(self) -> None:
        validate_filters(self)

    @property
    def filter_length(self) -> int:
        return len(self.dec_lo)

    @property
    def backend(self) -> pywt.Wavelet:
        """pywt wrapper around this spec's own taps."""
        return _filter_bank_wavelet(self)


def validate_filters(spec: WaveletSpec) -> None:
    lengths = {
        len(spec.dec_lo),
        len(spec.dec_hi),
        len(spec.rec_lo),
        len(spec.rec_hi),
    }
    if len(lengths) != 1:
        msg = f"{spec.name}: filters have unequal lengths {sorted(lengths)}"
        raise WaveletError(msg)

    size = lengths.pop()
    if size == 0 or size % 2:
        msg = f"{spec.name}: filter length must be even and positive, got {size}"
        raise WaveletError(msg)

    lo = np.asarray(spec.dec_lo)
    hi = np.asarray(spec.dec_hi)

    energy = float(np.sum(lo**2) + np.sum(hi**2))
    if abs(energy - 2.0) > FILTER_TOLERANCE:
        msg = f"{spec.name}: filter energy {energy!r} is not 2"
        raise WaveletError(msg)
    if abs(float(np.sum(lo)) - math.sqrt(2.0)) > FILTER_TOLERANCE:
        msg = f"{spec.name}: low-pass taps do not sum to sqrt(2)"
        raise WaveletError(msg)
    if abs(float(np.sum(hi))) > FILTER_TOLERANCE:
        msg = f"{spec.name}: high-pass taps do not sum to 0"
        raise WaveletError(msg)

    # quadrature mirror: |hi[k]| = |lo[F-1-k]| with alternating sign
    mirrored = lo[::-1]
    if not np.allclose(np.abs(hi), np.abs(mirrored), rtol=0, atol=FILTER_TOLERANCE):
        msg = f"{spec.name}: high-pass is not the quadrature mirror of low-pass"
        raise WaveletError(msg)
    alternation = hi * mirrored * (-1.0) ** np.arange(size)
    nonzero = alternation[np.abs(alternation) > FILTER_TOLERANCE]
    if nonzero.size and not (np.all(nonzero > 0) or np.all(nonzero < 0)):
        msg = f"{spec.name}: high-pass signs do not alternate"
        raise WaveletError(msg)


@lru_cache(maxsize=None)
def _pywt_wavelet(name: str) -> pywt.Wavelet:
    return pywt.Wavelet(name)


@lru_cache(maxsize=None)
def _filter_bank_wavelet(spec: WaveletSpec) -> pywt.Wavelet:
    bank = (spec.dec_lo, spec.dec_hi, spec.rec_lo, spec.rec_hi)
    return pywt.Wavelet(spec.name, filter_bank=bank)


@lru_cache(maxsize=None)
def get_wavelet(name: str) -> WaveletSpec:
    key = (name or "").strip().lower()
    if key not in SUPPORTED_WAVELETS:
        msg = (
            f"unsupported wavelet {name!r}; choose one of "
            f"{', '.join(SUPPORTED_WAVELETS)}"
        )
        raise WaveletError(msg)

    base = _pywt_wavelet(key)
    return WaveletSpec(
        name=key,
        dec_lo=tuple(float(v) for v in base.dec_lo),
        dec_hi=tuple(float(v) for v in base.dec_hi),
        rec_lo=tuple(float(v) for v in base.rec_lo),
        rec_hi=tuple(float(v) for v in base.rec_hi),
        vanishing_moments=int(base.vanishing_moments_psi or 0),
    )


def validate_all_wavelets() -> tuple[str, ...]:
    """Build and check every supported filter bank; the CLI runs this first."""
    return tuple(get_wavelet(name).name for name in SUPPORTED_WAVELETS)

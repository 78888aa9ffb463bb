from core.wavelet.filters import (
    WaveletSpec,
    get_wavelet,
    validate_all_wavelets,
    validate_filters,
)
from core.wavelet.serialize import (
    decomposition_rows,
    format_real,
    serialize_decomposition_shape,
    write_coefficients_csv,
)
from core.wavelet.transform import (
    WaveletDecomposition,
    band_length,
    check_consistency,
    dwt_decompose,
    dwt_single_level,
    expected_band_lengths,
    idwt_reconstruct,
)

__all__ = [
    "WaveletDecomposition",
    "WaveletSpec",
    "band_length",
    "check_consistency",
    "decomposition_rows",
    "dwt_decompose",
    "dwt_single_level",
    "expected_band_lengths",
    "format_real",
    "get_wavelet",
    "idwt_reconstruct",
    "serialize_decomposition_shape",
    "validate_all_wavelets",
    "validate_filters",
    "write_coefficients_csv",
]

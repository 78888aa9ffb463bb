"""16-bit PCM mono WAV codec."""

from __future__ import annotations

import re
from pathlib import Path

import numpy as np
import soundfile as sf

from core.constants import PCM_SCALE
from core.exceptions import WavFormatError

_PCM_MIN = -32768
_PCM_MAX = 32767
_SUBTYPE = "PCM_16"

# libsndfile pads a short chunk silently and only notes it in its header log
_SHORT_DATA = re.compile(r"^\s*data\b[^\n]*\(should be", re.I | re.M)


def read_wav(path: Path | str) -> tuple[np.ndarray, int]:
    """Decode a PCM 16-bit little-endian mono file into reals in [-1, 1).

    Each sample s maps to s / 32768. Multichannel input is rejected rather
    than downmixed.
    """
    path = Path(path)
    if not path.is_file():
        msg = f"audio file not found: {path}"
        raise WavFormatError(msg)

    try:
        info = sf.info(str(path))
    except RuntimeError as e:
        msg = f"{path}: unsupported or non-PCM WAV ({e})"
        raise WavFormatError(msg) from e

    if info.format != "WAV":
        msg = f"{path}: expected a RIFF WAV container, got {info.format}"
        raise WavFormatError(msg)
    if info.channels != 1:
        msg = f"{path}: expected mono audio, got {info.channels} channels"
        raise WavFormatError(msg)
    if info.subtype != _SUBTYPE:
        msg = f"{path}: expected 16-bit PCM, got {info.subtype}"
        raise WavFormatError(msg)
    if info.samplerate <= 0:
        msg = f"{path}: invalid sample rate {info.samplerate}"
        raise WavFormatError(msg)
    if _SHORT_DATA.search(info.extra_info or ""):
        msg = f"{path}: truncated data chunk ({info.frames} samples present)"
        raise WavFormatError(msg)
    if info.frames == 0:
        msg = f"{path}: zero samples"
        raise WavFormatError(msg)

    try:
        pcm, sample_rate = sf.read(str(path), dtype="int16", always_2d=False)
    except RuntimeError as e:
        msg = f"{path}: unreadable PCM data ({e})"
        raise WavFormatError(msg) from e
    return pcm.astype(np.float64) / PCM_SCALE, int(sample_rate)


def to_pcm16(samples: np.ndarray) -> np.ndarray:
    scaled = np.round(np.asarray(samples, dtype=np.float64) * PCM_SCALE)
    return np.clip(scaled, _PCM_MIN, _PCM_MAX).astype("<i2")


def write_wav(path: Path | str, samples: np.ndarray, sample_rate: int) -> None:
    """Encode reals in [-1, 1] as 16-bit PCM mono; out-of-range values clip."""
    if sample_rate <= 0:
        msg = f"invalid sample rate {sample_rate}"
        raise WavFormatError(msg)

    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    sf.write(
        str(path), to_pcm16(samples), sample_rate, format="WAV", subtype=_SUBTYPE
    )

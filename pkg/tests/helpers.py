from __future__ import annotations

import struct
from pathlib import Path

import numpy as np
from scipy.optimize import minimize

from core.enums import KernelKind
from core.svm import KernelSpec, gram_matrix

FREE_MARGIN = 1e-4


def solve_dual_qp(
    x: np.ndarray,
    y: np.ndarray,
    kernel: KernelSpec,
    C: float,
) -> np.ndarray:
    """Reference solution of the soft-margin dual via SLSQP."""
    k = gram_matrix(kernel, x, x)
    q = np.outer(y, y) * k
    n = len(y)

    result = minimize(
        lambda a: 0.5 * a @ q @ a - a.sum(),
        np.zeros(n),
        jac=lambda a: q @ a - np.ones(n),
        bounds=[(0.0, C)] * n,
        constraints=[{"type": "eq", "fun": lambda a: y @ a, "jac": lambda a: y}],
        method="SLSQP",
        options={"ftol": 1e-14, "maxiter": 2000},
    )
    return np.clip(result.x, 0.0, C)


def dual_value(alpha: np.ndarray, y: np.ndarray, k: np.ndarray) -> float:
    coeffs = alpha * y
    return float(alpha.sum() - 0.5 * coeffs @ k @ coeffs)


def reference_bias(
    alpha: np.ndarray,
    y: np.ndarray,
    k: np.ndarray,
    C: float,
) -> float | None:
    """Bias from the clearly free multipliers; None when the bias is not pinned."""
    free = (alpha > FREE_MARGIN * C) & (alpha < C * (1 - FREE_MARGIN))
    if not np.any(free):
        return None
    f_no_bias = k @ (alpha * y)
    return float(np.mean(y[free] - f_no_bias[free]))


def random_instance(
    rng: np.random.Generator,
    *,
    max_points: int = 8,
    max_dim: int = 4,
) -> tuple[np.ndarray, np.ndarray, KernelSpec, float]:
    n = int(rng.integers(2, max_points + 1))
    d = int(rng.integers(1, max_dim + 1))
    x = rng.standard_normal((n, d))
    y = rng.choice([-1.0, 1.0], size=n)
    y[0], y[1] = 1.0, -1.0
    if rng.random() < 0.5:
        kernel = KernelSpec(KernelKind.linear)
    else:
        kernel = KernelSpec(KernelKind.rbf, float(rng.uniform(0.2, 2.0)))
    C = float(rng.choice([0.5, 1.0, 10.0]))
    return x, y, kernel, C


def riff_bytes(
    *,
    channels: int = 1,
    sample_rate: int = 8000,
    bits: int = 16,
    format_code: int = 1,
    data: bytes = b"",
    declared_data_size: int | None = None,
) -> bytes:
    """Hand-built RIFF/WAVE container for malformed-file tests."""
    block_align = channels * bits // 8
    fmt = struct.pack(
        "<HHIIHH",
        format_code,
        channels,
        sample_rate,
        sample_rate * block_align,
        block_align,
        bits,
    )
    size = len(data) if declared_data_size is None else declared_data_size
    body = (
        b"WAVE"
        + b"fmt "
        + struct.pack("<I", len(fmt))
        + fmt
        + b"data"
        + struct.pack("<I", size)
        + data
    )
    return b"RIFF" + struct.pack("<I", len(body)) + body


def write_bytes(path: Path, payload: bytes) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(payload)
    return path


def write_manifest_text(path: Path, lines: list[str]) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path

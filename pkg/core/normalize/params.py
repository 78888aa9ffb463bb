from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from core.enums import NormalizerMethod
from core.exceptions import NormalizationError


@dataclass(frozen=True, eq=False)
class NormalizationParams:
    """Fitted per-column scaling state.

    zscore keeps (means, sds), minmax keeps (mins, maxs); the unused pair is
    None. A column is flagged constant when its fitted spread is zero.
    """

    method: NormalizerMethod
    feature_names: tuple[str, ...]
    constant_flags: np.ndarray
    means: np.ndarray | None = None
    sds: np.ndarray | None = None
    mins: np.ndarray | None = None
    maxs: np.ndarray | None = None

    def __post_init__(self) -> None:
        n = len(self.feature_names)
        if self.constant_flags.shape != (n,):
            msg = "constant_flags must have one entry per feature column"
            raise NormalizationError(msg)

        if self.method is NormalizerMethod.zscore:
            if self.means is None or self.sds is None:
                msg = "zscore params require means and sds"
                raise NormalizationError(msg)
            _require_shape(self.means, n, "means")
            _require_shape(self.sds, n, "sds")
            if np.any(self.sds < 0):
                msg = "zscore sd cannot be negative"
                raise NormalizationError(msg)
            if not np.array_equal(self.constant_flags, self.sds == 0):
                msg = "constant_flags must mark exactly the zero-sd columns"
                raise NormalizationError(msg)

        elif self.method is NormalizerMethod.minmax:
            if self.mins is None or self.maxs is None:
                msg = "minmax params require mins and maxs"
                raise NormalizationError(msg)
            _require_shape(self.mins, n, "mins")
            _require_shape(self.maxs, n, "maxs")
            if np.any(self.maxs < self.mins):
                msg = "minmax max_x cannot be below min_x"
                raise NormalizationError(msg)
            if not np.array_equal(self.constant_flags, self.maxs == self.mins):
                msg = "constant_flags must mark exactly the max_x == min_x columns"
                raise NormalizationError(msg)

    @property
    def n_columns(self) -> int:
        return len(self.feature_names)

    @property
    def constant_columns(self) -> tuple[str, ...]:
        return tuple(
            name
            for name, flag in zip(self.feature_names, self.constant_flags, strict=True)
            if flag
        )


def _require_shape(values: np.ndarray, n: int, label: str) -> None:
    if values.shape != (n,):
        msg = f"{label} must have {n} entries, got shape {values.shape}"
        raise NormalizationError(msg)

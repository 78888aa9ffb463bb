from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from core.enums import Label
from core.exceptions import EvaluationError


@dataclass(frozen=True)
class ConfusionMatrix:
    """Counts with COVID-19 positive as the positive class."""

    TP: int = 0
    FP: int = 0
    TN: int = 0
    FN: int = 0

    def __post_init__(self) -> None:
        for name in ("TP", "FP", "TN", "FN"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 0:
                msg = f"{name} must be a non-negative integer, got {value!r}"
                raise EvaluationError(msg)

    @property
    def total(self) -> int:
        return self.TP + self.FP + self.TN + self.FN

    def __add__(self, other: ConfusionMatrix) -> ConfusionMatrix:
        return ConfusionMatrix(
            TP=self.TP + other.TP,
            FP=self.FP + other.FP,
            TN=self.TN + other.TN,
            FN=self.FN + other.FN,
        )

    def swapped(self) -> ConfusionMatrix:
        """The same outcomes counted with the class convention reversed."""
        return ConfusionMatrix(TP=self.TN, FP=self.FN, TN=self.TP, FN=self.FP)

    def as_dict(self) -> dict[str, int]:
        return {"TP": self.TP, "FP": self.FP, "TN": self.TN, "FN": self.FN}


def confusion(
    true_labels: Sequence[Label],
    predicted: Sequence[Label],
) -> ConfusionMatrix:
    if len(true_labels) != len(predicted):
        msg = (
            f"length mismatch: {len(true_labels)} true labels vs "
            f"{len(predicted)} predictions"
        )
        raise EvaluationError(msg)
    if not true_labels:
        msg = "empty input: nothing to count"
        raise EvaluationError(msg)

    tp = fp = tn = fn = 0
    for truth, guess in zip(true_labels, predicted, strict=True):
        if truth == Label.positive:
            if guess == Label.positive:
                tp += 1
            else:
                fn += 1
        elif guess == Label.positive:
            fp += 1
        else:
            tn += 1
    return ConfusionMatrix(TP=tp, FP=fp, TN=tn, FN=fn)


def pooled(matrices: Iterable[ConfusionMatrix]) -> ConfusionMatrix:
    return sum(matrices, ConfusionMatrix())

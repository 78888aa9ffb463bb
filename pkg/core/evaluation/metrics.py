"""The five headline rates computed from a confusion matrix.

Every rate is kept as an exact fraction of counts so reports can show the
numerator and denominator next to the rounded percentage. A rate whose
denominator is zero is ``undefined`` rather than 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from core.evaluation.confusion import ConfusionMatrix
from core.exceptions import EvaluationError

UNDEFINED = "undefined"

# column order used by the summary tables
TABLE_ORDER = ("REC", "SPE", "ACC", "F1", "PRE")


def round_half_up_percent(value: Fraction) -> str:
    """Percentage with one decimal, halves rounded away from zero."""
    tenths = math.floor(value * 1000 + Fraction(1, 2))
    return f"{tenths // 10}.{tenths % 10}"


@dataclass(frozen=True)
class MetricValue:
    numerator: int
    denominator: int

    @property
    def defined(self) -> bool:
        return self.denominator > 0

    @property
    def fraction(self) -> Fraction | None:
        if not self.defined:
            return None
        return Fraction(self.numerator, self.denominator)

    @property
    def value(self) -> float | None:
        frac = self.fraction
        return None if frac is None else float(frac)

    @property
    def percent(self) -> str:
        frac = self.fraction
        return UNDEFINED if frac is None else round_half_up_percent(frac)

    def as_dict(self) -> dict[str, Any]:
        if not self.defined:
            return {
                "numerator": self.numerator,
                "denominator": self.denominator,
                "value": UNDEFINED,
                "percent": UNDEFINED,
            }
        return {
            "numerator": self.numerator,
            "denominator": self.denominator,
            "value": self.value,
            "percent": self.percent,
        }


@dataclass(frozen=True)
class MetricsReport:
    ACC: MetricValue
    REC: MetricValue
    SPE: MetricValue
    PRE: MetricValue
    F1: MetricValue

    def __post_init__(self) -> None:
        for name in TABLE_ORDER:
            frac = getattr(self, name).fraction
            if frac is not None and not 0 <= frac <= 1:
                msg = f"{name} outside [0, 1]: {frac}"
                raise EvaluationError(msg)

    def items(self) -> list[tuple[str, MetricValue]]:
        return [(name, getattr(self, name)) for name in TABLE_ORDER]

    def percents(self) -> dict[str, str]:
        return {name: value.percent for name, value in self.items()}

    def as_dict(self) -> dict[str, Any]:
        return {name: value.as_dict() for name, value in self.items()}


def metrics(cm: ConfusionMatrix) -> MetricsReport:
    if cm.total < 1:
        msg = "metrics need at least one evaluated segment"
        raise EvaluationError(msg)

    rec = MetricValue(cm.TP, cm.TP + cm.FN)
    pre = MetricValue(cm.TP, cm.TP + cm.FP)
    # 2PR/(P+R) reduces to 2TP/(2TP+FP+FN); undefined unless P and R exist and TP > 0
    if rec.defined and pre.defined and cm.TP > 0:
        f1 = MetricValue(2 * cm.TP, 2 * cm.TP + cm.FP + cm.FN)
    else:
        f1 = MetricValue(0, 0)

    return MetricsReport(
        ACC=MetricValue(cm.TP + cm.TN, cm.total),
        REC=rec,
        SPE=MetricValue(cm.TN, cm.TN + cm.FP),
        PRE=pre,
        F1=f1,
    )

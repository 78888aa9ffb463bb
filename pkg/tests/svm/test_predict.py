from __future__ import annotations

import numpy as np
import pytest

from core.enums import KernelKind, Label
from core.exceptions import SvmError
from core.svm import (
    KernelSpec,
    SvmModel,
    TrainConfig,
    predict,
    predict_batch,
    train_smo,
)


@pytest.fixture
def line_model() -> SvmModel:
    """Two points at -1 and +1; the trained decision function is f(x) = x."""
    return train_smo(
        np.array([[-1.0], [1.0]]),
        [-1.0, 1.0],
        KernelSpec(KernelKind.linear),
        TrainConfig(C=10.0),
    )


@pytest.mark.parametrize(
    ("x", "label", "decision"),
    [
        (2.0, Label.positive, 2.0),
        (0.0, Label.positive, 0.0),
        (-2.0, Label.negative, -2.0),
    ],
)
def test_predict_on_the_line_model(
    line_model: SvmModel, x: float, label: Label, decision: float
) -> None:
    got_label, got_decision = predict(line_model, np.array([x]))

    assert got_label is label
    assert got_decision == pytest.approx(decision, abs=1e-9)


def test_predict_batch_matches_single_predictions(line_model: SvmModel) -> None:
    xs = np.array([[-3.0], [0.5], [4.0]])

    labels, decisions = predict_batch(line_model, xs)

    assert labels == [predict(line_model, row)[0] for row in xs]
    np.testing.assert_allclose(decisions, [-3.0, 0.5, 4.0], atol=1e-9)


def test_predict_rejects_wrong_dimension(line_model: SvmModel) -> None:
    with pytest.raises(SvmError, match="dimension mismatch"):
        predict(line_model, np.array([1.0, 2.0]))


def test_predict_expects_a_single_vector(line_model: SvmModel) -> None:
    with pytest.raises(SvmError, match="one feature vector"):
        predict(line_model, np.array([[1.0], [2.0]]))

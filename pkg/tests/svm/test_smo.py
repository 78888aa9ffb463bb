from __future__ import annotations

import numpy as np
import pytest

from core.enums import KernelKind
from core.exceptions import SvmError
from core.svm import (
    KernelSpec,
    SvmModel,
    TrainConfig,
    decision_values,
    dual_objective,
    gram_matrix,
    predict_batch,
    train_smo,
)
from tests.helpers import dual_value, random_instance, reference_bias, solve_dual_qp

LINEAR = KernelSpec(KernelKind.linear)
TIGHT = TrainConfig(C=10.0, tolerance=1e-9, max_passes=10_000)


def _two_blobs(n: int = 40, seed: int = 0) -> tuple[np.ndarray, np.ndarray]:
    rng = np.random.default_rng(seed)
    y = np.where(np.arange(n) % 2 == 0, 1.0, -1.0)
    x = rng.standard_normal((n, 2)) + y[:, None] * 1.2
    return x, y


def test_two_point_analytic_solution() -> None:
    x = np.array([[-1.0], [1.0]])

    model = train_smo(x, [-1.0, 1.0], LINEAR, TrainConfig(C=10.0))

    assert model.n_support == 2
    np.testing.assert_allclose(np.abs(model.dual_coeffs), [0.5, 0.5], atol=1e-6)
    assert model.bias == pytest.approx(0.0, abs=1e-6)
    assert dual_objective(model) == pytest.approx(0.5)
    assert model.converged


def test_xor_is_separated_by_rbf() -> None:
    x = np.array([[0.0, 0.0], [1.0, 1.0], [0.0, 1.0], [1.0, 0.0]])
    y = np.array([-1.0, -1.0, 1.0, 1.0])

    model = train_smo(x, y, KernelSpec(KernelKind.rbf, 1.0), TrainConfig(C=10.0))
    labels, _ = predict_batch(model, x)

    assert [label.sign for label in labels] == [-1, -1, 1, 1]


def test_single_class_input_is_rejected() -> None:
    with pytest.raises(SvmError, match="single-class"):
        train_smo(np.ones((3, 2)), [1.0, 1.0, 1.0], LINEAR)


def test_non_finite_features_are_rejected() -> None:
    x = np.array([[0.0, 1.0], [np.nan, 2.0]])

    with pytest.raises(SvmError, match="non-finite"):
        train_smo(x, [1.0, -1.0], LINEAR)


def test_labels_must_be_signs() -> None:
    with pytest.raises(SvmError, match="labels"):
        train_smo(np.ones((2, 1)), [1.0, 0.0], LINEAR)


def test_invalid_train_config_is_rejected() -> None:
    with pytest.raises(SvmError, match="C must be"):
        TrainConfig(C=0.0)
    with pytest.raises(SvmError, match="max_passes"):
        TrainConfig(max_passes=0)


def test_model_invariants_hold_after_training() -> None:
    x, y = _two_blobs()
    config = TrainConfig(C=1.0)

    model = train_smo(x, y, KernelSpec(KernelKind.rbf, 0.5), config)

    assert np.all(np.abs(model.dual_coeffs) <= config.C + 1e-12)
    assert abs(model.dual_coeffs.sum()) <= 1e-6


def test_kkt_conditions_hold_within_tolerance() -> None:
    x, y = _two_blobs(seed=3)
    config = TrainConfig(C=1.0, tolerance=1e-3)

    model = train_smo(x, y, KernelSpec(KernelKind.rbf, 0.5), config)
    margins = y * decision_values(model, x)
    slack = 2 * config.tolerance

    coeff_of = {
        tuple(sv): abs(c)
        for sv, c in zip(model.support_vectors, model.dual_coeffs, strict=True)
    }
    for row, margin in zip(x, margins, strict=True):
        alpha = coeff_of.get(tuple(row), 0.0)
        if alpha == 0.0:
            assert margin >= 1 - slack
        elif alpha >= config.C:
            assert margin <= 1 + slack
        else:
            assert margin == pytest.approx(1.0, abs=slack)


def test_training_is_deterministic_for_a_seed() -> None:
    x, y = _two_blobs(seed=4)
    kernel = KernelSpec(KernelKind.rbf, 0.3)

    first = train_smo(x, y, kernel, TrainConfig(seed=11))
    second = train_smo(x, y, kernel, TrainConfig(seed=11))

    np.testing.assert_array_equal(first.dual_coeffs, second.dual_coeffs)
    assert first.bias == second.bias


def test_flipping_labels_negates_the_decision_function() -> None:
    x, y = _two_blobs(seed=5)
    kernel = KernelSpec(KernelKind.rbf, 0.7)
    queries = np.random.default_rng(6).standard_normal((30, 2))

    model = train_smo(x, y, kernel, TrainConfig(seed=2))
    flipped = train_smo(x, -y, kernel, TrainConfig(seed=2))

    np.testing.assert_allclose(
        decision_values(flipped, queries), -decision_values(model, queries), atol=1e-12
    )


def test_positive_class_weight_widens_the_positive_box() -> None:
    x, y = _two_blobs(seed=7)
    config = TrainConfig(C=0.1, positive_class_weight=3.0)

    model = train_smo(x, y, LINEAR, config)

    np.testing.assert_allclose(config.box(y), np.where(y > 0, 0.3, 0.1))
    positive = model.dual_coeffs > 0
    assert np.all(model.dual_coeffs[positive] <= 0.3 + 1e-12)
    assert np.all(-model.dual_coeffs[~positive] <= 0.1 + 1e-12)
    assert model.positive_class_weight == 3.0


def test_iteration_budget_is_reported() -> None:
    x, y = _two_blobs(n=60, seed=8)
    config = TrainConfig(C=100.0, tolerance=1e-12, max_passes=1)

    model = train_smo(x, y, KernelSpec(KernelKind.rbf, 0.5), config)

    assert not model.converged
    assert model.iterations == 60


def test_model_rejects_broken_dual_coefficients() -> None:
    with pytest.raises(SvmError, match="sum to zero"):
        SvmModel(
            support_vectors=np.ones((2, 1)),
            dual_coeffs=np.array([0.5, 0.2]),
            bias=0.0,
            kernel=LINEAR,
            C=1.0,
        )
    with pytest.raises(SvmError, match="box constraint"):
        SvmModel(
            support_vectors=np.ones((2, 1)),
            dual_coeffs=np.array([2.0, -2.0]),
            bias=0.0,
            kernel=LINEAR,
            C=1.0,
        )


def test_smo_matches_a_reference_qp_solver() -> None:
    rng = np.random.default_rng(2024)
    compared = 0

    for _ in range(200):
        x, y, kernel, C = random_instance(rng)
        config = TrainConfig(C=C, tolerance=1e-9, max_passes=10_000)
        model = train_smo(x, y, kernel, config)

        k = gram_matrix(kernel, x, x)
        alpha_ref = solve_dual_qp(x, y, kernel, C)
        ref_value = dual_value(alpha_ref, y, k)
        scale = max(1.0, abs(ref_value))
        assert dual_objective(model) == pytest.approx(ref_value, abs=1e-6 * scale)

        bias_ref = reference_bias(alpha_ref, y, k, C)
        if bias_ref is None:
            continue
        f_ref = k @ (alpha_ref * y) + bias_ref
        decided = np.abs(f_ref) > 1e-3
        ours = decision_values(model, x)
        assert np.array_equal(np.sign(ours[decided]), np.sign(f_ref[decided]))
        compared += int(decided.sum())

    assert compared > 0


def test_dual_optimum_on_fixed_instance() -> None:
    x, y = _two_blobs(n=12, seed=9)

    model = train_smo(x, y, LINEAR, TIGHT)
    alpha_ref = solve_dual_qp(x, y, LINEAR, TIGHT.C)

    expected = dual_value(alpha_ref, y, gram_matrix(LINEAR, x, x))
    assert dual_objective(model) == pytest.approx(expected, rel=1e-6)

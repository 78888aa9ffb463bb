from __future__ import annotations

from collections import defaultdict

import numpy as np
import pytest

from core.enums import Label, SplitMode
from core.evaluation import FoldPlan, make_folds
from core.exceptions import EvaluationError
from core.features import FeatureMatrix


def _matrix(n_pos: int, n_neg: int, subjects_per_class: int | None = None):
    labels = (Label.positive,) * n_pos + (Label.negative,) * n_neg
    sources = []
    for i, label in enumerate(labels):
        prefix = "p" if label is Label.positive else "n"
        subject = i if label is Label.positive else i - n_pos
        if subjects_per_class is not None:
            subject %= subjects_per_class
        sources.append((f"{prefix}{subject}", i))
    return FeatureMatrix(
        values=np.zeros((len(labels), 2)),
        feature_names=("a", "b"),
        labels=labels,
        sources=tuple(sources),
    )


def test_stratified_folds_on_121_segments() -> None:
    matrix = _matrix(48, 73)

    plan = make_folds(matrix, 10, SplitMode.segment_stratified, seed=0)

    covered = np.concatenate([plan.test_indices(f) for f in range(10)])
    assert sorted(covered.tolist()) == list(range(121))
    for fold in range(10):
        labels = [matrix.labels[i] for i in plan.test_indices(fold)]
        assert labels.count(Label.positive) in (4, 5)
        assert labels.count(Label.negative) in (7, 8)


def test_train_and_test_indices_partition_rows() -> None:
    plan = make_folds(_matrix(10, 12), 4, seed=3)

    for fold in range(4):
        test = set(plan.test_indices(fold).tolist())
        train = set(plan.train_indices(fold).tolist())
        assert not test & train
        assert test | train == set(range(22))
    assert sum(plan.fold_sizes()) == 22 == plan.n_rows


def test_same_seed_gives_the_same_plan() -> None:
    matrix = _matrix(48, 73)

    assert make_folds(matrix, 10, seed=5) == make_folds(matrix, 10, seed=5)


def test_one_fold_is_rejected() -> None:
    with pytest.raises(EvaluationError, match="folds must be"):
        make_folds(_matrix(3, 3), 1)
    with pytest.raises(EvaluationError, match="folds must be"):
        FoldPlan(k=1, assignments=(0, 0), mode=SplitMode.segment_stratified, seed=0)


def test_more_folds_than_segments_is_rejected() -> None:
    with pytest.raises(EvaluationError, match="exceed the number of segments"):
        make_folds(_matrix(2, 2), 5)


def test_subject_grouped_folds_keep_subjects_together() -> None:
    matrix = _matrix(30, 30, subjects_per_class=6)

    plan = make_folds(matrix, 4, SplitMode.subject_grouped, seed=1)

    folds_of: dict[str, set[int]] = defaultdict(set)
    for (subject, _), fold in zip(matrix.sources, plan.assignments, strict=True):
        folds_of[subject].add(fold)
    assert all(len(folds) == 1 for folds in folds_of.values())
    assert all(size > 0 for size in plan.fold_sizes())


def test_subject_grouped_needs_enough_subjects() -> None:
    matrix = _matrix(8, 8, subjects_per_class=2)

    with pytest.raises(EvaluationError, match="needs ≥ 5 subjects"):
        make_folds(matrix, 5, SplitMode.subject_grouped)


def test_small_class_warning_is_logged(log_messages: list[str]) -> None:
    make_folds(_matrix(3, 20), 5)

    assert any(m.startswith("WARNING: fold planning") for m in log_messages)

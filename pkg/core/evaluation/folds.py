from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
from loguru import logger
from sklearn.model_selection import StratifiedGroupKFold, StratifiedKFold

from core.enums import SplitMode
from core.exceptions import EvaluationError
from core.features.matrix import FeatureMatrix


@dataclass(frozen=True)
class FoldPlan:
    k: int
    assignments: tuple[int, ...]  # segment row -> fold id
    mode: SplitMode
    seed: int

    def __post_init__(self) -> None:
        if self.k < 2:
            msg = f"folds must be ≥ 2, got {self.k}"
            raise EvaluationError(msg)
        if any(not 0 <= fold < self.k for fold in self.assignments):
            msg = f"fold ids must lie in [0, {self.k})"
            raise EvaluationError(msg)

    @property
    def n_rows(self) -> int:
        return len(self.assignments)

    def test_indices(self, fold: int) -> np.ndarray:
        return np.flatnonzero(np.asarray(self.assignments) == fold)

    def train_indices(self, fold: int) -> np.ndarray:
        return np.flatnonzero(np.asarray(self.assignments) != fold)

    def fold_sizes(self) -> list[int]:
        return [int(n) for n in np.bincount(self.assignments, minlength=self.k)]


def _splitter_folds(
    matrix: FeatureMatrix,
    k: int,
    mode: SplitMode,
    seed: int,
) -> list[np.ndarray]:
    y = matrix.signs
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        try:
            if mode is SplitMode.subject_grouped:
                splitter = StratifiedGroupKFold(
                    n_splits=k, shuffle=True, random_state=seed
                )
                splits = splitter.split(matrix.values, y, groups=matrix.subject_ids)
            else:
                splitter = StratifiedKFold(n_splits=k, shuffle=True, random_state=seed)
                splits = splitter.split(matrix.values, y)
            tests = [test for _, test in splits]
        except ValueError as e:
            raise EvaluationError(str(e)) from e
    for w in caught:
        logger.warning("fold planning: {}", w.message)
    return tests


def make_folds(
    matrix: FeatureMatrix,
    k: int,
    mode: SplitMode = SplitMode.segment_stratified,
    seed: int = 0,
) -> FoldPlan:
    """Assign every segment to exactly one of ``k`` folds.

    ``segment_stratified`` keeps per-fold class counts within one of an even
    split. ``subject_grouped`` never lets a subject's segments span two folds.
    The same (matrix, k, mode, seed) always yields the same plan.
    """
    if k < 2:
        msg = f"folds must be ≥ 2, got {k}"
        raise EvaluationError(msg)

    n = matrix.n_rows
    if mode is SplitMode.subject_grouped:
        n_subjects = len(set(matrix.subject_ids))
        if k > n_subjects:
            msg = f"subject_grouped split needs ≥ {k} subjects, got {n_subjects}"
            raise EvaluationError(msg)
    elif k > n:
        msg = f"folds ({k}) exceed the number of segments ({n})"
        raise EvaluationError(msg)

    assignments = np.full(n, -1, dtype=int)
    for fold, test in enumerate(_splitter_folds(matrix, k, mode, seed)):
        assignments[test] = fold

    sizes = np.bincount(assignments, minlength=k)
    empty = [int(f) for f in np.flatnonzero(sizes == 0)]
    if empty:
        msg = f"fold plan left folds {empty} empty; use fewer folds"
        raise EvaluationError(msg)

    logger.debug("Planned {} folds ({}), sizes {}", k, mode.value, sizes.tolist())
    return FoldPlan(
        k=k,
        assignments=tuple(int(a) for a in assignments),
        mode=mode,
        seed=seed,
    )

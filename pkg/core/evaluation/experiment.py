"""Cross-validated train/predict runs over a manifest.

Each stage failure is re-raised as ``StageError`` tagged with the owning
stage and, inside the fold loop, the fold number.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass, field, replace

from loguru import logger

from core.config import ExperimentConfig
from core.enums import KernelKind, Label, NormalizerMethod, SplitMode
from core.evaluation.confusion import ConfusionMatrix, confusion, pooled
from core.evaluation.folds import FoldPlan, make_folds
from core.evaluation.metrics import MetricsReport, metrics
from core.exceptions import CoughDwtError, StageError
from core.features import FeatureMatrix, build_feature_matrix
from core.models import DatasetManifest
from core.normalize import NormalizationParams, apply_normalizer, fit_normalizer
from core.svm import (
    KernelSpec,
    SvmModel,
    TrainConfig,
    default_gamma,
    predict_batch,
    train_smo,
)
from core.wavelet import get_wavelet
from data.loaders import require_both_classes
from data.segmentation import SegmentCorpus, load_segments

LEAKAGE_WARNING = (
    "segment_stratified folds can place segments of one subject in both the "
    "training and the test side; use --split subject_grouped to avoid identity "
    "leakage"
)
PAPER_MODE_WARNING = (
    "paper-mode fits the normalizer on all segments, held-out folds included"
)


def _stage_error(error: CoughDwtError, fold: int | None = None) -> StageError:
    if isinstance(error, StageError):
        return error
    return StageError(cause=error, stage=error.stage, fold=fold)


@dataclass(frozen=True)
class DatasetSummary:
    n_files: int
    n_segments: int
    sample_rate: int
    segments_per_class: dict[str, int]
    subjects_per_class: dict[str, list[str]]
    metadata: dict[str, dict[str, int]] = field(default_factory=dict)

    @classmethod
    def build(
        cls,
        manifest: DatasetManifest,
        corpus: SegmentCorpus,
    ) -> DatasetSummary:
        seg_counts = Counter(seg.label for seg in corpus.segments)
        subjects = manifest.subjects

        metadata: dict[str, Counter[str]] = {}
        for entry in manifest.entries:
            for key, value in entry.metadata.items():
                if value:
                    metadata.setdefault(key, Counter())[value] += 1

        return cls(
            n_files=len(manifest),
            n_segments=len(corpus.segments),
            sample_rate=corpus.sample_rate,
            segments_per_class={
                label.value: seg_counts[label] for label in Label
            },
            subjects_per_class={
                label.value: list(subjects[label]) for label in Label
            },
            metadata={
                key: dict(sorted(counts.items()))
                for key, counts in sorted(metadata.items())
            },
        )


@dataclass(frozen=True)
class FoldResult:
    fold: int
    n_train: int
    n_test: int
    confusion: ConfusionMatrix
    metrics: MetricsReport
    n_support: int
    gamma: float | None
    converged: bool
    constant_columns: tuple[str, ...] = ()


@dataclass(frozen=True)
class ExperimentReport:
    config: ExperimentConfig
    protocol: str
    dataset: DatasetSummary
    folds: tuple[FoldResult, ...]
    pooled: ConfusionMatrix
    pooled_metrics: MetricsReport
    warnings: tuple[str, ...] = ()


@dataclass(frozen=True)
class FittedPipeline:
    """Normalizer state and SVM trained on one set of rows."""

    params: NormalizationParams
    model: SvmModel


def protocol_label(config: ExperimentConfig) -> str:
    fit = (
        "normalizer fitted on all segments (paper-mode)"
        if config.paper_mode
        else "normalizer fitted on each training fold"
    )
    return (
        f"{config.folds}-fold {config.split.value} cross-validation, "
        f"pooled confusion, {fit}"
    )


def extract_matrix(
    manifest: DatasetManifest,
    config: ExperimentConfig,
) -> tuple[FeatureMatrix, SegmentCorpus]:
    """Decode, segment and featurize every manifest entry."""
    try:
        corpus = load_segments(manifest, config.segment_duration_ms)
        spec = get_wavelet(config.wavelet)
        matrix = build_feature_matrix(
            corpus.segments,
            spec,
            levels=config.levels,
            boundary=config.boundary,
            signal_prenorm=config.signal_prenorm,
        )
    except CoughDwtError as e:
        raise _stage_error(e) from e
    return matrix, corpus


def _kernel_for(config: ExperimentConfig, normalized: FeatureMatrix) -> KernelSpec:
    if config.kernel is KernelKind.linear:
        return KernelSpec(KernelKind.linear)
    gamma = config.gamma
    if gamma is None:
        gamma = default_gamma(normalized.values)
    return KernelSpec(KernelKind.rbf, gamma)


def train_config(config: ExperimentConfig) -> TrainConfig:
    return TrainConfig(
        C=config.C,
        tolerance=config.tolerance,
        max_passes=config.max_passes,
        seed=config.seed,
        positive_class_weight=config.positive_class_weight,
    )


def fit_pipeline(
    train: FeatureMatrix,
    config: ExperimentConfig,
    *,
    params: NormalizationParams | None = None,
    fold: int | None = None,
) -> FittedPipeline:
    """Fit the normalizer (unless ``params`` is given) and train the SVM."""
    try:
        if params is None:
            params = fit_normalizer(config.normalizer, train)
        normalized = apply_normalizer(params, train)
        model = train_smo(
            normalized.values,
            normalized.signs,
            _kernel_for(config, normalized),
            train_config(config),
            feature_names=normalized.feature_names,
        )
    except CoughDwtError as e:
        raise _stage_error(e, fold) from e
    return FittedPipeline(params=params, model=model)


def predict_rows(
    fitted: FittedPipeline,
    matrix: FeatureMatrix,
    *,
    fold: int | None = None,
) -> list[Label]:
    try:
        normalized = apply_normalizer(fitted.params, matrix)
        labels, _ = predict_batch(fitted.model, normalized.values)
    except CoughDwtError as e:
        raise _stage_error(e, fold) from e
    return labels


def cross_validate(
    matrix: FeatureMatrix,
    config: ExperimentConfig,
    plan: FoldPlan,
) -> tuple[list[FoldResult], list[str]]:
    """Run every fold of ``plan``; returns per-fold results and warnings."""
    warnings: list[str] = []
    global_params: NormalizationParams | None = None
    if config.paper_mode:
        try:
            global_params = fit_normalizer(config.normalizer, matrix)
        except CoughDwtError as e:
            raise _stage_error(e) from e

    results: list[FoldResult] = []
    for fold in range(plan.k):
        train = matrix.take(plan.train_indices(fold))
        test = matrix.take(plan.test_indices(fold))
        fitted = fit_pipeline(train, config, params=global_params, fold=fold)
        predicted = predict_rows(fitted, test, fold=fold)
        try:
            cm = confusion(test.labels, predicted)
            fold_metrics = metrics(cm)
        except CoughDwtError as e:
            raise _stage_error(e, fold) from e

        constant = tuple(
            name
            for name, flag in zip(
                fitted.params.feature_names,
                fitted.params.constant_flags,
                strict=True,
            )
            if flag
        )
        if constant and config.normalizer is not NormalizerMethod.none:
            warnings.append(
                f"fold {fold}: constant feature columns mapped to 0: "
                f"{', '.join(constant)}"
            )
        if not fitted.model.converged:
            warnings.append(
                f"fold {fold}: SMO stopped at the iteration budget "
                f"({fitted.model.iterations} iterations)"
            )

        logger.debug(
            "fold {}: train={} test={} support={} acc={}",
            fold,
            train.n_rows,
            test.n_rows,
            fitted.model.n_support,
            fold_metrics.ACC.percent,
        )
        results.append(
            FoldResult(
                fold=fold,
                n_train=train.n_rows,
                n_test=test.n_rows,
                confusion=cm,
                metrics=fold_metrics,
                n_support=fitted.model.n_support,
                gamma=fitted.model.kernel.gamma,
                converged=fitted.model.converged,
                constant_columns=constant,
            )
        )
    return results, warnings


def plan_folds(matrix: FeatureMatrix, config: ExperimentConfig) -> FoldPlan:
    try:
        return make_folds(matrix, config.folds, config.split, config.seed)
    except CoughDwtError as e:
        raise _stage_error(e) from e


def evaluate_matrix(
    matrix: FeatureMatrix,
    config: ExperimentConfig,
    dataset: DatasetSummary,
    *,
    plan: FoldPlan | None = None,
    extra_warnings: Sequence[str] = (),
) -> ExperimentReport:
    """Cross-validate an already extracted feature matrix."""
    plan = plan or plan_folds(matrix, config)
    warnings = list(extra_warnings)
    if config.split is SplitMode.segment_stratified:
        warnings.append(LEAKAGE_WARNING)
    if config.paper_mode:
        warnings.append(PAPER_MODE_WARNING)

    folds, fold_warnings = cross_validate(matrix, config, plan)
    warnings.extend(fold_warnings)

    total = pooled(result.confusion for result in folds)
    try:
        pooled_metrics = metrics(total)
    except CoughDwtError as e:
        raise _stage_error(e) from e

    logger.info(
        "{} normalizer, {}: pooled ACC {}%",
        config.normalizer.value,
        plan.mode.value,
        pooled_metrics.ACC.percent,
    )
    return ExperimentReport(
        config=config,
        protocol=protocol_label(config),
        dataset=dataset,
        folds=tuple(folds),
        pooled=total,
        pooled_metrics=pooled_metrics,
        warnings=tuple(warnings),
    )


def run_experiment(
    manifest: DatasetManifest,
    config: ExperimentConfig,
) -> ExperimentReport:
    try:
        require_both_classes(manifest)
    except CoughDwtError as e:
        raise _stage_error(e) from e

    matrix, corpus = extract_matrix(manifest, config)
    if config.split is SplitMode.segment_stratified:
        logger.warning(LEAKAGE_WARNING)
    return evaluate_matrix(
        matrix,
        config,
        DatasetSummary.build(manifest, corpus),
        extra_warnings=corpus.warnings,
    )


@dataclass(frozen=True)
class ComparisonReport:
    """One cross-validation per normalizer over shared features and folds."""

    config: ExperimentConfig
    reports: dict[str, ExperimentReport]


def compare_normalizers(
    manifest: DatasetManifest,
    config: ExperimentConfig,
    methods: Sequence[NormalizerMethod] = (
        NormalizerMethod.zscore,
        NormalizerMethod.minmax,
        NormalizerMethod.none,
    ),
) -> ComparisonReport:
    try:
        require_both_classes(manifest)
    except CoughDwtError as e:
        raise _stage_error(e) from e

    matrix, corpus = extract_matrix(manifest, config)
    dataset = DatasetSummary.build(manifest, corpus)
    plan = plan_folds(matrix, config)

    reports: dict[str, ExperimentReport] = {}
    for method in methods:
        variant = replace(config, normalizer=method)
        reports[method.value] = evaluate_matrix(
            matrix,
            variant,
            dataset,
            plan=plan,
            extra_warnings=corpus.warnings,
        )
    return ComparisonReport(config=config, reports=reports)

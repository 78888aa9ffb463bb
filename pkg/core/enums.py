# labels, boundary modes, normalizers, kernels, split modes, commands

from __future__ import annotations

from enum import StrEnum


class Label(StrEnum):
    positive = "positive"
    negative = "negative"

    @property
    def sign(self) -> int:
        return 1 if self is Label.positive else -1


class Boundary(StrEnum):
    symmetric = "symmetric"
    periodic = "periodic"


class NormalizerMethod(StrEnum):
    zscore = "zscore"
    minmax = "minmax"
    none = "none"


class KernelKind(StrEnum):
    linear = "linear"
    rbf = "rbf"


class SplitMode(StrEnum):
    segment_stratified = "segment_stratified"
    subject_grouped = "subject_grouped"


class Command(StrEnum):
    extract = "extract"
    train = "train"
    evaluate = "evaluate"
    cross_validate = "cross-validate"
    dump_coeffs = "dump-coeffs"
    compare = "compare"


class Stage(StrEnum):
    dataset_io = "dataset_io"
    wavelet = "wavelet"
    features = "features"
    normalize = "normalize"
    svm = "svm"
    eval = "eval"
    pipeline_cli = "pipeline_cli"


class OutputFormat(StrEnum):
    plain = "plain"
    rich = "rich"

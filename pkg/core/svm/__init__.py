from core.svm.kernels import default_gamma, gram_matrix, kernel_eval
from core.svm.models import KernelSpec, SvmModel, TrainConfig
from core.svm.predict import decision_values, label_for, predict, predict_batch
from core.svm.serialize import model_from_dict, serialize_model
from core.svm.smo import dual_objective, train_smo

__all__ = [
    "KernelSpec",
    "SvmModel",
    "TrainConfig",
    "decision_values",
    "default_gamma",
    "dual_objective",
    "gram_matrix",
    "kernel_eval",
    "label_for",
    "model_from_dict",
    "predict",
    "predict_batch",
    "serialize_model",
    "train_smo",
]

"""Maximum-entropy models and article-level analyzers."""

from newsflow.classifiers.maxent import (
    LinearModel,
    loss_and_gradient,
    predict,
    predict_proba,
    train_maxent,
)
from newsflow.classifiers.serialize import (
    FeatureSpace,
    load_model,
    model_from_dict,
    model_to_dict,
    save_model,
)
from newsflow.classifiers.section import (
    SECTIONS,
    categorize_section,
    train_section_model,
)
from newsflow.classifiers.propaganda import (
    LABELS as PROPAGANDA_LABELS,
    PropagandaResult,
    propaganda_features,
    propaganda_label,
    propaganda_score,
    train_propaganda_model,
)
from newsflow.classifiers.stance import (
    STANCE_LABELS,
    StanceConfig,
    baseline_stance,
    classify_stance,
    register_stance_backend,
)
from newsflow.classifiers.frames import (
    FRAME_LABELS,
    baseline_frames,
    classify_frame,
    register_frame_backend,
)
from newsflow.classifiers.sourcelevel import (
    BIAS_LABELS,
    FACTUALITY_LABELS,
    SourceLabels,
    classify_source,
    hyper_partisanship,
    load_source_labels,
    medium_features,
    train_source_model,
)

__all__ = [
    "BIAS_LABELS",
    "FACTUALITY_LABELS",
    "FRAME_LABELS",
    "FeatureSpace",
    "LinearModel",
    "PROPAGANDA_LABELS",
    "PropagandaResult",
    "SECTIONS",
    "STANCE_LABELS",
    "SourceLabels",
    "StanceConfig",
    "baseline_frames",
    "baseline_stance",
    "categorize_section",
    "classify_frame",
    "classify_source",
    "classify_stance",
    "hyper_partisanship",
    "load_model",
    "load_source_labels",
    "loss_and_gradient",
    "medium_features",
    "model_from_dict",
    "model_to_dict",
    "predict",
    "predict_proba",
    "propaganda_features",
    "propaganda_label",
    "propaganda_score",
    "register_frame_backend",
    "register_stance_backend",
    "save_model",
    "train_maxent",
    "train_propaganda_model",
    "train_section_model",
]

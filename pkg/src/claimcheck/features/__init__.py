"""Tweet feature engineering: extraction, encoding, standardization,
recursive feature elimination, and PCA projection."""

from .extract import CATEGORICAL_FEATURES, FEATURE_NAMES, extract_features
from .lexicons import Lexicons, load_default_lexicons
from .readability import READABILITY_NAMES, count_syllables, readability
from .rfe import RfeResult, rfe_select
from .transform import (
    FeatureFrame,
    FrameSchemaError,
    PcaResult,
    Scaler,
    apply_scaler,
    build_frame,
    fit_transform_scaler,
    one_hot,
    pca2,
)

__all__ = [
    "CATEGORICAL_FEATURES",
    "FEATURE_NAMES",
    "extract_features",
    "Lexicons",
    "load_default_lexicons",
    "READABILITY_NAMES",
    "count_syllables",
    "readability",
    "RfeResult",
    "rfe_select",
    "FeatureFrame",
    "FrameSchemaError",
    "PcaResult",
    "Scaler",
    "apply_scaler",
    "build_frame",
    "fit_transform_scaler",
    "one_hot",
    "pca2",
]

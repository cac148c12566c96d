"""From-scratch classifiers, grid-search tuning, and model persistence."""

from .base import (
    ConfigError,
    ModelConfig,
    SchemaBinding,
    SchemaMismatch,
    TrainedModel,
    binding_for_features,
    binding_for_tfidf,
    binding_for_width,
)
from .core import train
from .grid import GridResult, grid_search
from .io import (
    IncompatibleVersionError,
    ModelFormatError,
    atomic_write_text,
    load_model,
    save_model,
)
from .logistic import LogisticRegression
from .mlp import MLP, parameter_count
from .naive_bayes import GaussianNB, MultinomialNB
from .stack import StackingClassifier
from .svm import SVM
from .tree import DecisionTree, RandomForest

__all__ = [
    "ConfigError",
    "ModelConfig",
    "SchemaBinding",
    "SchemaMismatch",
    "TrainedModel",
    "binding_for_features",
    "binding_for_tfidf",
    "binding_for_width",
    "train",
    "GridResult",
    "grid_search",
    "IncompatibleVersionError",
    "ModelFormatError",
    "atomic_write_text",
    "load_model",
    "save_model",
    "LogisticRegression",
    "MLP",
    "parameter_count",
    "GaussianNB",
    "MultinomialNB",
    "StackingClassifier",
    "SVM",
    "DecisionTree",
    "RandomForest",
]

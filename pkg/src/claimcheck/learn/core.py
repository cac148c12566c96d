"""Training entry point shared by the CLI, grid search, and the service."""

from __future__ import annotations

import numpy as np

from .base import (
    ModelConfig,
    SchemaBinding,
    TrainedModel,
    binding_for_width,
    check_training_inputs,
)
from .logistic import LogisticRegression
from .mlp import MLP
from .naive_bayes import GaussianNB, MultinomialNB
from .stack import StackingClassifier
from .svm import SVM
from .tree import DecisionTree, RandomForest


def train(
    config: ModelConfig,
    X: np.ndarray,
    y: np.ndarray,
    seed: int = 0,
    validation: tuple | None = None,
    binding: SchemaBinding | None = None,
) -> TrainedModel:
    """Fit one model of the configured kind and wrap it with its schema.

    ``validation`` is an optional ``(X_val, y_val)`` pair; only the MLP uses
    it (epoch selection by validation loss). Every kind is deterministic
    given ``seed``.
    """
    hp = config.hyperparameters
    X, y = check_training_inputs(X, y, allow_single_class=(config.kind == "DT"))
    metadata: dict = {}

    if config.kind == "LR":
        model = LogisticRegression(C=hp["C"], tol=hp["tol"], max_iter=hp["max_iter"])
        model.fit(X, y)
    elif config.kind == "NB":
        variant = hp["variant"]
        if variant == "auto":
            variant = "gaussian" if (X < 0).any() else "multinomial"
        metadata["variant"] = variant
        if variant == "gaussian":
            model = GaussianNB(var_smoothing=hp["var_smoothing"]).fit(X, y)
        else:
            model = MultinomialNB(alpha=hp["alpha"]).fit(X, y)
    elif config.kind == "SVM":
        model = SVM(
            C=hp["C"], kernel=hp["kernel"], gamma=hp["gamma"],
            tol=hp["tol"], max_passes=hp["max_passes"], seed=seed,
        ).fit(X, y)
    elif config.kind == "DT":
        model = DecisionTree(
            criterion=hp["criterion"], max_depth=hp["max_depth"],
            max_features=hp["max_features"],
            min_samples_split=hp["min_samples_split"],
            min_samples_leaf=hp["min_samples_leaf"], seed=seed,
        ).fit(X, y)
    elif config.kind == "RF":
        model = RandomForest(
            n_trees=hp["n_trees"], bootstrap=hp["bootstrap"],
            criterion=hp["criterion"], max_depth=hp["max_depth"],
            max_features=hp["max_features"],
            min_samples_split=hp["min_samples_split"],
            min_samples_leaf=hp["min_samples_leaf"], seed=seed,
        ).fit(X, y)
    elif config.kind == "Stack":
        model = StackingClassifier(
            n_folds=hp["n_folds"], base_overrides=hp["base_overrides"], seed=seed,
        ).fit(X, y)
    elif config.kind == "MLP":
        model = MLP(
            hidden=hp["hidden"], dropout=hp["dropout"], epochs=hp["epochs"],
            batch_size=hp["batch_size"], lr=hp["lr"], beta1=hp["beta1"],
            beta2=hp["beta2"], eps=hp["eps"], val_fraction=hp["val_fraction"],
            seed=seed,
        ).fit(X, y, validation=validation)
    else:  # pragma: no cover - ModelConfig already validates
        raise ValueError(config.kind)

    if binding is None:
        binding = binding_for_width(X.shape[1])
    return TrainedModel(config=config, model=model, binding=binding,
                        seed=seed, metadata=metadata)

"""Model configuration, the trained-model wrapper, and shared helpers."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

KINDS = ("LR", "NB", "SVM", "DT", "RF", "Stack", "MLP")

_DEFAULTS = {
    "LR": {"C": 1.0, "max_iter": 5000, "tol": 1e-6},
    "NB": {"variant": "auto", "alpha": 1.0, "var_smoothing": 1e-9},
    "SVM": {"C": 1.0, "kernel": "rbf", "gamma": "scale", "tol": 1e-3, "max_passes": 10},
    "DT": {
        "criterion": "gini",
        "max_depth": None,
        "max_features": None,
        "min_samples_split": 2,
        "min_samples_leaf": 1,
    },
    "RF": {
        "n_trees": 100,
        "bootstrap": True,
        "criterion": "gini",
        "max_depth": None,
        "max_features": "sqrt",
        "min_samples_split": 2,
        "min_samples_leaf": 1,
    },
    "Stack": {"n_folds": 5, "base_overrides": {}},
    "MLP": {
        "hidden": (128, 64),
        "dropout": 0.2,
        "epochs": 10,
        "batch_size": 64,
        "lr": 1e-3,
        "beta1": 0.9,
        "beta2": 0.999,
        "eps": 1e-8,
        "val_fraction": 0.1,
    },
}


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class ModelConfig:
    kind: str
    hyperparameters: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ConfigError(f"unknown model kind {self.kind!r}, expected one of {KINDS}")
        unknown = set(self.hyperparameters) - set(_DEFAULTS[self.kind])
        if unknown:
            raise ConfigError(f"unknown {self.kind} hyperparameters: {sorted(unknown)}")
        merged = {**_DEFAULTS[self.kind], **self.hyperparameters}
        _validate(self.kind, merged)
        object.__setattr__(self, "hyperparameters", merged)

    def __getitem__(self, key):
        return self.hyperparameters[key]


def _validate(kind: str, hp: dict) -> None:
    if kind in ("LR", "SVM") and not hp["C"] > 0:
        raise ConfigError(f"C must be > 0, got {hp['C']}")
    if kind == "NB":
        if hp["alpha"] < 0:
            raise ConfigError(f"alpha must be >= 0, got {hp['alpha']}")
        if hp["variant"] not in ("auto", "gaussian", "multinomial"):
            raise ConfigError(f"bad NB variant {hp['variant']!r}")
    if kind == "SVM":
        if hp["kernel"] not in ("linear", "rbf"):
            raise ConfigError(f"kernel must be linear or rbf, got {hp['kernel']!r}")
        if not (hp["gamma"] in ("scale", "auto") or isinstance(hp["gamma"], (int, float))):
            raise ConfigError(f"gamma must be scale/auto or a number, got {hp['gamma']!r}")
    if kind in ("DT", "RF"):
        if hp["criterion"] not in ("gini", "entropy"):
            raise ConfigError(f"criterion must be gini or entropy, got {hp['criterion']!r}")
        if hp["max_depth"] is not None and hp["max_depth"] < 1:
            raise ConfigError(f"max_depth must be >= 1 or None, got {hp['max_depth']}")
        if hp["max_features"] not in (None, "none", "sqrt", "auto", "log2"):
            raise ConfigError(f"bad max_features {hp['max_features']!r}")
        if hp["min_samples_split"] < 1:
            raise ConfigError("min_samples_split must be >= 1")
        if hp["min_samples_leaf"] < 1:
            raise ConfigError("min_samples_leaf must be >= 1")
    if kind == "RF" and hp["n_trees"] < 1:
        raise ConfigError(f"n_trees must be >= 1, got {hp['n_trees']}")
    if kind == "Stack" and hp["n_folds"] < 2:
        raise ConfigError("n_folds must be >= 2")
    if kind == "MLP" and not 0 <= hp["dropout"] < 1:
        raise ConfigError(f"dropout must be in [0, 1), got {hp['dropout']}")


@dataclass(frozen=True)
class SchemaBinding:
    """What the model accepts: named feature columns, a TF-IDF vocabulary,
    or a bare column width."""

    type: str  # "features" | "tfidf" | "width"
    width: int
    names: tuple = ()
    tfidf: object = None  # vectorize.TfidfModel when type == "tfidf"


def binding_for_features(names) -> SchemaBinding:
    return SchemaBinding(type="features", width=len(names), names=tuple(names))


def binding_for_tfidf(model) -> SchemaBinding:
    return SchemaBinding(type="tfidf", width=model.size, tfidf=model)


def binding_for_width(width: int) -> SchemaBinding:
    return SchemaBinding(type="width", width=width)


class SchemaMismatch(ValueError):
    pass


@dataclass
class TrainedModel:
    config: ModelConfig
    model: object
    binding: SchemaBinding
    seed: int
    metadata: dict = field(default_factory=dict)

    def _check(self, X: np.ndarray) -> np.ndarray:
        X = np.asarray(X, dtype=np.float64)
        if X.ndim == 1:
            X = X.reshape(1, -1)
        if X.shape[1] != self.binding.width:
            raise SchemaMismatch(
                f"model expects {self.binding.width} columns, got {X.shape[1]}"
            )
        return X

    def predict_proba(self, X) -> np.ndarray:
        return self.model.predict_proba(self._check(X))

    def predict(self, X) -> np.ndarray:
        return (self.predict_proba(X) >= 0.5).astype(int)


def check_training_inputs(X: np.ndarray, y: np.ndarray, allow_single_class=False):
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=int)
    if X.ndim != 2:
        raise ValueError(f"X must be 2-D, got shape {X.shape}")
    if X.shape[0] != y.shape[0]:
        raise ValueError(f"{X.shape[0]} rows but {y.shape[0]} labels")
    if X.shape[0] < 1:
        raise ValueError("no training rows")
    if not set(np.unique(y)) <= {0, 1}:
        raise ValueError("labels must be binary 0/1")
    if not allow_single_class and len(np.unique(y)) < 2:
        raise ValueError("training data contains a single class")
    return X, y


def rng_from(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def spawn_rngs(seed: int, n: int) -> list:
    return [np.random.Generator(np.random.PCG64(s)) for s in np.random.SeedSequence(seed).spawn(n)]

"""Stacked generalization: naive Bayes, SVM, and decision-tree base learners
feeding a logistic-regression meta-learner.

Meta-features are out-of-fold base probabilities (stratified folds) so the
meta-learner never sees a base prediction made on that base's own training
rows. After the fold pass the bases are refit on the full training set for
inference.
"""

from __future__ import annotations

import numpy as np

from .base import rng_from
from .logistic import LogisticRegression
from .naive_bayes import GaussianNB, MultinomialNB
from .svm import SVM
from .tree import DecisionTree

_BASE_ORDER = ("nb", "svm", "dt")


def stratified_fold_ids(y: np.ndarray, n_folds: int, rng) -> np.ndarray:
    ids = np.empty(len(y), dtype=int)
    for cls in np.unique(y):
        members = np.flatnonzero(y == cls)
        members = members[rng.permutation(len(members))]
        ids[members] = np.arange(len(members)) % n_folds
    return ids


class StackingClassifier:
    def __init__(self, n_folds: int = 5, base_overrides: dict | None = None, seed: int = 0):
        self.n_folds = n_folds
        self.base_overrides = base_overrides or {}
        self.seed = seed
        self.bases: list = []
        self.meta: LogisticRegression | None = None

    def _make_base(self, name: str, X: np.ndarray):
        hp = self.base_overrides.get(name, {})
        if name == "nb":
            if (X < 0).any():
                return GaussianNB(var_smoothing=hp.get("var_smoothing", 1e-9))
            return MultinomialNB(alpha=hp.get("alpha", 1.0))
        if name == "svm":
            return SVM(
                C=hp.get("C", 1.0),
                kernel=hp.get("kernel", "rbf"),
                gamma=hp.get("gamma", "scale"),
                seed=self.seed,
            )
        return DecisionTree(
            criterion=hp.get("criterion", "gini"),
            max_depth=hp.get("max_depth"),
            min_samples_split=hp.get("min_samples_split", 2),
            min_samples_leaf=hp.get("min_samples_leaf", 1),
            seed=self.seed,
        )

    def fit(self, X: np.ndarray, y: np.ndarray) -> "StackingClassifier":
        counts = np.bincount(y, minlength=2)
        if counts.min() < 2:
            raise ValueError("stacking needs at least 2 rows of each class")
        n_folds = min(self.n_folds, int(counts.min()))
        rng = rng_from(self.seed)
        fold_ids = stratified_fold_ids(y, n_folds, rng)
        oof = np.zeros((len(y), len(_BASE_ORDER)))
        for fold in range(n_folds):
            tr = fold_ids != fold
            te = ~tr
            for j, name in enumerate(_BASE_ORDER):
                base = self._make_base(name, X[tr])
                base.fit(X[tr], y[tr])
                oof[te, j] = base.predict_proba(X[te])
        self.bases = []
        for name in _BASE_ORDER:
            base = self._make_base(name, X)
            base.fit(X, y)
            self.bases.append(base)
        self.meta = LogisticRegression().fit(oof, y)
        return self

    def _meta_features(self, X: np.ndarray) -> np.ndarray:
        return np.column_stack([b.predict_proba(X) for b in self.bases])

    def predict_proba(self, X: np.ndarray) -> np.ndarray:
        return self.meta.predict_proba(self._meta_features(X))

    def get_params(self) -> dict:
        return {
            "bases": [
                {"class": type(b).__name__, "params": b.get_params()} for b in self.bases
            ],
            "meta": self.meta.get_params(),
        }

    def set_params(self, params: dict) -> "StackingClassifier":
        classes = {
            "GaussianNB": GaussianNB,
            "MultinomialNB": MultinomialNB,
            "SVM": SVM,
            "DecisionTree": DecisionTree,
        }
        self.bases = [
            classes[entry["class"]]().set_params(entry["params"])
            for entry in params["bases"]
        ]
        self.meta = LogisticRegression().set_params(params["meta"])
        return self

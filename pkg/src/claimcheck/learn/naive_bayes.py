"""Gaussian and multinomial naive Bayes.

The Gaussian variant fits per-class feature means and variances on dense
real-valued inputs (variances smoothed by ``var_smoothing`` times the
largest feature variance). The multinomial variant fits Laplace-smoothed
token-mass estimates and requires nonnegative inputs such as TF-IDF rows.
"""

from __future__ import annotations

import numpy as np


class GaussianNB:
    def __init__(self, var_smoothing: float = 1e-9):
        self.var_smoothing = var_smoothing
        self.log_prior = None
        self.theta = None  # (2, d) means
        self.var = None  # (2, d) variances

    def fit(self, X: np.ndarray, y: np.ndarray) -> "GaussianNB":
        eps = self.var_smoothing * max(X.var(axis=0).max(), 1e-12)
        self.log_prior = np.empty(2)
        self.theta = np.empty((2, X.shape[1]))
        self.var = np.empty((2, X.shape[1]))
        for c in (0, 1):
            rows = X[y == c]
            self.log_prior[c] = np.log(len(rows) / len(X))
            self.theta[c] = rows.mean(axis=0)
            self.var[c] = rows.var(axis=0) + eps
        return self

    def _joint_log_likelihood(self, X: np.ndarray) -> np.ndarray:
        jll = np.empty((X.shape[0], 2))
        for c in (0, 1):
            quad = ((X - self.theta[c]) ** 2 / self.var[c]).sum(axis=1)
            jll[:, c] = (
                self.log_prior[c]
                - 0.5 * np.log(2.0 * np.pi * self.var[c]).sum()
                - 0.5 * quad
            )
        return jll

    def predict_proba(self, X: np.ndarray) -> np.ndarray:
        return _posterior_from_jll(self._joint_log_likelihood(X))

    def get_params(self) -> dict:
        return {"log_prior": self.log_prior, "theta": self.theta, "var": self.var}

    def set_params(self, params: dict) -> "GaussianNB":
        self.log_prior = np.asarray(params["log_prior"])
        self.theta = np.asarray(params["theta"])
        self.var = np.asarray(params["var"])
        return self


class MultinomialNB:
    def __init__(self, alpha: float = 1.0):
        self.alpha = alpha
        self.log_prior = None
        self.feature_log_prob = None  # (2, d)

    def fit(self, X: np.ndarray, y: np.ndarray) -> "MultinomialNB":
        if (X < 0).any():
            raise ValueError("multinomial NB requires nonnegative inputs")
        d = X.shape[1]
        self.log_prior = np.empty(2)
        self.feature_log_prob = np.empty((2, d))
        for c in (0, 1):
            rows = X[y == c]
            self.log_prior[c] = np.log(len(rows) / len(X))
            counts = rows.sum(axis=0) + self.alpha
            total = counts.sum()
            with np.errstate(divide="ignore"):
                self.feature_log_prob[c] = np.log(counts) - np.log(total)
        return self

    def _joint_log_likelihood(self, X: np.ndarray) -> np.ndarray:
        if (X < 0).any():
            raise ValueError("multinomial NB requires nonnegative inputs")
        # with alpha == 0 a zero-mass feature has log-prob -inf; split that
        # off so 0 * -inf never reaches the matmul
        neg_inf = np.isneginf(self.feature_log_prob)
        finite = np.where(neg_inf, 0.0, self.feature_log_prob)
        scores = X @ finite.T + self.log_prior
        for c in (0, 1):
            if neg_inf[c].any():
                impossible = (X[:, neg_inf[c]] > 0).any(axis=1)
                scores[impossible, c] = -np.inf
        return scores

    def predict_proba(self, X: np.ndarray) -> np.ndarray:
        return _posterior_from_jll(self._joint_log_likelihood(X))

    def get_params(self) -> dict:
        return {"log_prior": self.log_prior, "feature_log_prob": self.feature_log_prob}

    def set_params(self, params: dict) -> "MultinomialNB":
        self.log_prior = np.asarray(params["log_prior"])
        self.feature_log_prob = np.asarray(params["feature_log_prob"])
        return self


def _posterior_from_jll(jll: np.ndarray) -> np.ndarray:
    """P(class 1 | x) from joint log likelihoods, safe against -inf columns."""
    both_impossible = np.isneginf(jll).all(axis=1)
    with np.errstate(invalid="ignore"):
        shifted = jll - jll.max(axis=1, keepdims=True)
        shifted = np.where(np.isnan(shifted), -np.inf, shifted)
        expd = np.exp(shifted)
        proba = expd[:, 1] / expd.sum(axis=1)
    proba[both_impossible] = 0.5
    return proba

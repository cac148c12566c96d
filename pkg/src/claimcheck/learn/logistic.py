"""L2-regularized logistic regression trained by full-batch gradient descent
with a backtracking (Armijo) line search.

The objective is sum log-loss plus ``||w||^2 / (2C)`` with the intercept
unpenalized; training stops when the gradient infinity-norm falls below
``tol`` or after ``max_iter`` iterations.
"""

from __future__ import annotations

import numpy as np


def _sigmoid(z: np.ndarray) -> np.ndarray:
    out = np.empty_like(z)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return out


def _log1pexp(z: np.ndarray) -> np.ndarray:
    # log(1 + e^z), stable for large |z|
    out = np.empty_like(z)
    big = z > 30
    out[big] = z[big]
    out[~big] = np.log1p(np.exp(z[~big]))
    return out


class LogisticRegression:
    def __init__(self, C: float = 1.0, tol: float = 1e-6, max_iter: int = 5000):
        self.C = C
        self.tol = tol
        self.max_iter = max_iter
        self.w = None
        self.b = 0.0
        self.n_iter = 0

    def _objective(self, X, y, w, b):
        z = X @ w + b
        loss = np.sum(_log1pexp(z) - y * z)
        return loss + (w @ w) / (2.0 * self.C)

    def _gradient(self, X, y, w, b):
        residual = _sigmoid(X @ w + b) - y
        return X.T @ residual + w / self.C, np.sum(residual)

    def fit(self, X: np.ndarray, y: np.ndarray) -> "LogisticRegression":
        n, d = X.shape
        w = np.zeros(d)
        b = 0.0
        step = 1.0 / max(n, 1)
        obj = self._objective(X, y, w, b)
        for it in range(self.max_iter):
            gw, gb = self._gradient(X, y, w, b)
            grad_norm = max(np.max(np.abs(gw)), abs(gb))
            if grad_norm < self.tol:
                break
            sq = gw @ gw + gb * gb
            step = min(step * 2.0, 1e6)
            while step > 1e-18:
                new_w = w - step * gw
                new_b = b - step * gb
                new_obj = self._objective(X, y, new_w, new_b)
                if new_obj <= obj - 0.5 * step * sq:
                    break
                step *= 0.5
            w, b, obj = new_w, new_b, new_obj
        self.w, self.b, self.n_iter = w, b, it + 1
        return self

    def decision(self, X: np.ndarray) -> np.ndarray:
        return X @ self.w + self.b

    def predict_proba(self, X: np.ndarray) -> np.ndarray:
        return _sigmoid(self.decision(X))

    def get_params(self) -> dict:
        return {"w": self.w, "b": float(self.b), "n_iter": int(self.n_iter)}

    def set_params(self, params: dict) -> "LogisticRegression":
        self.w = np.asarray(params["w"], dtype=np.float64)
        self.b = float(params["b"])
        self.n_iter = int(params["n_iter"])
        return self

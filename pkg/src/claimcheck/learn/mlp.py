"""Feed-forward binary classifier: dense-128 ReLU, dropout, dense-64 ReLU,
single sigmoid output, trained on binary cross-entropy with Adam.

Backpropagation is written out by hand; the loss/gradient pair is exposed
as a pure function of the parameter list so finite-difference checks can
drive it directly. Dropout uses inverted scaling at train time and is a
no-op at inference.
"""

from __future__ import annotations

import numpy as np

from .base import rng_from


def _log1pexp(z):
    out = np.empty_like(z)
    big = z > 30
    out[big] = z[big]
    out[~big] = np.log1p(np.exp(z[~big]))
    return out


def _sigmoid(z):
    return np.where(z >= 0, 1.0 / (1.0 + np.exp(-np.abs(z))),
                    np.exp(-np.abs(z)) / (1.0 + np.exp(-np.abs(z))))


def init_params(n_inputs: int, hidden: tuple, rng) -> list:
    """He-initialized (W, b) pairs for layers hidden[0], hidden[1], ..., 1."""
    sizes = [n_inputs, *hidden, 1]
    params = []
    for fan_in, fan_out in zip(sizes, sizes[1:]):
        w = rng.normal(0.0, np.sqrt(2.0 / fan_in), size=(fan_in, fan_out))
        params.append((w, np.zeros(fan_out)))
    return params


def loss_and_grads(params: list, X: np.ndarray, y: np.ndarray,
                   dropout: float = 0.0, rng=None) -> tuple:
    """Mean BCE loss and gradients for a [dense-relu, dropout, dense-relu,
    dense-sigmoid] stack. Returns (loss, [(dW, db), ...])."""
    (w1, b1), (w2, b2), (w3, b3) = params
    n = X.shape[0]

    z1 = X @ w1 + b1
    h1 = np.maximum(z1, 0.0)
    if dropout > 0.0:
        mask = (rng.random(h1.shape) >= dropout) / (1.0 - dropout)
        h1d = h1 * mask
    else:
        mask = None
        h1d = h1
    z2 = h1d @ w2 + b2
    h2 = np.maximum(z2, 0.0)
    z3 = (h2 @ w3 + b3).ravel()

    loss = float(np.mean(_log1pexp(z3) - y * z3))

    dz3 = ((_sigmoid(z3) - y) / n).reshape(-1, 1)
    dw3 = h2.T @ dz3
    db3 = dz3.sum(axis=0)
    dh2 = dz3 @ w3.T
    dz2 = dh2 * (z2 > 0)
    dw2 = h1d.T @ dz2
    db2 = dz2.sum(axis=0)
    dh1d = dz2 @ w2.T
    dh1 = dh1d * mask if mask is not None else dh1d
    dz1 = dh1 * (z1 > 0)
    dw1 = X.T @ dz1
    db1 = dz1.sum(axis=0)
    return loss, [(dw1, db1), (dw2, db2), (dw3, db3)]


def forward_proba(params: list, X: np.ndarray) -> np.ndarray:
    (w1, b1), (w2, b2), (w3, b3) = params
    h1 = np.maximum(X @ w1 + b1, 0.0)
    h2 = np.maximum(h1 @ w2 + b2, 0.0)
    return _sigmoid((h2 @ w3 + b3).ravel())


def bce_loss(params: list, X: np.ndarray, y: np.ndarray) -> float:
    (w1, b1), (w2, b2), (w3, b3) = params
    h1 = np.maximum(X @ w1 + b1, 0.0)
    h2 = np.maximum(h1 @ w2 + b2, 0.0)
    z = (h2 @ w3 + b3).ravel()
    return float(np.mean(_log1pexp(z) - y * z))


def parameter_count(n_inputs: int, hidden: tuple = (128, 64)) -> int:
    sizes = [n_inputs, *hidden, 1]
    return sum(fi * fo + fo for fi, fo in zip(sizes, sizes[1:]))


class MLP:
    def __init__(self, hidden=(128, 64), dropout: float = 0.2, epochs: int = 10,
                 batch_size: int = 64, lr: float = 1e-3, beta1: float = 0.9,
                 beta2: float = 0.999, eps: float = 1e-8,
                 val_fraction: float = 0.1, seed: int = 0):
        self.hidden = tuple(hidden)
        self.dropout = dropout
        self.epochs = epochs
        self.batch_size = batch_size
        self.lr = lr
        self.beta1 = beta1
        self.beta2 = beta2
        self.eps = eps
        self.val_fraction = val_fraction
        self.seed = seed
        self.params = None
        self.train_losses: list[float] = []
        self.val_losses: list[float] = []
        self.best_epoch = -1

    def fit(self, X: np.ndarray, y: np.ndarray, validation=None) -> "MLP":
        X = np.asarray(X, dtype=np.float64)
        y = np.asarray(y, dtype=np.float64)
        rng = rng_from(self.seed)
        if validation is not None:
            X_val, y_val = validation
            X_val = np.asarray(X_val, dtype=np.float64)
            y_val = np.asarray(y_val, dtype=np.float64)
            X_tr, y_tr = X, y
        else:
            # hold out a seeded slice for epoch selection
            n_val = max(1, int(round(self.val_fraction * len(X))))
            order = rng.permutation(len(X))
            X_tr, y_tr = X[order[n_val:]], y[order[n_val:]]
            X_val, y_val = X[order[:n_val]], y[order[:n_val]]
            if len(X_tr) == 0:
                X_tr, y_tr = X, y

        params = init_params(X.shape[1], self.hidden, rng)
        m_state = [(np.zeros_like(w), np.zeros_like(b)) for w, b in params]
        v_state = [(np.zeros_like(w), np.zeros_like(b)) for w, b in params]
        step = 0
        best_loss = np.inf
        best_params = None
        self.train_losses, self.val_losses = [], []

        for epoch in range(self.epochs):
            order = rng.permutation(len(X_tr))
            for start in range(0, len(X_tr), self.batch_size):
                batch = order[start : start + self.batch_size]
                loss, grads = loss_and_grads(
                    params, X_tr[batch], y_tr[batch], dropout=self.dropout, rng=rng
                )
                step += 1
                new_params = []
                for layer in range(len(params)):
                    updated = []
                    for j in range(2):
                        g = grads[layer][j]
                        m = self.beta1 * m_state[layer][j] + (1 - self.beta1) * g
                        v = self.beta2 * v_state[layer][j] + (1 - self.beta2) * g * g
                        m_hat = m / (1 - self.beta1**step)
                        v_hat = v / (1 - self.beta2**step)
                        updated.append(
                            (m, v, params[layer][j] - self.lr * m_hat / (np.sqrt(v_hat) + self.eps))
                        )
                    m_state[layer] = (updated[0][0], updated[1][0])
                    v_state[layer] = (updated[0][1], updated[1][1])
                    new_params.append((updated[0][2], updated[1][2]))
                params = new_params
            self.train_losses.append(bce_loss(params, X_tr, y_tr))
            val_loss = bce_loss(params, X_val, y_val)
            self.val_losses.append(val_loss)
            if val_loss < best_loss:
                best_loss = val_loss
                best_params = [(w.copy(), b.copy()) for w, b in params]
                self.best_epoch = epoch
        self.params = best_params if best_params is not None else params
        return self

    def predict_proba(self, X: np.ndarray) -> np.ndarray:
        return forward_proba(self.params, np.asarray(X, dtype=np.float64))

    def get_params(self) -> dict:
        out = {"best_epoch": int(self.best_epoch)}
        for i, (w, b) in enumerate(self.params, start=1):
            out[f"w{i}"] = w
            out[f"b{i}"] = b
        return out

    def set_params(self, params: dict) -> "MLP":
        layers = []
        i = 1
        while f"w{i}" in params:
            layers.append(
                (np.asarray(params[f"w{i}"], dtype=np.float64),
                 np.asarray(params[f"b{i}"], dtype=np.float64))
            )
            i += 1
        self.params = layers
        self.best_epoch = int(params.get("best_epoch", -1))
        return self

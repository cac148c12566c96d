"""Soft-margin SVM trained with sequential minimal optimization.

Pairs of dual variables are optimized analytically until every point
satisfies the KKT conditions within ``tol``, following Platt's working-set
heuristics (best |E1 - E2| second choice, then randomized sweeps). The
kernel matrix is precomputed, which is fine at the corpus sizes this
package targets.
"""

from __future__ import annotations

import numpy as np

from .base import rng_from


def linear_kernel(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    return A @ B.T


def rbf_kernel(A: np.ndarray, B: np.ndarray, gamma: float) -> np.ndarray:
    sq = (
        np.sum(A * A, axis=1)[:, None]
        + np.sum(B * B, axis=1)[None, :]
        - 2.0 * (A @ B.T)
    )
    return np.exp(-gamma * np.maximum(sq, 0.0))


def resolve_gamma(gamma, X: np.ndarray) -> float:
    """Map the named gamma modes onto values: scale = 1/(d*var(X)), auto = 1/d."""
    if gamma == "scale":
        var = X.var()
        return 1.0 / (X.shape[1] * var) if var > 0 else 1.0
    if gamma == "auto":
        return 1.0 / X.shape[1]
    return float(gamma)


class SVM:
    def __init__(self, C: float = 1.0, kernel: str = "rbf", gamma="scale",
                 tol: float = 1e-3, max_passes: int = 10, seed: int = 0):
        self.C = C
        self.kernel = kernel
        self.gamma = gamma
        self.tol = tol
        self.max_passes = max_passes
        self.seed = seed
        self.gamma_value = None
        self.support_vectors = None
        self.dual_coef = None  # alpha_i * t_i over support vectors
        self.b = 0.0

    def _kernel_matrix(self, A, B):
        if self.kernel == "linear":
            return linear_kernel(A, B)
        return rbf_kernel(A, B, self.gamma_value)

    def fit(self, X: np.ndarray, y: np.ndarray) -> "SVM":
        n = X.shape[0]
        t = np.where(np.asarray(y) == 1, 1.0, -1.0)
        self.gamma_value = resolve_gamma(self.gamma, X)
        K = self._kernel_matrix(X, X)
        rng = rng_from(self.seed)

        alpha = np.zeros(n)
        self._b = 0.0
        # f[i] = decision value at x_i; E = f - t is the error cache
        f = np.zeros(n)

        def take_step(i1: int, i2: int) -> bool:
            nonlocal f
            if i1 == i2:
                return False
            a1, a2 = alpha[i1], alpha[i2]
            t1, t2 = t[i1], t[i2]
            E1, E2 = f[i1] - t[i1], f[i2] - t[i2]
            s = t1 * t2
            if s < 0:
                L, H = max(0.0, a2 - a1), min(self.C, self.C + a2 - a1)
            else:
                L, H = max(0.0, a1 + a2 - self.C), min(self.C, a1 + a2)
            if L >= H:
                return False
            k11, k12, k22 = K[i1, i1], K[i1, i2], K[i2, i2]
            eta = k11 + k22 - 2.0 * k12
            if eta > 0:
                a2_new = a2 + t2 * (E1 - E2) / eta
                a2_new = min(max(a2_new, L), H)
            else:
                # objective at the two clip ends; move only on a clear win
                f1 = t1 * (E1 + self._b) - a1 * k11 - s * a2 * k12
                f2 = t2 * (E2 + self._b) - s * a1 * k12 - a2 * k22
                L1 = a1 + s * (a2 - L)
                H1 = a1 + s * (a2 - H)
                psi_l = (L1 * f1 + L * f2 + 0.5 * L1 * L1 * k11
                         + 0.5 * L * L * k22 + s * L * L1 * k12)
                psi_h = (H1 * f1 + H * f2 + 0.5 * H1 * H1 * k11
                         + 0.5 * H * H * k22 + s * H * H1 * k12)
                if psi_l < psi_h - 1e-12:
                    a2_new = L
                elif psi_l > psi_h + 1e-12:
                    a2_new = H
                else:
                    return False
            if abs(a2_new - a2) < 1e-12 * (a2_new + a2 + 1e-12):
                return False
            a1_new = a1 + s * (a2 - a2_new)

            d1 = t1 * (a1_new - a1)
            d2 = t2 * (a2_new - a2)
            b1 = self._b - E1 - d1 * k11 - d2 * k12
            b2 = self._b - E2 - d1 * k12 - d2 * k22
            if 0.0 < a1_new < self.C:
                b_new = b1
            elif 0.0 < a2_new < self.C:
                b_new = b2
            else:
                b_new = 0.5 * (b1 + b2)

            f += d1 * K[i1] + d2 * K[i2] + (b_new - self._b)
            alpha[i1], alpha[i2] = a1_new, a2_new
            self._b = b_new
            return True

        def examine(i2: int) -> bool:
            t2, a2 = t[i2], alpha[i2]
            E2 = f[i2] - t2
            r2 = E2 * t2
            if not ((r2 < -self.tol and a2 < self.C) or (r2 > self.tol and a2 > 0)):
                return False
            non_bound = np.flatnonzero((alpha > 0) & (alpha < self.C))
            if len(non_bound) > 1:
                errors = f[non_bound] - t[non_bound]
                i1 = non_bound[np.argmax(np.abs(errors - E2))]
                if take_step(int(i1), i2):
                    return True
            if len(non_bound):
                start = rng.integers(len(non_bound))
                for i1 in np.roll(non_bound, -start):
                    if take_step(int(i1), i2):
                        return True
            start = rng.integers(n)
            for i1 in np.roll(np.arange(n), -start):
                if take_step(int(i1), i2):
                    return True
            return False

        examine_all = True
        sweeps_without_change = 0
        total_sweeps = 0
        while sweeps_without_change < self.max_passes and total_sweeps < 10_000:
            total_sweeps += 1
            changed = 0
            if examine_all:
                targets = range(n)
            else:
                targets = np.flatnonzero((alpha > 0) & (alpha < self.C))
            for i in targets:
                changed += examine(int(i))
            if examine_all:
                if changed == 0:
                    break
                examine_all = False
            elif changed == 0:
                examine_all = True
                sweeps_without_change += 1
            else:
                sweeps_without_change = 0

        # Platt's running threshold can end up outside the feasible interval
        # when every alpha finishes at a bound; recompute it from the final
        # dual variables instead.
        g = K @ (alpha * t)
        non_bound = (alpha > 1e-8) & (alpha < self.C - 1e-8)
        if non_bound.any():
            self._b = float(np.mean(t[non_bound] - g[non_bound]))
        else:
            lowers = [-np.inf]
            uppers = [np.inf]
            for i in range(n):
                bound = t[i] - g[i]
                at_zero = alpha[i] <= 1e-8
                wants_lower = (t[i] > 0) == at_zero
                (lowers if wants_lower else uppers).append(bound)
            lo, hi = max(lowers), min(uppers)
            if lo > hi:
                lo, hi = hi, lo
            if np.isinf(lo):
                self._b = float(hi) if not np.isinf(hi) else 0.0
            elif np.isinf(hi):
                self._b = float(lo)
            else:
                self._b = float(0.5 * (lo + hi))

        self._train_alpha = alpha.copy()
        self._train_t = t.copy()
        self._train_K = K
        sv = alpha > 1e-10
        self.support_vectors = X[sv].copy()
        self.dual_coef = (alpha[sv] * t[sv]).copy()
        self.b = float(self._b)
        return self

    def dual_objective(self) -> float:
        """sum(alpha) - 1/2 (alpha t)' K (alpha t) on the training problem."""
        at = self._train_alpha * self._train_t
        return float(self._train_alpha.sum() - 0.5 * at @ self._train_K @ at)

    def kkt_violation(self) -> float:
        """Largest KKT violation over the training points."""
        at = self._train_alpha * self._train_t
        margins = self._train_t * (self._train_K @ at + self.b)
        worst = 0.0
        for a, m in zip(self._train_alpha, margins):
            if a < 1e-8:
                worst = max(worst, 1.0 - m)
            elif a > self.C - 1e-8:
                worst = max(worst, m - 1.0)
            else:
                worst = max(worst, abs(m - 1.0))
        return worst

    def decision(self, X: np.ndarray) -> np.ndarray:
        K = self._kernel_matrix(np.asarray(X, dtype=np.float64), self.support_vectors)
        return K @ self.dual_coef + self.b

    def predict_proba(self, X: np.ndarray) -> np.ndarray:
        # logistic squashing of the margin keeps probabilities in (0, 1)
        # and thresholding at 0.5 agrees with the sign of the decision value
        z = self.decision(X)
        return np.where(z >= 0, 1.0 / (1.0 + np.exp(-np.abs(z))),
                        np.exp(-np.abs(z)) / (1.0 + np.exp(-np.abs(z))))

    def get_params(self) -> dict:
        return {
            "support_vectors": self.support_vectors,
            "dual_coef": self.dual_coef,
            "b": float(self.b),
            "gamma_value": float(self.gamma_value),
        }

    def set_params(self, params: dict) -> "SVM":
        self.support_vectors = np.asarray(params["support_vectors"])
        self.dual_coef = np.asarray(params["dual_coef"])
        self.b = float(params["b"])
        self.gamma_value = float(params["gamma_value"])
        return self

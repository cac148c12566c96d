import cvxopt
import numpy as np
import pytest

from claimcheck.learn import SVM
from claimcheck.learn.svm import resolve_gamma

cvxopt.solvers.options["show_progress"] = False


def qp_dual_optimum(X, y, C, kernel, gamma=None):
    """Brute-force reference: solve the dual QP with a generic solver."""
    n = len(y)
    t = np.where(np.asarray(y) == 1, 1.0, -1.0)
    if kernel == "linear":
        K = X @ X.T
    else:
        sq = ((X[:, None, :] - X[None, :, :]) ** 2).sum(-1)
        K = np.exp(-gamma * sq)
    P = cvxopt.matrix(np.outer(t, t) * K)
    q = cvxopt.matrix(-np.ones(n))
    G = cvxopt.matrix(np.vstack([-np.eye(n), np.eye(n)]))
    h = cvxopt.matrix(np.hstack([np.zeros(n), C * np.ones(n)]))
    A = cvxopt.matrix(t.reshape(1, -1))
    b = cvxopt.matrix(0.0)
    sol = cvxopt.solvers.qp(P, q, G, h, A, b)
    alpha = np.array(sol["x"]).ravel()
    return float(alpha.sum() - 0.5 * (alpha * t) @ K @ (alpha * t))


def random_problems(n_trials=12, max_points=12):
    rng = np.random.default_rng(42)
    problems = []
    while len(problems) < n_trials:
        n = int(rng.integers(6, max_points + 1))
        X = rng.normal(size=(n, 2))
        y = (X[:, 0] + 0.3 * rng.normal(size=n) > 0).astype(int)
        if len(set(y)) == 2:
            problems.append((X, y, float(rng.choice([0.5, 1.0, 10.0]))))
    return problems


class TestSMOAgainstQPOracle:
    @pytest.mark.parametrize("kernel", ["linear", "rbf"])
    def test_dual_objective_matches(self, kernel):
        for X, y, C in random_problems():
            svm = SVM(C=C, kernel=kernel, gamma="scale", seed=1).fit(X, y)
            reference = qp_dual_optimum(X, y, C, kernel, svm.gamma_value)
            assert abs(svm.dual_objective() - reference) < 1e-3

    @pytest.mark.parametrize("kernel", ["linear", "rbf"])
    def test_kkt_conditions_hold(self, kernel):
        for X, y, C in random_problems():
            svm = SVM(C=C, kernel=kernel, gamma="scale", seed=1).fit(X, y)
            assert svm.kkt_violation() <= 1e-3 + 1e-9


class TestSVMBehavior:
    def test_separable_classification(self):
        rng = np.random.default_rng(5)
        X = np.vstack([rng.normal(-2, 0.4, (20, 2)), rng.normal(2, 0.4, (20, 2))])
        y = np.array([0] * 20 + [1] * 20)
        svm = SVM(C=1.0, kernel="rbf").fit(X, y)
        preds = (svm.predict_proba(X) >= 0.5).astype(int)
        assert np.mean(preds == y) == 1.0

    def test_proba_agrees_with_decision_sign(self):
        rng = np.random.default_rng(6)
        X = rng.normal(size=(24, 2))
        y = (X[:, 0] > 0).astype(int)
        svm = SVM(C=1.0, kernel="linear").fit(X, y)
        Q = rng.normal(size=(40, 2))
        assert np.array_equal(svm.predict_proba(Q) >= 0.5, svm.decision(Q) >= 0)

    def test_deterministic_given_seed(self):
        rng = np.random.default_rng(7)
        X = rng.normal(size=(30, 3))
        y = (X[:, 0] + X[:, 1] > 0).astype(int)
        a = SVM(C=1.0, kernel="rbf", seed=3).fit(X, y)
        b = SVM(C=1.0, kernel="rbf", seed=3).fit(X, y)
        assert np.array_equal(a.support_vectors, b.support_vectors)
        assert np.array_equal(a.dual_coef, b.dual_coef)
        assert a.b == b.b

    def test_gamma_modes(self):
        X = np.array([[0.0, 1.0], [2.0, 3.0], [4.0, 5.0]])
        assert resolve_gamma("auto", X) == pytest.approx(1 / 2)
        assert resolve_gamma("scale", X) == pytest.approx(1 / (2 * X.var()))
        assert resolve_gamma(0.7, X) == pytest.approx(0.7)

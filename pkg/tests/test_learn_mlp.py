import numpy as np
import pytest

from claimcheck.learn import MLP, parameter_count
from claimcheck.learn.base import rng_from
from claimcheck.learn.mlp import bce_loss, init_params, loss_and_grads


def finite_difference_check(params, X, y, eps=1e-6):
    """Central finite differences over every parameter entry."""
    _, grads = loss_and_grads(params, X, y)
    worst = 0.0
    for layer, (w, b) in enumerate(params):
        for arr, grad in ((w, grads[layer][0]), (b, grads[layer][1])):
            it = np.nditer(arr, flags=["multi_index"])
            for _ in it:
                ix = it.multi_index
                orig = arr[ix]
                arr[ix] = orig + eps
                up = bce_loss(params, X, y)
                arr[ix] = orig - eps
                down = bce_loss(params, X, y)
                arr[ix] = orig
                fd = (up - down) / (2 * eps)
                denom = max(abs(fd) + abs(grad[ix]), 1e-8)
                worst = max(worst, abs(fd - grad[ix]) / denom)
    return worst


class TestGradients:
    @pytest.mark.parametrize("seed", [3, 4, 5])
    def test_backprop_matches_finite_differences(self, seed):
        rng = rng_from(seed)
        params = init_params(4, (7, 5), rng)
        X = rng.normal(size=(6, 4))
        y = (rng.random(6) > 0.5).astype(float)
        assert finite_difference_check(params, X, y) < 1e-4

    def test_gradient_shapes(self):
        rng = rng_from(0)
        params = init_params(3, (8, 4), rng)
        X = rng.normal(size=(5, 3))
        y = np.array([0.0, 1.0, 1.0, 0.0, 1.0])
        _, grads = loss_and_grads(params, X, y)
        for (w, b), (dw, db) in zip(params, grads):
            assert dw.shape == w.shape and db.shape == b.shape


class TestArchitecture:
    def test_parameter_count_for_20_inputs(self):
        assert parameter_count(20) == 11_009

    def test_parameter_count_matches_init(self):
        rng = rng_from(1)
        params = init_params(20, (128, 64), rng)
        total = sum(w.size + b.size for w, b in params)
        assert total == 11_009


class TestTraining:
    def _toy(self):
        rng = np.random.default_rng(0)
        X = np.vstack([rng.normal(-2, 0.5, (60, 5)), rng.normal(2, 0.5, (60, 5))])
        y = np.array([0] * 60 + [1] * 60)
        return X, y

    def test_loss_strictly_decreases_first_five_epochs(self):
        X, y = self._toy()
        model = MLP(seed=0).fit(X, y)
        for i in range(4):
            assert model.train_losses[i + 1] < model.train_losses[i]

    def test_best_epoch_minimizes_val_loss(self):
        X, y = self._toy()
        model = MLP(seed=0).fit(X, y)
        assert model.val_losses[model.best_epoch] == min(model.val_losses)

    def test_inference_has_no_dropout(self):
        X, y = self._toy()
        model = MLP(dropout=0.5, epochs=2, seed=1).fit(X, y)
        a = model.predict_proba(X)
        b = model.predict_proba(X)
        assert np.array_equal(a, b)

    def test_deterministic_given_seed(self):
        X, y = self._toy()
        a = MLP(epochs=3, seed=5).fit(X, y).predict_proba(X)
        b = MLP(epochs=3, seed=5).fit(X, y).predict_proba(X)
        assert np.array_equal(a, b)

    def test_explicit_validation_set_used(self):
        X, y = self._toy()
        X_val = X[::7]
        y_val = y[::7]
        model = MLP(epochs=3, seed=2).fit(X, y, validation=(X_val, y_val))
        assert len(model.val_losses) == 3

    def test_separable_data_learned(self):
        X, y = self._toy()
        model = MLP(seed=0).fit(X, y)
        assert np.mean((model.predict_proba(X) >= 0.5) == y) >= 0.99

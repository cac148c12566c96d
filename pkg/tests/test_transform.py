import numpy as np
import pytest

from claimcheck.corpus import TWEET_TYPES
from claimcheck.features import (
    FeatureFrame,
    FrameSchemaError,
    apply_scaler,
    fit_transform_scaler,
    one_hot,
    pca2,
    rfe_select,
)


def frame_of(matrix, schema=None, categoricals=None):
    matrix = np.asarray(matrix, dtype=np.float64)
    schema = tuple(schema or [f"f{i}" for i in range(matrix.shape[1])])
    return FeatureFrame(schema=schema, matrix=matrix, categoricals=categoricals or {})


class TestScaler:
    def test_hand_zscores(self):
        frame = fit_transform_scaler(frame_of([[1.0], [2.0], [3.0]]))
        expected = np.array([-1.224744871391589, 0.0, 1.224744871391589])
        assert np.allclose(frame.matrix[:, 0], expected, atol=1e-9)

    def test_constant_column_maps_to_zeros(self):
        frame = fit_transform_scaler(frame_of([[5.0], [5.0], [5.0]]))
        assert np.array_equal(frame.matrix[:, 0], np.zeros(3))

    def test_fit_set_has_zero_mean_unit_std(self):
        rng = np.random.default_rng(0)
        frame = fit_transform_scaler(frame_of(rng.normal(3, 7, size=(50, 4))))
        assert np.all(np.abs(frame.matrix.mean(axis=0)) < 1e-12)
        assert np.allclose(frame.matrix.std(axis=0), 1.0, atol=1e-9)

    def test_apply_uses_stored_statistics(self):
        rng = np.random.default_rng(1)
        train = frame_of(rng.normal(size=(30, 2)))
        fitted = fit_transform_scaler(train)
        test = frame_of(np.array([[10.0, -10.0]]))
        out = apply_scaler(test, fitted.scaler)
        expected = (np.array([[10.0, -10.0]]) - fitted.scaler.mean) / fitted.scaler.std
        assert np.allclose(out.matrix, expected)

    def test_round_trip_within_tolerance(self):
        rng = np.random.default_rng(2)
        original = rng.normal(5, 3, size=(20, 3))
        fitted = fit_transform_scaler(frame_of(original))
        back = fitted.scaler.inverse(fitted.matrix)
        assert np.allclose(back, original, atol=1e-9)

    def test_schema_mismatch_rejected(self):
        fitted = fit_transform_scaler(frame_of([[1.0], [2.0]], schema=["a"]))
        other = frame_of([[1.0], [2.0]], schema=["b"])
        with pytest.raises(FrameSchemaError):
            apply_scaler(other, fitted.scaler)


class TestOneHot:
    def test_tweet_type_block_in_declared_order(self):
        frame = frame_of(
            np.zeros((1, 1)), schema=["x"], categoricals={"tweet_type": ["quote"]}
        )
        out = one_hot(frame, "tweet_type", categories=TWEET_TYPES)
        assert out.schema[1:] == (
            "tweet_type=tweet",
            "tweet_type=retweet",
            "tweet_type=quote",
            "tweet_type=reply",
        )
        assert np.array_equal(out.matrix[0, 1:], [0.0, 0.0, 1.0, 0.0])

    def test_learned_categories_are_sorted(self):
        frame = frame_of(
            np.zeros((3, 1)), categoricals={"c": ["b", "a", "b"]}
        )
        out = one_hot(frame, "c")
        assert out.encodings["c"] == ("a", "b")
        assert np.array_equal(out.matrix[:, 1:], [[0, 1], [1, 0], [0, 1]])

    def test_single_category_all_ones(self):
        frame = frame_of(np.zeros((3, 1)), categoricals={"c": ["only"] * 3})
        out = one_hot(frame, "c")
        assert out.matrix[:, 1:].shape == (3, 1)
        assert np.array_equal(out.matrix[:, 1], np.ones(3))

    def test_unseen_category_gives_zero_row(self):
        frame = frame_of(
            np.zeros((1, 1)), categoricals={"tweet_type": ["promoted"]}
        )
        out = one_hot(frame, "tweet_type", categories=TWEET_TYPES)
        assert np.array_equal(out.matrix[0, 1:], np.zeros(4))

    def test_missing_column_rejected(self):
        with pytest.raises(FrameSchemaError):
            one_hot(frame_of(np.zeros((1, 1))), "nope")


class TestPca2:
    def test_collinear_data_first_ratio_one(self):
        line = np.array([[t, t] for t in np.linspace(-3, 3, 17)])
        result = pca2(line)
        assert result.explained_variance_ratio[0] == pytest.approx(1.0, abs=1e-9)

    def test_axis_aligned_component(self):
        rng = np.random.default_rng(0)
        X = np.column_stack([rng.normal(0, 5, 200), rng.normal(0, 0.1, 200)])
        result = pca2(X)
        assert abs(result.components[0] @ np.array([1.0, 0.0])) > 0.999

    def test_components_orthonormal(self):
        rng = np.random.default_rng(1)
        result = pca2(rng.normal(size=(5, 3)))
        assert abs(result.components[0] @ result.components[1]) < 1e-9
        assert np.linalg.norm(result.components[0]) == pytest.approx(1.0)
        assert np.linalg.norm(result.components[1]) == pytest.approx(1.0)

    def test_matches_eigendecomposition_oracle(self):
        rng = np.random.default_rng(2)
        X = rng.normal(size=(5, 3))
        centered = X - X.mean(axis=0)
        eigvals = np.sort(np.linalg.eigvalsh(np.cov(centered.T)))[::-1]
        result = pca2(X)
        assert np.allclose(result.explained_variance, eigvals[:2], atol=1e-9)

    def test_full_reconstruction_on_2d(self):
        rng = np.random.default_rng(3)
        X = rng.normal(size=(10, 2))
        result = pca2(X)
        rebuilt = result.coords @ result.components + X.mean(axis=0)
        assert np.allclose(rebuilt, X, atol=1e-9)

    def test_variances_descending(self):
        rng = np.random.default_rng(4)
        result = pca2(rng.normal(size=(30, 6)))
        assert result.explained_variance[0] >= result.explained_variance[1]

    def test_zero_variance_rejected(self):
        with pytest.raises(ValueError):
            pca2(np.ones((5, 3)))


class TestRfe:
    def synthetic(self, n=80, d=8, signal=3, seed=0):
        rng = np.random.default_rng(seed)
        X = rng.normal(size=(n, d))
        y = (X[:, signal] > 0).astype(int)
        return frame_of(X), y

    def test_planted_feature_survives_to_k1(self):
        frame, y = self.synthetic()
        # forest oracle: the planted column dominates importance up front
        from claimcheck.learn import RandomForest

        probe = RandomForest(n_trees=25, seed=0).fit(frame.matrix, y)
        assert np.argmax(probe.importances_) == 3
        result = rfe_select(frame, y, target_k=1, forest_spec={"n_trees": 25}, seed=0)
        assert result.selected == ("f3",)

    def test_selected_count_and_ranking_permutation(self):
        frame, y = self.synthetic()
        result = rfe_select(frame, y, target_k=4, forest_spec={"n_trees": 10}, seed=1)
        assert len(result.selected) == 4
        assert sorted(result.ranking) == sorted(frame.schema)
        assert set(result.selected) <= set(frame.schema)

    def test_identity_when_k_equals_feature_count(self):
        frame, y = self.synthetic(d=5)
        result = rfe_select(frame, y, target_k=5, forest_spec={"n_trees": 5}, seed=0)
        assert set(result.selected) == set(frame.schema)

    def test_deterministic(self):
        frame, y = self.synthetic(seed=2)
        a = rfe_select(frame, y, target_k=3, forest_spec={"n_trees": 8}, seed=9)
        b = rfe_select(frame, y, target_k=3, forest_spec={"n_trees": 8}, seed=9)
        assert a.selected == b.selected and a.ranking == b.ranking

    def test_bad_target_k(self):
        frame, y = self.synthetic(d=4)
        with pytest.raises(ValueError):
            rfe_select(frame, y, target_k=0)
        with pytest.raises(ValueError):
            rfe_select(frame, y, target_k=9)

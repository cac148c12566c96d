"""Decision trees by exhaustive threshold search, and bagged forests of them.

Trees are stored as flat parallel arrays (feature, threshold, children,
leaf value) so artifacts serialize bit-identically. A node goes left when
``x[feature] <= threshold``; thresholds are midpoints between consecutive
distinct training values. Impurity-decrease totals are accumulated per
feature during building, which is what the recursive feature elimination
step consumes.
"""

from __future__ import annotations

import numpy as np

from .base import rng_from, spawn_rngs

_LEAF = -1


def _impurity(n0, n1, criterion: str):
    n = n0 + n1
    with np.errstate(divide="ignore", invalid="ignore"):
        p0 = np.where(n > 0, n0 / n, 0.0)
        p1 = np.where(n > 0, n1 / n, 0.0)
        if criterion == "gini":
            return 1.0 - p0 * p0 - p1 * p1
        log0 = np.where(p0 > 0, np.log2(np.where(p0 > 0, p0, 1.0)), 0.0)
        log1 = np.where(p1 > 0, np.log2(np.where(p1 > 0, p1, 1.0)), 0.0)
        return -(p0 * log0 + p1 * log1)


def _resolve_max_features(max_features, d: int) -> int:
    if max_features in (None, "none"):
        return d
    if max_features in ("sqrt", "auto"):
        return max(1, int(np.sqrt(d)))
    if max_features == "log2":
        return max(1, int(np.log2(d))) if d > 1 else 1
    raise ValueError(f"bad max_features {max_features!r}")


class DecisionTree:
    def __init__(self, criterion: str = "gini", max_depth=None, max_features=None,
                 min_samples_split: int = 2, min_samples_leaf: int = 1, seed: int = 0):
        self.criterion = criterion
        self.max_depth = max_depth
        self.max_features = max_features
        # the Table-3 style grids allow min_samples_split=1; a 1-row node
        # cannot split anyway, so treat it as "no constraint"
        self.min_samples_split = max(min_samples_split, 2)
        self.min_samples_leaf = min_samples_leaf
        self.seed = seed
        self.feature: np.ndarray | None = None
        self.threshold = None
        self.left = None
        self.right = None
        self.value = None  # P(class 1) at the node
        self.n_node = None
        self.importances_ = None

    def fit(self, X: np.ndarray, y: np.ndarray, rng=None) -> "DecisionTree":
        X = np.asarray(X, dtype=np.float64)
        y = np.asarray(y, dtype=np.int64)
        n, d = X.shape
        if rng is None:
            rng = rng_from(self.seed)
        k = _resolve_max_features(self.max_features, d)
        nodes_feature: list[int] = []
        nodes_threshold: list[float] = []
        nodes_left: list[int] = []
        nodes_right: list[int] = []
        nodes_value: list[float] = []
        nodes_n: list[int] = []
        importance = np.zeros(d)

        def new_node() -> int:
            nodes_feature.append(_LEAF)
            nodes_threshold.append(0.0)
            nodes_left.append(_LEAF)
            nodes_right.append(_LEAF)
            nodes_value.append(0.0)
            nodes_n.append(0)
            return len(nodes_feature) - 1

        def best_split_among(feats: np.ndarray, idx: np.ndarray, total1: int):
            """Best (impurity, feature, threshold) over a batch of candidate
            features, evaluating every boundary of every column at once.
            Ties keep the earliest feature in ``feats`` order, then the
            lowest threshold."""
            m = len(idx)
            sub = X[np.ix_(idx, feats)]
            order = np.argsort(sub, axis=0, kind="stable")
            sv = np.take_along_axis(sub, order, axis=0)
            sy = y[idx][order]
            boundary = sv[1:] != sv[:-1]  # (m-1, f)
            if self.min_samples_leaf > 1:
                pos = np.arange(1, m)
                fits = (pos >= self.min_samples_leaf) & (m - pos >= self.min_samples_leaf)
                boundary &= fits[:, None]
            if not boundary.any():
                return None
            left_n = np.arange(1, m, dtype=np.float64)[:, None]
            left_n1 = np.cumsum(sy, axis=0)[:-1]
            right_n = m - left_n
            right_n1 = total1 - left_n1
            weighted = (
                left_n * _impurity(left_n - left_n1, left_n1, self.criterion)
                + right_n * _impurity(right_n - right_n1, right_n1, self.criterion)
            ) / m
            weighted[~boundary] = np.inf
            per_feature_best = weighted.min(axis=0)
            winner = int(np.flatnonzero(
                per_feature_best <= per_feature_best.min() + 1e-15
            )[0])
            row = int(np.argmin(weighted[:, winner]))
            threshold = 0.5 * (sv[row, winner] + sv[row + 1, winner])
            return float(weighted[row, winner]), int(feats[winner]), float(threshold)

        def build(idx: np.ndarray, depth: int) -> int:
            node = new_node()
            m = len(idx)
            n1 = int(y[idx].sum())
            nodes_value[node] = n1 / m
            nodes_n[node] = m
            if (
                n1 == 0
                or n1 == m
                or m < self.min_samples_split
                or (self.max_depth is not None and depth >= self.max_depth)
            ):
                return node
            if k < d:
                feat_order = rng.permutation(d)
            else:
                feat_order = np.arange(d)
            best = best_split_among(feat_order[:k], idx, n1)
            if best is None and k < d:
                # the sampled features were all constant here; keep scanning
                # the remaining features in chunks until one can split
                rest = feat_order[k:]
                for start in range(0, len(rest), 64):
                    best = best_split_among(rest[start : start + 64], idx, n1)
                    if best is not None:
                        break
            if best is None:
                return node
            imp, f, thr = best
            parent_imp = float(_impurity(np.array(m - n1), np.array(n1), self.criterion))
            importance[f] += m * (parent_imp - imp)
            go_left = X[idx, f] <= thr
            nodes_feature[node] = f
            nodes_threshold[node] = thr
            nodes_left[node] = build(idx[go_left], depth + 1)
            nodes_right[node] = build(idx[~go_left], depth + 1)
            return node

        build(np.arange(n), 0)
        self.feature = np.array(nodes_feature, dtype=np.int64)
        self.threshold = np.array(nodes_threshold, dtype=np.float64)
        self.left = np.array(nodes_left, dtype=np.int64)
        self.right = np.array(nodes_right, dtype=np.int64)
        self.value = np.array(nodes_value, dtype=np.float64)
        self.n_node = np.array(nodes_n, dtype=np.int64)
        total = importance.sum()
        self.importances_ = importance / total if total > 0 else importance
        return self

    def predict_proba(self, X: np.ndarray) -> np.ndarray:
        X = np.asarray(X, dtype=np.float64)
        out = np.empty(X.shape[0])
        for i, row in enumerate(X):
            node = 0
            while self.feature[node] != _LEAF:
                node = (
                    self.left[node]
                    if row[self.feature[node]] <= self.threshold[node]
                    else self.right[node]
                )
            out[i] = self.value[node]
        return out

    @property
    def n_leaves(self) -> int:
        return int((self.feature == _LEAF).sum())

    @property
    def depth(self) -> int:
        depths = np.zeros(len(self.feature), dtype=int)
        for node in range(len(self.feature)):
            if self.feature[node] != _LEAF:
                depths[self.left[node]] = depths[node] + 1
                depths[self.right[node]] = depths[node] + 1
        return int(depths.max())

    def get_params(self) -> dict:
        return {
            "feature": self.feature,
            "threshold": self.threshold,
            "left": self.left,
            "right": self.right,
            "value": self.value,
            "n_node": self.n_node,
            "importances": self.importances_,
        }

    def set_params(self, params: dict) -> "DecisionTree":
        self.feature = np.asarray(params["feature"], dtype=np.int64)
        self.threshold = np.asarray(params["threshold"], dtype=np.float64)
        self.left = np.asarray(params["left"], dtype=np.int64)
        self.right = np.asarray(params["right"], dtype=np.int64)
        self.value = np.asarray(params["value"], dtype=np.float64)
        self.n_node = np.asarray(params["n_node"], dtype=np.int64)
        self.importances_ = np.asarray(params["importances"], dtype=np.float64)
        return self


class RandomForest:
    def __init__(self, n_trees: int = 100, bootstrap: bool = True,
                 criterion: str = "gini", max_depth=None, max_features="sqrt",
                 min_samples_split: int = 2, min_samples_leaf: int = 1, seed: int = 0):
        self.n_trees = n_trees
        self.bootstrap = bootstrap
        self.criterion = criterion
        self.max_depth = max_depth
        self.max_features = max_features
        self.min_samples_split = min_samples_split
        self.min_samples_leaf = min_samples_leaf
        self.seed = seed
        self.trees: list[DecisionTree] = []
        self.importances_ = None

    def fit(self, X: np.ndarray, y: np.ndarray) -> "RandomForest":
        X = np.asarray(X, dtype=np.float64)
        y = np.asarray(y, dtype=np.int64)
        n = X.shape[0]
        self.trees = []
        rngs = spawn_rngs(self.seed, self.n_trees)
        importance = np.zeros(X.shape[1])
        for rng in rngs:
            if self.bootstrap:
                idx = rng.integers(0, n, size=n)
            else:
                idx = np.arange(n)
            tree = DecisionTree(
                criterion=self.criterion,
                max_depth=self.max_depth,
                max_features=self.max_features,
                min_samples_split=self.min_samples_split,
                min_samples_leaf=self.min_samples_leaf,
            )
            tree.fit(X[idx], y[idx], rng=rng)
            importance += tree.importances_
            self.trees.append(tree)
        total = importance.sum()
        self.importances_ = importance / total if total > 0 else importance
        return self

    def predict_proba(self, X: np.ndarray) -> np.ndarray:
        votes = np.zeros(np.asarray(X).shape[0])
        for tree in self.trees:
            votes += tree.predict_proba(X)
        return votes / len(self.trees)

    def get_params(self) -> dict:
        return {
            "n_trees": self.n_trees,
            "trees": [t.get_params() for t in self.trees],
            "importances": self.importances_,
        }

    def set_params(self, params: dict) -> "RandomForest":
        self.trees = [DecisionTree().set_params(p) for p in params["trees"]]
        self.n_trees = int(params["n_trees"])
        self.importances_ = np.asarray(params["importances"], dtype=np.float64)
        return self

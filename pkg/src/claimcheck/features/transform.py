"""Feature-matrix plumbing: the named frame, standardization, one-hot
encoding, and two-component PCA for visualization exports."""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from ..corpus import TweetRecord
from .extract import CATEGORICAL_FEATURES, FEATURE_NAMES, extract_features
from .lexicons import Lexicons


class FrameSchemaError(ValueError):
    pass


@dataclass(frozen=True)
class Scaler:
    names: tuple
    mean: np.ndarray
    std: np.ndarray  # population std; zero-variance columns keep std 0

    def transform(self, matrix: np.ndarray) -> np.ndarray:
        safe = np.where(self.std > 0, self.std, 1.0)
        out = (matrix - self.mean) / safe
        out[:, self.std == 0] = 0.0
        return out

    def inverse(self, matrix: np.ndarray) -> np.ndarray:
        safe = np.where(self.std > 0, self.std, 1.0)
        return matrix * safe + self.mean


@dataclass(frozen=True)
class FeatureFrame:
    schema: tuple
    matrix: np.ndarray
    categoricals: dict = field(default_factory=dict)
    scaler: Scaler | None = None
    encodings: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.matrix.ndim != 2 or self.matrix.shape[1] != len(self.schema):
            raise FrameSchemaError(
                f"matrix has {self.matrix.shape} but schema lists {len(self.schema)} columns"
            )
        if not np.isfinite(self.matrix).all():
            raise FrameSchemaError("matrix contains NaN or infinite entries")
        for name, values in self.categoricals.items():
            if len(values) != self.matrix.shape[0]:
                raise FrameSchemaError(f"categorical {name!r} length mismatch")

    @property
    def n_rows(self) -> int:
        return self.matrix.shape[0]

    def column(self, name: str) -> np.ndarray:
        return self.matrix[:, self.schema.index(name)]

    def select(self, names) -> "FeatureFrame":
        missing = [n for n in names if n not in self.schema]
        if missing:
            raise FrameSchemaError(f"frame has no columns {missing}")
        idx = [self.schema.index(n) for n in names]
        return replace(
            self, schema=tuple(names), matrix=self.matrix[:, idx], scaler=None
        )


def build_frame(records: list[TweetRecord], lex: Lexicons) -> FeatureFrame:
    """Extract the full feature set for every record into one frame."""
    numeric_names = tuple(n for n in FEATURE_NAMES if n not in CATEGORICAL_FEATURES)
    rows = []
    categoricals: dict = {name: [] for name in CATEGORICAL_FEATURES}
    for record in records:
        values = extract_features(record, lex)
        rows.append([values[n] for n in numeric_names])
        for name in CATEGORICAL_FEATURES:
            categoricals[name].append(values[name])
    matrix = np.array(rows, dtype=np.float64) if rows else np.zeros((0, len(numeric_names)))
    return FeatureFrame(schema=numeric_names, matrix=matrix, categoricals=categoricals)


def fit_transform_scaler(frame: FeatureFrame) -> FeatureFrame:
    """Standardize every numeric column to mean 0 / population std 1 (fit on
    this frame, meant to be the training rows only)."""
    mean = frame.matrix.mean(axis=0)
    std = frame.matrix.std(axis=0)  # population std
    scaler = Scaler(names=frame.schema, mean=mean, std=std)
    return replace(frame, matrix=scaler.transform(frame.matrix), scaler=scaler)


def apply_scaler(frame: FeatureFrame, scaler: Scaler) -> FeatureFrame:
    if tuple(scaler.names) != tuple(frame.schema):
        raise FrameSchemaError(
            f"scaler was fitted on {scaler.names}, frame has {frame.schema}"
        )
    return replace(frame, matrix=scaler.transform(frame.matrix), scaler=scaler)


def one_hot(frame: FeatureFrame, column: str, categories=None) -> FeatureFrame:
    """Expand one categorical column into binary indicator columns.

    ``categories`` is learned (sorted unique values) when absent, or reused
    from a fit-time frame; unseen values at apply time produce all-zero
    indicator rows.
    """
    if column not in frame.categoricals:
        raise FrameSchemaError(f"no categorical column {column!r}")
    values = frame.categoricals[column]
    if categories is None:
        categories = tuple(sorted(set(values)))
    block = np.zeros((frame.n_rows, len(categories)))
    index = {c: i for i, c in enumerate(categories)}
    for row, value in enumerate(values):
        col = index.get(value)
        if col is not None:
            block[row, col] = 1.0
    new_names = tuple(f"{column}={c}" for c in categories)
    remaining = {k: v for k, v in frame.categoricals.items() if k != column}
    return FeatureFrame(
        schema=frame.schema + new_names,
        matrix=np.hstack([frame.matrix, block]) if frame.n_rows else
        np.zeros((0, len(frame.schema) + len(new_names))),
        categoricals=remaining,
        scaler=frame.scaler,
        encodings={**frame.encodings, column: tuple(categories)},
    )


@dataclass(frozen=True)
class PcaResult:
    coords: np.ndarray  # (n, 2)
    components: np.ndarray  # (2, d) orthonormal rows
    explained_variance: np.ndarray  # (2,) descending
    explained_variance_ratio: np.ndarray  # (2,)


def pca2(matrix: np.ndarray) -> PcaResult:
    """Project rows onto the two leading principal axes.

    Columns are centered internally; components carry a deterministic sign
    (largest-magnitude loading positive). Zero-variance input is an error.
    """
    X = np.asarray(matrix, dtype=np.float64)
    if X.ndim != 2 or X.shape[0] < 2 or X.shape[1] < 2:
        raise ValueError("PCA needs at least 2 rows and 2 features")
    centered = X - X.mean(axis=0)
    cov = centered.T @ centered / (X.shape[0] - 1)
    eigvals, eigvecs = np.linalg.eigh(cov)
    order = np.argsort(eigvals)[::-1]
    eigvals = np.maximum(eigvals[order], 0.0)
    if eigvals[0] <= 0:
        raise ValueError("input has zero variance, PCA undefined")
    components = eigvecs[:, order[:2]].T.copy()
    for i in range(2):
        lead = np.argmax(np.abs(components[i]))
        if components[i, lead] < 0:
            components[i] = -components[i]
    coords = centered @ components.T
    total = eigvals.sum()
    return PcaResult(
        coords=coords,
        components=components,
        explained_variance=eigvals[:2],
        explained_variance_ratio=eigvals[:2] / total,
    )

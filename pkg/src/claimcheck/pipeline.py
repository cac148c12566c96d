"""Glue between corpora, feature engineering, and models: the fitted
transform state (one-hot categories + scaler + selection), feature CSV
round-tripping, and end-to-end helpers the CLI and service share."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .corpus import TWEET_TYPES, TweetRecord, Verdict
from .features import (
    CATEGORICAL_FEATURES,
    FeatureFrame,
    Lexicons,
    Scaler,
    apply_scaler,
    build_frame,
    fit_transform_scaler,
    one_hot,
)

_DECLARED_CATEGORIES = {"tweet_type": TWEET_TYPES}


@dataclass(frozen=True)
class TransformState:
    categories: dict  # categorical column -> tuple of categories
    scaler: Scaler
    selected: tuple | None = None  # post-encoding feature names kept

    def to_json(self) -> str:
        doc = {
            "categories": {k: list(v) for k, v in self.categories.items()},
            "scaler": {
                "names": list(self.scaler.names),
                "mean": list(map(float, self.scaler.mean)),
                "std": list(map(float, self.scaler.std)),
            },
            "selected": list(self.selected) if self.selected is not None else None,
        }
        return json.dumps(doc, sort_keys=True, indent=1) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "TransformState":
        doc = json.loads(text)
        scaler = Scaler(
            names=tuple(doc["scaler"]["names"]),
            mean=np.array(doc["scaler"]["mean"], dtype=np.float64),
            std=np.array(doc["scaler"]["std"], dtype=np.float64),
        )
        selected = doc.get("selected")
        return cls(
            categories={k: tuple(v) for k, v in doc["categories"].items()},
            scaler=scaler,
            selected=tuple(selected) if selected is not None else None,
        )


def encode_frame(
    frame: FeatureFrame, state: TransformState | None = None, fit: bool = False
) -> tuple[FeatureFrame, TransformState]:
    """One-hot encode and standardize a raw extracted frame.

    ``fit=True`` learns categories (tweet_type uses its declared order) and
    scaler statistics; otherwise ``state`` must carry a previous fit.
    """
    if fit:
        categories = {}
        for column in CATEGORICAL_FEATURES:
            declared = _DECLARED_CATEGORIES.get(column)
            frame = one_hot(frame, column, categories=declared)
            categories[column] = frame.encodings[column]
        frame = fit_transform_scaler(frame)
        return frame, TransformState(categories=categories, scaler=frame.scaler)
    if state is None:
        raise ValueError("state is required when fit=False")
    for column in CATEGORICAL_FEATURES:
        frame = one_hot(frame, column, categories=state.categories[column])
    frame = apply_scaler(frame, state.scaler)
    return frame, state


def select_columns(frame: FeatureFrame, state: TransformState) -> FeatureFrame:
    if state.selected is None:
        return frame
    return frame.select(state.selected)


def featurize_records(
    records: list[TweetRecord],
    lex: Lexicons,
    state: TransformState | None = None,
    fit: bool = False,
) -> tuple[FeatureFrame, TransformState]:
    frame = build_frame(records, lex)
    frame, state = encode_frame(frame, state=state, fit=fit)
    if state.selected is not None:
        frame = frame.select(state.selected)
    return frame, state


def labels_of(records: list) -> np.ndarray:
    return np.array(
        [1 if r.verdict is Verdict.MISINFORMATIVE else 0 for r in records], dtype=int
    )


def write_feature_csv(path, ids, labels, frame: FeatureFrame) -> str:
    """Feature matrix as CSV: id, verdict, then one column per feature."""
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["id", "verdict", *frame.schema])
    for i in range(frame.n_rows):
        verdict = Verdict.MISINFORMATIVE if labels[i] else Verdict.INFORMATIVE
        writer.writerow(
            [ids[i], verdict.value, *(repr(float(v)) for v in frame.matrix[i])]
        )
    text = buf.getvalue()
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text


def read_feature_csv(path) -> tuple[list, np.ndarray, FeatureFrame]:
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if header[:2] != ["id", "verdict"]:
            raise ValueError(f"{path}: not a feature CSV (header {header[:2]})")
        schema = tuple(header[2:])
        ids, labels, rows = [], [], []
        for row in reader:
            ids.append(row[0])
            labels.append(1 if Verdict.parse(row[1]) is Verdict.MISINFORMATIVE else 0)
            rows.append([float(v) for v in row[2:]])
    matrix = np.array(rows, dtype=np.float64) if rows else np.zeros((0, len(schema)))
    return ids, np.array(labels, dtype=int), FeatureFrame(schema=schema, matrix=matrix)


def texts_of(records: list) -> list[str]:
    return [r.content if isinstance(r, TweetRecord) else r.text for r in records]

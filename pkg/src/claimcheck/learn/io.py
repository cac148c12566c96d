"""Model artifact serialization.

Artifacts are JSON documents with a versioned envelope. Numpy arrays are
stored as ``{"__ndarray__": {"dtype", "shape", "data"}}`` where ``data`` is
standard base64 of the raw little-endian buffer, so parameters round-trip
bit-identically. See docs/model-format.md for the full layout.
"""

from __future__ import annotations

import base64
import json
import os
import tempfile
from pathlib import Path

import numpy as np

from ..vectorize import TfidfModel
from .base import ModelConfig, SchemaBinding, TrainedModel
from .logistic import LogisticRegression
from .mlp import MLP
from .naive_bayes import GaussianNB, MultinomialNB
from .stack import StackingClassifier
from .svm import SVM
from .tree import DecisionTree, RandomForest

FORMAT_TAG = "claimcheck-model"
SCHEMA_VERSION = 1

_MODEL_CLASSES = {
    "LogisticRegression": LogisticRegression,
    "GaussianNB": GaussianNB,
    "MultinomialNB": MultinomialNB,
    "SVM": SVM,
    "DecisionTree": DecisionTree,
    "RandomForest": RandomForest,
    "StackingClassifier": StackingClassifier,
    "MLP": MLP,
}


class ModelFormatError(ValueError):
    pass


class IncompatibleVersionError(ModelFormatError):
    pass


def _encode(obj):
    if isinstance(obj, np.ndarray):
        array = np.ascontiguousarray(obj)
        if array.dtype.byteorder == ">":
            array = array.astype(array.dtype.newbyteorder("<"))
        return {
            "__ndarray__": {
                "dtype": array.dtype.str,
                "shape": list(array.shape),
                "data": base64.b64encode(array.tobytes()).decode("ascii"),
            }
        }
    if isinstance(obj, dict):
        return {k: _encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_encode(v) for v in obj]
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating,)):
        return float(obj)
    return obj


def _decode(obj):
    if isinstance(obj, dict):
        if "__ndarray__" in obj:
            spec = obj["__ndarray__"]
            data = base64.b64decode(spec["data"])
            return np.frombuffer(data, dtype=np.dtype(spec["dtype"])).reshape(spec["shape"]).copy()
        return {k: _decode(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_decode(v) for v in obj]
    return obj


def _encode_binding(binding: SchemaBinding) -> dict:
    doc = {"type": binding.type, "width": binding.width}
    if binding.type == "features":
        doc["names"] = list(binding.names)
    elif binding.type == "tfidf":
        tfidf = binding.tfidf
        doc["tfidf"] = {
            "vocabulary": tfidf.vocabulary,
            "idf": _encode(tfidf.idf),
            "doc_count": tfidf.doc_count,
            "df": _encode(tfidf.df),
        }
    return doc


def _decode_binding(doc: dict) -> SchemaBinding:
    if doc["type"] == "features":
        return SchemaBinding(type="features", width=doc["width"], names=tuple(doc["names"]))
    if doc["type"] == "tfidf":
        spec = doc["tfidf"]
        tfidf = TfidfModel(
            vocabulary=dict(spec["vocabulary"]),
            idf=_decode(spec["idf"]),
            doc_count=int(spec["doc_count"]),
            df=_decode(spec["df"]),
        )
        return SchemaBinding(type="tfidf", width=tfidf.size, tfidf=tfidf)
    return SchemaBinding(type="width", width=doc["width"])


def atomic_write_text(path: str | Path, text: str) -> None:
    """Write via a same-directory temp file and rename, so readers never see
    a partial artifact."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or Path("."), suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def save_model(model: TrainedModel, path: str | Path) -> None:
    doc = {
        "format": FORMAT_TAG,
        "schema_version": SCHEMA_VERSION,
        "kind": model.config.kind,
        "model_class": type(model.model).__name__,
        "config": _encode(model.config.hyperparameters),
        "seed": model.seed,
        "binding": _encode_binding(model.binding),
        "metadata": _encode(model.metadata),
        "params": _encode(model.model.get_params()),
    }
    atomic_write_text(path, json.dumps(doc, sort_keys=True) + "\n")


def _build_inner(kind: str, model_class: str, hp: dict, seed: int):
    cls = _MODEL_CLASSES[model_class]
    if cls is LogisticRegression:
        return LogisticRegression(C=hp.get("C", 1.0))
    if cls is GaussianNB:
        return GaussianNB(var_smoothing=hp.get("var_smoothing", 1e-9))
    if cls is MultinomialNB:
        return MultinomialNB(alpha=hp.get("alpha", 1.0))
    if cls is SVM:
        return SVM(C=hp.get("C", 1.0), kernel=hp.get("kernel", "rbf"),
                   gamma=hp.get("gamma", "scale"), seed=seed)
    if cls is DecisionTree:
        return DecisionTree(seed=seed)
    if cls is RandomForest:
        return RandomForest(seed=seed)
    if cls is StackingClassifier:
        return StackingClassifier(seed=seed)
    return MLP(seed=seed)


def load_model(path: str | Path) -> TrainedModel:
    path = Path(path)
    try:
        doc = json.loads(path.read_text("utf-8"))
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise ModelFormatError(f"{path}: not a model artifact: {exc}") from None
    if not isinstance(doc, dict) or doc.get("format") != FORMAT_TAG:
        raise ModelFormatError(f"{path}: missing {FORMAT_TAG!r} format tag")
    version = doc.get("schema_version")
    if version != SCHEMA_VERSION:
        raise IncompatibleVersionError(
            f"{path}: artifact schema_version {version} is not supported "
            f"(this build reads version {SCHEMA_VERSION})"
        )
    try:
        hp = _decode(doc["config"])
        if "hidden" in hp:
            hp["hidden"] = tuple(hp["hidden"])
        config = ModelConfig(doc["kind"], hp)
        seed = int(doc["seed"])
        inner = _build_inner(doc["kind"], doc["model_class"], hp, seed)
        inner.set_params(_decode(doc["params"]))
        binding = _decode_binding(doc["binding"])
        metadata = _decode(doc.get("metadata", {}))
    except (KeyError, TypeError, ValueError) as exc:
        raise ModelFormatError(f"{path}: corrupt artifact: {exc}") from None
    return TrainedModel(config=config, model=inner, binding=binding,
                        seed=seed, metadata=metadata)

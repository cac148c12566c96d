"""Text-to-vector machinery: TF-IDF models for the classifiers, and word
embedding tables whose summed vectors feed the similarity models.

TF-IDF convention: raw term counts, smoothed idf ``ln((1+N)/(1+df)) + 1``,
and L2 normalization of every nonzero row. The vocabulary is fixed at fit
time; unseen tokens are ignored at transform time.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path

import numpy as np

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TfidfModel:
    vocabulary: dict  # token -> dense column index
    idf: np.ndarray
    doc_count: int
    df: np.ndarray

    @property
    def size(self) -> int:
        return len(self.vocabulary)


def fit_tfidf(docs: list[str], max_features: int | None = None) -> TfidfModel:
    """Learn vocabulary and idf weights from preprocessed training docs.

    ``max_features`` keeps only the most frequent terms (ties broken
    alphabetically) to bound the dense matrix size on large corpora.
    """
    if not docs:
        raise ValueError("cannot fit TF-IDF on an empty corpus")
    df_counts: dict[str, int] = {}
    for doc in docs:
        for token in set(doc.split()):
            df_counts[token] = df_counts.get(token, 0) + 1
    terms = sorted(df_counts)
    if max_features is not None and len(terms) > max_features:
        terms = sorted(sorted(terms, key=lambda t: -df_counts[t])[:max_features])
    vocabulary = {t: i for i, t in enumerate(terms)}
    df = np.array([df_counts[t] for t in terms], dtype=np.float64)
    n = len(docs)
    idf = np.log((1.0 + n) / (1.0 + df)) + 1.0
    return TfidfModel(vocabulary=vocabulary, idf=idf, doc_count=n, df=df)


def transform(model: TfidfModel, doc: str) -> np.ndarray:
    """Map one preprocessed doc to its L2-normalized tf-idf row."""
    row = np.zeros(model.size, dtype=np.float64)
    for token in doc.split():
        idx = model.vocabulary.get(token)
        if idx is not None:
            row[idx] += 1.0
    row *= model.idf
    norm = np.linalg.norm(row)
    if norm > 0:
        row /= norm
    return row


def transform_many(model: TfidfModel, docs: list[str]) -> np.ndarray:
    return np.vstack([transform(model, d) for d in docs]) if docs else np.zeros((0, model.size))


@dataclass(frozen=True)
class EmbeddingTable:
    dimension: int
    vectors: dict  # word -> np.ndarray of shape (dimension,)
    name: str = "unnamed"

    def __contains__(self, word: str) -> bool:
        return word in self.vectors

    def __len__(self) -> int:
        return len(self.vectors)


class EmbeddingFormatError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def load_embeddings(path: str | Path, name: str = "") -> EmbeddingTable:
    """Read text-format word vectors: one ``word v1 ... vd`` row per line.

    A leading ``count dim`` header row is consumed when present. Duplicate
    words keep their first vector (a warning is logged); a row whose width
    disagrees with the established dimension raises
    :class:`EmbeddingFormatError` carrying the line number.
    """
    path = Path(path)
    vectors: dict[str, np.ndarray] = {}
    dimension = None
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            parts = line.rstrip("\n").split()
            if not parts:
                continue
            if line_no == 1 and len(parts) == 2 and _all_ints(parts):
                dimension = int(parts[1])
                continue
            word, values = parts[0], parts[1:]
            try:
                vec = np.array([float(v) for v in values], dtype=np.float64)
            except ValueError as exc:
                raise EmbeddingFormatError(line_no, f"bad number: {exc}") from None
            if dimension is None:
                if len(vec) == 0:
                    raise EmbeddingFormatError(line_no, "row has no vector values")
                dimension = len(vec)
            if len(vec) != dimension:
                raise EmbeddingFormatError(
                    line_no, f"expected {dimension} values, got {len(vec)}"
                )
            if word in vectors:
                logger.warning("duplicate embedding for %r at line %d kept first", word, line_no)
                continue
            vectors[word] = vec
    if not vectors:
        raise EmbeddingFormatError(0, f"{path} contains no vectors")
    return EmbeddingTable(dimension=dimension, vectors=vectors, name=name or path.stem)


def _all_ints(parts: list[str]) -> bool:
    try:
        return all(float(p) == int(float(p)) for p in parts)
    except ValueError:
        return False


def embed_text(table: EmbeddingTable, text: str) -> tuple[np.ndarray, int]:
    """Sum the vectors of in-vocabulary tokens; returns (vector, hit_count)."""
    total = np.zeros(table.dimension, dtype=np.float64)
    hits = 0
    for token in text.split():
        vec = table.vectors.get(token)
        if vec is not None:
            total += vec
            hits += 1
    return total, hits

"""Similarity-based veracity classification.

An unlabeled text is embedded (sum of word vectors), compared against every
labeled reference vector, and judged by a weighted vote of its K nearest
neighbors: cosine weights are the similarities clamped at zero, Euclidean
weights are 1/(1+distance), so nearer neighbors always count for more. Ties
and degenerate votes resolve toward Misinformative, the costlier miss.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .corpus import TweetRecord, Verdict
from .textprep import PrepConfig, preprocess
from .vectorize import EmbeddingTable, embed_text

MISINFORMATIVE_ON_TIE = "misinformative-on-tie"


class ZeroVectorError(ValueError):
    pass


def cosine(a: np.ndarray, b: np.ndarray) -> float:
    """Cosine of the angle between two nonzero vectors, in [-1, 1]."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    na, nb = np.linalg.norm(a), np.linalg.norm(b)
    if na == 0.0 or nb == 0.0:
        raise ZeroVectorError("cosine similarity is undefined for zero vectors")
    return float(np.clip(a @ b / (na * nb), -1.0, 1.0))


def euclidean(a: np.ndarray, b: np.ndarray) -> float:
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return float(math.sqrt(((a - b) ** 2).sum()))


@dataclass(frozen=True)
class IndexEntry:
    vector: np.ndarray
    label: int  # 1 = Misinformative
    source_id: str
    text: str
    nonzero: bool


@dataclass(frozen=True)
class ReferenceIndex:
    entries: tuple
    dimension: int

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class SimilarityConfig:
    metric: str = "cosine"  # cosine | euclidean
    k: int = 5
    embedding: EmbeddingTable | None = None
    tie_rule: str = MISINFORMATIVE_ON_TIE

    def __post_init__(self):
        if self.metric not in ("cosine", "euclidean"):
            raise ValueError(f"metric must be cosine or euclidean, got {self.metric!r}")
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")


@dataclass(frozen=True)
class Neighbor:
    source_id: str
    text: str
    label: int
    similarity: float  # cosine similarity or Euclidean distance
    weight: float


@dataclass(frozen=True)
class ClassifyResult:
    verdict: Verdict
    score: float  # weighted misinformative share in [0, 1]
    neighbors: tuple


def build_index(
    records: list,
    table: EmbeddingTable,
    prep: PrepConfig | None = None,
) -> ReferenceIndex:
    """Embed every labeled record (tweets or sentences) into a reference index."""
    entries = []
    for record in records:
        text = record.content if isinstance(record, TweetRecord) else record.text
        vector, _ = embed_text(table, preprocess(text, prep))
        entries.append(
            IndexEntry(
                vector=vector,
                label=1 if record.verdict is Verdict.MISINFORMATIVE else 0,
                source_id=record.id,
                text=text,
                nonzero=bool(vector.any()),
            )
        )
    if not entries:
        raise ValueError("cannot build an empty reference index")
    return ReferenceIndex(entries=tuple(entries), dimension=table.dimension)


def _majority_verdict(entries, tie_rule: str) -> tuple[Verdict, float]:
    share = sum(e.label for e in entries) / len(entries)
    verdict = Verdict.MISINFORMATIVE if share >= 0.5 else Verdict.INFORMATIVE
    return verdict, share


def classify_vector(
    vector: np.ndarray,
    index: ReferenceIndex,
    config: SimilarityConfig,
) -> ClassifyResult:
    """Weighted top-K vote for an already-embedded query vector."""
    if config.k > len(index):
        raise ValueError(f"k={config.k} exceeds index size {len(index)}")
    vector = np.asarray(vector, dtype=np.float64)

    if config.metric == "cosine":
        eligible = [e for e in index.entries if e.nonzero]
        if not vector.any() or len(eligible) < config.k:
            # no usable angle: fall back to an unweighted majority over the
            # first K reference entries
            fallback = index.entries[: config.k]
            verdict, share = _majority_verdict(fallback, config.tie_rule)
            neighbors = tuple(
                Neighbor(e.source_id, e.text, e.label, 0.0, 0.0) for e in fallback
            )
            return ClassifyResult(verdict=verdict, score=share, neighbors=neighbors)
        scored = [(cosine(vector, e.vector), e) for e in eligible]
        scored.sort(key=lambda pair: -pair[0])
        top = scored[: config.k]
        weights = [max(s, 0.0) for s, _ in top]
    else:
        scored = [(euclidean(vector, e.vector), e) for e in index.entries]
        scored.sort(key=lambda pair: pair[0])
        top = scored[: config.k]
        weights = [1.0 / (1.0 + d) for d, _ in top]

    neighbors = tuple(
        Neighbor(e.source_id, e.text, e.label, float(s), float(w))
        for (s, e), w in zip(top, weights)
    )
    total = sum(weights)
    if total == 0.0:
        verdict, share = _majority_verdict([e for _, e in top], config.tie_rule)
        return ClassifyResult(verdict=verdict, score=share, neighbors=neighbors)
    score = sum(w * e.label for (s, e), w in zip(top, weights)) / total
    verdict = Verdict.MISINFORMATIVE if score >= 0.5 else Verdict.INFORMATIVE
    return ClassifyResult(verdict=verdict, score=float(score), neighbors=neighbors)


def classify(
    text: str,
    index: ReferenceIndex,
    config: SimilarityConfig,
    prep: PrepConfig | None = None,
) -> ClassifyResult:
    """Preprocess, embed, and vote. ``config.embedding`` must be set."""
    if config.embedding is None:
        raise ValueError("config.embedding is required to classify raw text")
    vector, _ = embed_text(config.embedding, preprocess(text, prep))
    return classify_vector(vector, index, config)


@dataclass(frozen=True)
class TuneResult:
    errors: dict  # k -> misclassification fraction
    best_k: int


def tune_k(
    index: ReferenceIndex,
    validation: list,
    config: SimilarityConfig,
    k_range=range(1, 11),
    prep: PrepConfig | None = None,
) -> TuneResult:
    """Misclassification error per K on a validation set of labeled records;
    argmin with ties toward the smaller K."""
    ks = list(k_range)
    if not ks:
        raise ValueError("empty K range")
    if not validation:
        raise ValueError("empty validation set")
    if config.embedding is None:
        raise ValueError("config.embedding is required for tuning")
    vectors = []
    labels = []
    for record in validation:
        text = record.content if isinstance(record, TweetRecord) else record.text
        vec, _ = embed_text(config.embedding, preprocess(text, prep))
        vectors.append(vec)
        labels.append(1 if record.verdict is Verdict.MISINFORMATIVE else 0)
    errors = {}
    for k in ks:
        cfg = SimilarityConfig(
            metric=config.metric, k=k, embedding=config.embedding,
            tie_rule=config.tie_rule,
        )
        wrong = 0
        for vec, label in zip(vectors, labels):
            result = classify_vector(vec, index, cfg)
            predicted = 1 if result.verdict is Verdict.MISINFORMATIVE else 0
            wrong += predicted != label
        errors[k] = wrong / len(labels)
    best_k = min(ks, key=lambda k: (errors[k], k))
    return TuneResult(errors=errors, best_k=best_k)

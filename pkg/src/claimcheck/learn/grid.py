"""Grid search over the Cartesian product of hyperparameter candidates,
scored by validation-set F1 with ties broken toward the earlier combination."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .. import evaluate
from .base import ModelConfig
from .core import train


@dataclass
class GridResult:
    best_config: ModelConfig
    best_score: float
    table: list  # one {"params": ..., "f1": ...} row per combination


def grid_search(
    kind: str,
    grid: dict,
    X_train: np.ndarray,
    y_train: np.ndarray,
    X_val: np.ndarray,
    y_val: np.ndarray,
    seed: int = 0,
) -> GridResult:
    """Train every combination on the training set and pick the validation
    F1 argmax. Combinations enumerate in the grid's given key order, last
    key fastest; only a strictly better score displaces the incumbent."""
    if not grid or any(len(v) == 0 for v in grid.values()):
        raise ValueError("grid must have at least one candidate per parameter")
    names = list(grid)
    best = None
    table = []
    for combo in itertools.product(*(grid[name] for name in names)):
        hp = dict(zip(names, combo))
        config = ModelConfig(kind, hp)
        model = train(config, X_train, y_train, seed=seed,
                      validation=(X_val, y_val))
        f1 = evaluate.score(list(y_val), list(model.predict(X_val))).f1
        table.append({"params": hp, "f1": f1})
        if best is None or f1 > best[1]:
            best = (config, f1)
    return GridResult(best_config=best[0], best_score=best[1], table=table)

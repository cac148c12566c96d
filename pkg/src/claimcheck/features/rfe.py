"""Recursive feature elimination under a random-forest importance ranking.

One feature (the lowest mean-impurity-decrease importance) is dropped per
iteration until the target count remains; deterministic given the seed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..learn.tree import RandomForest
from .transform import FeatureFrame

DEFAULT_FOREST = {"n_trees": 50}


@dataclass(frozen=True)
class RfeResult:
    selected: tuple  # target_k names, strongest first
    ranking: tuple  # all names: survivors first, then reverse elimination order
    importances: dict  # selected name -> final-fit importance


def rfe_select(
    frame: FeatureFrame,
    labels,
    target_k: int,
    forest_spec: dict | None = None,
    seed: int = 0,
) -> RfeResult:
    y = np.asarray(labels, dtype=int)
    names = list(frame.schema)
    if target_k <= 0:
        raise ValueError(f"target_k must be positive, got {target_k}")
    if target_k > len(names):
        raise ValueError(f"target_k {target_k} exceeds {len(names)} features")
    if len(y) != frame.n_rows:
        raise ValueError("label count does not match frame rows")
    spec = {**DEFAULT_FOREST, **(forest_spec or {})}

    eliminated: list[str] = []
    remaining = names[:]
    current = frame.matrix
    while len(remaining) > target_k:
        forest = RandomForest(seed=seed, **spec).fit(current, y)
        drop = int(np.argmin(forest.importances_))
        eliminated.append(remaining[drop])
        keep = [i for i in range(len(remaining)) if i != drop]
        remaining = [remaining[i] for i in keep]
        current = current[:, keep]

    final = RandomForest(seed=seed, **spec).fit(current, y)
    order = np.argsort(-final.importances_, kind="stable")
    selected = tuple(remaining[i] for i in order)
    importances = {remaining[i]: float(final.importances_[i]) for i in order}
    ranking = selected + tuple(reversed(eliminated))
    return RfeResult(selected=selected, ranking=ranking, importances=importances)

"""Pinned lexicon assets backing the linguistic features.

All lists ship with the package and are versioned in-repo so feature values
are reproducible. The reliable-accounts list can be swapped for a custom
file at load time.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path


def _read_lines(text: str) -> frozenset:
    return frozenset(
        line.strip().lower()
        for line in text.splitlines()
        if line.strip() and not line.startswith("#")
    )


def _load_asset(name: str) -> str:
    return resources.files("claimcheck.data").joinpath(name).read_text("utf-8")


@dataclass(frozen=True)
class Lexicons:
    power_words: frozenset
    casual_words: frozenset
    tentative_words: frozenset
    emotion_words: frozenset
    swear_words: frozenset
    polarity: dict  # word -> [-1, 1]
    familiar_words: frozenset
    reliable_accounts: frozenset
    stopwords: frozenset
    pronouns: frozenset
    verbs: frozenset
    adjectives: frozenset
    nouns: frozenset

    def __post_init__(self):
        bad = {w: p for w, p in self.polarity.items() if not -1.0 <= p <= 1.0}
        if bad:
            raise ValueError(f"polarity values outside [-1, 1]: {bad}")

    @property
    def category_sets(self) -> dict:
        return {
            "power": self.power_words,
            "casual": self.casual_words,
            "tentative": self.tentative_words,
            "emotion": self.emotion_words,
            "swear": self.swear_words,
        }

    def known_common_words(self) -> frozenset:
        """Union used to rule out proper-noun readings of everyday words."""
        return (
            self.stopwords
            | self.pronouns
            | self.verbs
            | self.adjectives
            | self.nouns
            | self.familiar_words
        )


def _parse_polarity(text: str) -> dict:
    table = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        word, value = line.split("\t")
        table[word.lower()] = float(value)
    return table


def load_default_lexicons(reliable_accounts_path: str | Path | None = None) -> Lexicons:
    pos = json.loads(_load_asset("pos_lexicon.json"))
    if reliable_accounts_path is not None:
        accounts = _read_lines(Path(reliable_accounts_path).read_text("utf-8"))
    else:
        accounts = _read_lines(_load_asset("reliable_accounts.txt"))
    return Lexicons(
        power_words=_read_lines(_load_asset("power_words.txt")),
        casual_words=_read_lines(_load_asset("casual_words.txt")),
        tentative_words=_read_lines(_load_asset("tentative_words.txt")),
        emotion_words=_read_lines(_load_asset("emotion_words.txt")),
        swear_words=_read_lines(_load_asset("swear_words.txt")),
        polarity=_parse_polarity(_load_asset("sentiment_polarity.tsv")),
        familiar_words=_read_lines(_load_asset("familiar_words.txt")),
        reliable_accounts=accounts,
        stopwords=_read_lines(_load_asset("stopwords.txt")),
        pronouns=frozenset(pos["pronouns"]),
        verbs=frozenset(pos["verbs"]),
        adjectives=frozenset(pos["adjectives"]),
        nouns=frozenset(pos["nouns"]),
    )

"""Readability scores over raw text.

Each score follows its published formula; the constants are also recorded
in docs/formulas.md. Degenerate text (no sentence or no word) yields zeros
across the board, a sentinel the feature extractor documents.

Syllables come from a vowel-group heuristic with silent-e, -ed/-es, and
vowel-hiatus adjustments plus a small exception table; the pinned 50-word
reference set lives in the test suite.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass

from ..textprep import split_sentences, tokenize

_VOWEL_GROUP_RE = re.compile(r"[aeiouy]+")
_HIATUS_RE = re.compile(r"([^aeiouy])i[aeo]")
_SUFFIX_SILENT_E_RE = re.compile(r"[aeiouy][^aeiouy]e(ly|ment|ness|ful|less)$")

_SYLLABLE_EXCEPTIONS = {
    "science": 2,
    "sciences": 2,
    "scientist": 3,
    "scientists": 3,
    "friend": 1,
    "friends": 1,
    "naked": 2,
    "wicked": 2,
    "blessed": 2,
    "lion": 2,
    "lions": 2,
    "idea": 3,
    "ideas": 3,
    "theory": 3,
    "theories": 3,
    "video": 3,
    "videos": 3,
    "maybe": 2,
    "recipe": 3,
    "catastrophe": 4,
    "everywhere": 3,
    "once": 1,
}


def count_syllables(word: str) -> int:
    """Estimate syllables in one token; non-alphabetic tokens count 0."""
    w = re.sub(r"[^a-z]", "", word.lower())
    if not w:
        return 0
    if w in _SYLLABLE_EXCEPTIONS:
        return _SYLLABLE_EXCEPTIONS[w]
    original = w
    w = w.replace("qu", "q")
    count = len(_VOWEL_GROUP_RE.findall(w))
    if count == 0:
        return 1
    # vowel hiatus ("piano", "radio") but not the fused -tion/-cious/-nion
    # and not the single-nucleus -ie/-ied/-ies tails
    for m in _HIATUS_RE.finditer(w):
        if m.group(1) not in "tsxcgnl" and w[m.start() + 1 :] not in ("ie", "ied", "ies"):
            count += 1
    if count > 1 and w.endswith("e"):
        if w.endswith("le") and len(w) > 2 and w[-3] not in "aeiouy":
            pass  # pronounced -ble/-tle/-gle
        elif w.endswith(("ee", "ye", "oe", "ue", "ae", "ie")):
            pass
        else:
            count -= 1
    if (
        count > 1
        and original.endswith("ed")
        and len(original) > 2
        and original[-3] not in "aeiouy"
        and not re.search(r"[td]ed$", original)
    ):
        count -= 1
    if (
        count > 1
        and original.endswith("es")
        and len(original) > 2
        and original[-3] not in "sxzcg"
        and original[-3] not in "aeiouy"
    ):
        count -= 1
    if count > 1 and _SUFFIX_SILENT_E_RE.search(original):
        count -= 1
    return max(count, 1)


@dataclass(frozen=True)
class TextCounts:
    sentences: int
    words: int
    chars: int  # alphanumeric characters inside words
    syllables: int
    polysyllables: int  # words with >= 3 syllables
    monosyllables: int


def text_counts(text: str) -> TextCounts:
    sentences = split_sentences(text)
    words = list(tokenize(text))
    syls = [count_syllables(w) for w in words]
    return TextCounts(
        sentences=len(sentences),
        words=len(words),
        chars=sum(len(w) for w in words),
        syllables=sum(syls),
        polysyllables=sum(1 for s in syls if s >= 3),
        monosyllables=sum(1 for s in syls if s == 1),
    )


def flesch_reading_ease(c: TextCounts) -> float:
    return 206.835 - 1.015 * (c.words / c.sentences) - 84.6 * (c.syllables / c.words)


def flesch_kincaid_grade(c: TextCounts) -> float:
    return 0.39 * (c.words / c.sentences) + 11.8 * (c.syllables / c.words) - 15.59


def smog_index(c: TextCounts) -> float:
    return 1.0430 * math.sqrt(c.polysyllables * 30.0 / c.sentences) + 3.1291


def automated_readability_index(c: TextCounts) -> float:
    return 4.71 * (c.chars / c.words) + 0.5 * (c.words / c.sentences) - 21.43


def gunning_fog(c: TextCounts) -> float:
    return 0.4 * ((c.words / c.sentences) + 100.0 * (c.polysyllables / c.words))


def difficult_word_count(text: str, familiar: frozenset) -> int:
    """Tokens with at least two syllables whose form is not familiar."""
    count = 0
    for token in tokenize(text):
        if count_syllables(token) >= 2 and token not in familiar:
            count += 1
    return count


def dale_chall_score(text: str, c: TextCounts, familiar: frozenset) -> float:
    # numerals count as familiar
    unfamiliar = sum(
        1 for t in tokenize(text) if t not in familiar and not t.isdigit()
    )
    pct = 100.0 * unfamiliar / c.words
    raw = 0.1579 * pct + 0.0496 * (c.words / c.sentences)
    if pct > 5.0:
        raw += 3.6365
    return raw


def linsear_write_formula(text: str) -> float:
    stream = tokenize(text)
    if not stream.tokens:
        return 0.0
    words = stream.tokens[:100]
    # sample the original text up to the 100th word so sentence terminators
    # inside the sample still count
    sample_end = stream.spans[len(words) - 1][1]
    sentences = max(len(split_sentences(text[:sample_end])), 1)
    points = sum(3 if count_syllables(w) >= 3 else 1 for w in words)
    r = points / sentences
    return r / 2.0 if r > 20 else r / 2.0 - 1.0


def text_standard(grades: list[float]) -> float:
    """Consensus school grade: the mode of the rounded grade-type scores,
    smallest grade on ties."""
    rounded = [int(round(g)) for g in grades]
    counts = Counter(rounded)
    top = max(counts.values())
    return float(min(g for g, n in counts.items() if n == top))


READABILITY_NAMES = (
    "flesch_reading_ease",
    "smog_index",
    "flesch_kincaid_grade",
    "automated_readability_index",
    "dale_chall_readability_score",
    "linsear_write_formula",
    "gunning_fog",
    "text_standard",
    "difficult_words",
)


def readability(text: str, familiar: frozenset) -> dict:
    """All nine readability outputs; zeros when there is no sentence/word."""
    c = text_counts(text)
    if c.sentences < 1 or c.words < 1:
        return {name: 0.0 for name in READABILITY_NAMES}
    fk = flesch_kincaid_grade(c)
    smog = smog_index(c)
    ari = automated_readability_index(c)
    linsear = linsear_write_formula(text)
    fog = gunning_fog(c)
    return {
        "flesch_reading_ease": flesch_reading_ease(c),
        "smog_index": smog,
        "flesch_kincaid_grade": fk,
        "automated_readability_index": ari,
        "dale_chall_readability_score": dale_chall_score(text, c, familiar),
        "linsear_write_formula": linsear,
        "gunning_fog": fog,
        "text_standard": text_standard([fk, smog, ari, linsear, fog]),
        "difficult_words": float(difficult_word_count(text, familiar)),
    }

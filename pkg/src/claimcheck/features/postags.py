"""Part-of-speech counting for the five tag features.

A deliberately small tagger: closed-class lexicon lookups plus suffix
heuristics, applied as a fixed cascade so every token lands in at most one
of pronoun / proper noun / verb / adjective / noun. Tokens the cascade
cannot place are left uncounted.
"""

from __future__ import annotations

import re

from ..textprep import split_sentences
from .lexicons import Lexicons

_WORD_RE = re.compile(r"[A-Za-z][\w'-]*")

_VERB_SUFFIXES = ("ize", "izes", "ized", "izing", "ise", "ifies", "ified", "ify")
_ADJ_SUFFIXES = (
    "ous", "ful", "ive", "able", "ible", "ical", "ish", "less", "ary",
)
_NOUN_SUFFIXES = (
    "tion", "tions", "sion", "sions", "ment", "ments", "ness", "ity",
    "ities", "ship", "hood", "ism", "isms", "ology", "ist", "ists",
)


def _cased_words_with_position(text: str) -> list[tuple[str, bool]]:
    """(token, sentence_initial) pairs keeping original casing."""
    out = []
    for sentence in split_sentences(text):
        for i, m in enumerate(_WORD_RE.finditer(sentence)):
            out.append((m.group(), i == 0))
    return out


def pos_counts(text: str, lex: Lexicons) -> dict:
    counts = {
        "verb_count": 0,
        "proper_noun_count": 0,
        "noun_count": 0,
        "pronoun_count": 0,
        "adjective_count": 0,
    }
    common = lex.known_common_words()
    for token, sentence_initial in _cased_words_with_position(text):
        lower = token.lower()
        if lower in lex.pronouns:
            counts["pronoun_count"] += 1
        elif (
            token[0].isupper()
            and not sentence_initial
            and lower not in common
        ):
            counts["proper_noun_count"] += 1
        elif lower in lex.verbs or lower.endswith(_VERB_SUFFIXES):
            counts["verb_count"] += 1
        elif lower in lex.adjectives or lower.endswith(_ADJ_SUFFIXES):
            counts["adjective_count"] += 1
        elif lower in lex.nouns or lower.endswith(_NOUN_SUFFIXES):
            counts["noun_count"] += 1
    return counts

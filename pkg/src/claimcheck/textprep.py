"""Tweet text preprocessing: link stripping, symbol handling, stemming,
stopword removal, plus the tokenizer and sentence splitter used everywhere.

The pipeline runs in a fixed order: hyperlink removal, the World Health
Organization expansion (applied before lowercasing, see
:func:`_apply_who_rule`), special-character handling, lowercasing, Porter
stemming per token, and finally stopword/punctuation removal with negation
words retained.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources

from . import porter

_URL_RE = re.compile(r"https?://\S+|\bt\.co/\S+")
_TOKEN_RE = re.compile(r"\w+")
_BARE_WHO_RE = re.compile(r'["“”](?:WHO|Who|who)["“”]|(?<!\w)WHO(?!\w)')
_STANDALONE_RT_RE = re.compile(r"(?<!\w)RT(?!\w)")
_WHO_EXPANSION = "world health organization"

_SENT_BREAK_RE = re.compile(r"[.!?]+")

# words whose trailing period is an abbreviation, not a sentence boundary
_ABBREVIATIONS = frozenset(
    "mr mrs ms dr prof sr jr st vs etc eg ie fig al inc ltd co dept approx est".split()
)


def _load_wordlist(name: str) -> frozenset[str]:
    text = resources.files("claimcheck.data").joinpath(name).read_text("utf-8")
    return frozenset(
        line.strip().lower()
        for line in text.splitlines()
        if line.strip() and not line.startswith("#")
    )


def default_stopwords() -> frozenset[str]:
    return _load_wordlist("stopwords.txt")


def default_negations() -> frozenset[str]:
    return _load_wordlist("negations.txt")


@dataclass(frozen=True)
class PrepConfig:
    keep_negations: bool = True
    apply_who_rule: bool = True
    stopword_list: frozenset = field(default_factory=default_stopwords)
    negation_whitelist: frozenset = field(default_factory=default_negations)

    def __post_init__(self):
        if self.keep_negations and not self.negation_whitelist <= self.stopword_list:
            extra = self.negation_whitelist - self.stopword_list
            raise ValueError(f"negation whitelist not within stopword list: {extra}")

    def dropped_words(self) -> frozenset:
        if self.keep_negations:
            return self.stopword_list - self.negation_whitelist
        return self.stopword_list


@dataclass(frozen=True)
class TokenStream:
    tokens: tuple
    spans: tuple

    def __iter__(self):
        return iter(self.tokens)

    def __len__(self):
        return len(self.tokens)


def tokenize(text: str) -> TokenStream:
    """Split on whitespace/punctuation boundaries, keeping ``_`` and digits.

    Tokens come out lowercased; spans index the original text.
    """
    tokens = []
    spans = []
    for m in _TOKEN_RE.finditer(text):
        tokens.append(m.group().lower())
        spans.append((m.start(), m.end()))
    return TokenStream(tokens=tuple(tokens), spans=tuple(spans))


def _apply_who_rule(text: str) -> str:
    """Expand standalone WHO mentions into "world health organization".

    Matches the bare uppercase token and quoted forms (straight or curly
    quotes, any of WHO/Who/who). A match at the very start of the text is
    expanded only when the text does not end with a question mark, so
    questions like "WHO is to blame?" keep their pronoun reading.
    """
    ends_question = text.rstrip().endswith("?")
    pieces = []
    pos = 0
    for m in _BARE_WHO_RE.finditer(text):
        at_start = text[: m.start()].strip() == ""
        if at_start and ends_question:
            continue
        pieces.append(text[pos : m.start()])
        pieces.append(_WHO_EXPANSION)
        pos = m.end()
    pieces.append(text[pos:])
    return "".join(pieces)


def _handle_special_chars(text: str) -> str:
    text = text.replace("&", " and ")
    text = text.replace("$", "").replace("#", "").replace("@", "")
    text = _STANDALONE_RT_RE.sub(" ", text)
    return text


def preprocess(text: str, config: PrepConfig | None = None) -> str:
    """Run the full cleaning pipeline and return a space-joined token string."""
    if config is None:
        config = PrepConfig()
    text = _URL_RE.sub(" ", text)
    if config.apply_who_rule:
        text = _apply_who_rule(text)
    text = _handle_special_chars(text)
    text = text.lower()
    dropped = config.dropped_words()
    kept = []
    for token in tokenize(text):
        # symbols with no lowercase mapping (math alphanumerics etc.) would
        # otherwise survive the lowercasing pass as uppercase
        token = "".join(c for c in token if not c.isupper())
        if not token:
            continue
        stemmed = porter.stem(token)
        if stemmed in dropped:
            continue
        kept.append(stemmed)
    return " ".join(kept)


def split_sentences(text: str) -> list[str]:
    """Split text into sentences on ``.``, ``!``, ``?`` runs.

    A terminator only ends a sentence when followed by whitespace or the end
    of the text, which leaves decimals ("3.5") and dotted acronyms ("U.S.")
    intact; a period after a known abbreviation is also kept inside its
    sentence. Sentence strings keep their terminators, so the concatenation
    of the result (ignoring inter-sentence whitespace) restores the input.
    """
    sentences = []
    start = 0
    for m in _SENT_BREAK_RE.finditer(text):
        end = m.end()
        if end < len(text) and not text[end].isspace():
            continue
        if m.group().endswith(".") and _is_abbreviation_dot(text, m.start()):
            continue
        chunk = text[start:end].strip()
        if chunk:
            sentences.append(chunk)
        start = end
    tail = text[start:].strip()
    if tail:
        sentences.append(tail)
    return sentences


def _is_abbreviation_dot(text: str, dot_pos: int) -> bool:
    word_match = re.search(r"(\w+)$", text[:dot_pos])
    if word_match is None:
        return False
    word = word_match.group(1)
    if word.lower() in _ABBREVIATIONS:
        return True
    # trailing dot of a dotted acronym such as "U.S."
    return len(word) == 1 and text[: word_match.start()].endswith(".")


def stem(token: str) -> str:
    """Stem one lowercase token (see :mod:`claimcheck.porter` for the rules)."""
    return porter.stem(token)

"""The 43-entry feature vector computed per tweet: metadata passthroughs
plus linguistic, lexical, and readability features from the raw content."""

from __future__ import annotations

import re
import string

from ..corpus import TweetRecord
from ..textprep import tokenize
from .lexicons import Lexicons
from .postags import pos_counts
from .readability import READABILITY_NAMES, readability

FEATURE_NAMES = (
    # tweet metadata
    "tweet_date",
    "tweet_type",
    "like_count",
    "retweet_count",
    "possibly_sensitive",
    # content features
    "sentiment",
    "mention_reliable_accounts",
    "has_url",
    "num_of_mentions",
    "num_of_hashtags",
    "emoji_count",
    "text_uppercase_percent",
    "text_punctuation_percent",
    "text_stop_words_percent",
    "verb_count",
    "proper_noun_count",
    "noun_count",
    "pronoun_count",
    "adjective_count",
    "text_power_words_percent",
    "text_casual_words_percent",
    "text_tentative_words_percent",
    "text_emotion_words_percent",
    "text_swear_words_percent",
    "text_type_token_ratio",
    *READABILITY_NAMES,
    # user metadata
    "user_created_at",
    "user_follower_count",
    "user_following_count",
    "user_favourites_count",
    "user_verified",
    "user_tweet_count",
    "has_user_url",
    "user_geo",
    "user_profile",
)

CATEGORICAL_FEATURES = ("tweet_type",)

_MENTION_RE = re.compile(r"@(\w+)")
_HASHTAG_RE = re.compile(r"#\w+")
_URL_RE = re.compile(r"https?://|www\.|\bt\.co/")
_PUNCT_SET = frozenset(string.punctuation)

# ranges covering the common emoji and pictograph blocks
_EMOJI_RANGES = (
    (0x1F300, 0x1FAFF),
    (0x1F000, 0x1F0FF),
    (0x2600, 0x27BF),
    (0x2B00, 0x2BFF),
    (0xFE00, 0xFE0F),
    (0x1F900, 0x1F9FF),
)


def _is_emoji(ch: str) -> bool:
    code = ord(ch)
    return any(lo <= code <= hi for lo, hi in _EMOJI_RANGES)


def emoji_count(text: str) -> int:
    return sum(1 for ch in text if _is_emoji(ch))


def sentiment_score(text: str, lex: Lexicons) -> float:
    """Mean polarity of lexicon hits, 0 when no token is in the lexicon."""
    hits = [lex.polarity[t] for t in tokenize(text) if t in lex.polarity]
    return sum(hits) / len(hits) if hits else 0.0


def _percent(numerator: int, denominator: int) -> float:
    return 100.0 * numerator / denominator if denominator else 0.0


def extract_features(record: TweetRecord, lex: Lexicons) -> dict:
    """Named feature mapping; numeric except tweet_type which stays
    categorical until one-hot encoding. Degenerate content (no word tokens)
    yields zeros for every ratio and readability feature."""
    text = record.content
    tokens = list(tokenize(text))
    n_tokens = len(tokens)
    letters = sum(1 for c in text if c.isalpha())
    non_space = sum(1 for c in text if not c.isspace())

    mentions = _MENTION_RE.findall(text)
    features: dict = {}
    features["tweet_date"] = float(record.tweet_meta["tweet_date"])
    features["tweet_type"] = record.tweet_meta["tweet_type"]
    features["like_count"] = float(record.tweet_meta["like_count"])
    features["retweet_count"] = float(record.tweet_meta["retweet_count"])
    features["possibly_sensitive"] = float(record.tweet_meta["possibly_sensitive"])

    features["sentiment"] = sentiment_score(text, lex)
    features["mention_reliable_accounts"] = float(
        any(m.lower() in lex.reliable_accounts for m in mentions)
    )
    features["has_url"] = float(_URL_RE.search(text) is not None)
    features["num_of_mentions"] = float(len(mentions))
    features["num_of_hashtags"] = float(len(_HASHTAG_RE.findall(text)))
    features["emoji_count"] = float(emoji_count(text))
    features["text_uppercase_percent"] = _percent(
        sum(1 for c in text if c.isupper()), letters
    )
    features["text_punctuation_percent"] = _percent(
        sum(1 for c in text if c in _PUNCT_SET), non_space
    )
    features["text_stop_words_percent"] = _percent(
        sum(1 for t in tokens if t in lex.stopwords), n_tokens
    )
    features.update({k: float(v) for k, v in pos_counts(text, lex).items()})
    for name, words in lex.category_sets.items():
        features[f"text_{name}_words_percent"] = _percent(
            sum(1 for t in tokens if t in words), n_tokens
        )
    features["text_type_token_ratio"] = (
        len(set(tokens)) / n_tokens if n_tokens else 0.0
    )
    features.update(readability(text, lex.familiar_words))

    features["user_created_at"] = float(record.user_meta["user_created_at"])
    for key in (
        "user_follower_count",
        "user_following_count",
        "user_favourites_count",
        "user_tweet_count",
    ):
        features[key] = float(record.user_meta[key])
    for key in ("user_verified", "has_user_url", "user_geo", "user_profile"):
        features[key] = float(record.user_meta[key])

    assert set(features) == set(FEATURE_NAMES)
    return features

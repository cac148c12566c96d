"""Labeled tweet/sentence corpora: record types, file ingestion, and splits.

Two on-disk formats are supported for every schema: UTF-8 CSV with a declared
header, and JSON-lines with the same field names. Rows that fail validation
are reported with their line number instead of aborting the whole load.
"""

from __future__ import annotations

import csv
import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import numpy as np

TWEET_META_FIELDS = (
    "tweet_date",
    "tweet_type",
    "like_count",
    "retweet_count",
    "possibly_sensitive",
)

USER_META_FIELDS = (
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

TWEET_TYPES = ("tweet", "retweet", "quote", "reply")

_COUNT_FIELDS = frozenset(
    f for f in TWEET_META_FIELDS + USER_META_FIELDS if f.endswith("_count")
)
_DATE_FIELDS = frozenset(("tweet_date", "user_created_at"))
_BOOL_FIELDS = frozenset(
    (
        "possibly_sensitive",
        "user_verified",
        "has_user_url",
        "user_geo",
        "user_profile",
    )
)


class Verdict(enum.Enum):
    MISINFORMATIVE = "Misinformative"
    INFORMATIVE = "Informative"

    @classmethod
    def parse(cls, raw: str) -> "Verdict":
        try:
            return cls(raw.strip().capitalize())
        except ValueError:
            raise ValueError(f"unrecognized verdict label: {raw!r}") from None


class Schema(enum.Enum):
    DATASET_I = "dataset1"
    DATASET_II = "dataset2"
    CONSTRAINT_AAAI = "constraint"


class SchemaError(ValueError):
    """Header/required-column problem that invalidates the whole file."""


@dataclass(frozen=True)
class TweetRecord:
    id: str
    content: str
    verdict: Verdict
    tweet_meta: dict
    user_meta: dict

    def __post_init__(self):
        if not self.content.strip():
            raise ValueError("tweet content is empty")
        _check_meta(self.tweet_meta, TWEET_META_FIELDS, "tweet_meta")
        _check_meta(self.user_meta, USER_META_FIELDS, "user_meta")
        if self.tweet_meta["tweet_type"] not in TWEET_TYPES:
            raise ValueError(
                f"tweet_type must be one of {TWEET_TYPES}, "
                f"got {self.tweet_meta['tweet_type']!r}"
            )


@dataclass(frozen=True)
class SentenceRecord:
    id: str
    text: str
    verdict: Verdict

    def __post_init__(self):
        if not self.text.strip():
            raise ValueError("sentence text is empty")


@dataclass(frozen=True)
class SplitSpec:
    train_fraction: Fraction
    val_fraction: Fraction
    test_fraction: Fraction
    seed: int = 0

    def __post_init__(self):
        fracs = []
        for name in ("train_fraction", "val_fraction", "test_fraction"):
            f = Fraction(str(getattr(self, name)))
            if f <= 0:
                raise ValueError(f"{name} must be positive, got {f}")
            object.__setattr__(self, name, f)
            fracs.append(f)
        if sum(fracs) != 1:
            raise ValueError(f"split fractions must sum to 1, got {sum(fracs)}")


@dataclass(frozen=True)
class RowError:
    line: int
    message: str


@dataclass
class LoadResult:
    records: list = field(default_factory=list)
    errors: list = field(default_factory=list)

    def __iter__(self):
        return iter(self.records)

    def __len__(self):
        return len(self.records)


def _check_meta(meta: dict, fields: tuple, label: str) -> None:
    missing = [f for f in fields if f not in meta]
    if missing:
        raise ValueError(f"{label} missing fields: {missing}")
    for key in fields:
        value = meta[key]
        if key in _COUNT_FIELDS:
            if not isinstance(value, int) or value < 0:
                raise ValueError(f"{label}.{key} must be a count >= 0, got {value!r}")
        elif key in _DATE_FIELDS:
            if not isinstance(value, int) or value <= 0:
                raise ValueError(
                    f"{label}.{key} must be epoch milliseconds > 0, got {value!r}"
                )
        elif key in _BOOL_FIELDS:
            if not isinstance(value, bool):
                raise ValueError(f"{label}.{key} must be boolean, got {value!r}")


def _parse_bool(raw: str) -> bool:
    val = raw.strip().lower()
    if val in ("true", "1", "yes"):
        return True
    if val in ("false", "0", "no"):
        return False
    raise ValueError(f"not a boolean: {raw!r}")


DATASET_I_COLUMNS = ("id", "content", "verdict") + TWEET_META_FIELDS + USER_META_FIELDS
DATASET_II_COLUMNS = ("id", "text", "verdict")
CONSTRAINT_COLUMNS = ("id", "tweet", "label")


def _tweet_from_row(row: dict) -> TweetRecord:
    tweet_meta = {}
    user_meta = {}
    for key in TWEET_META_FIELDS + USER_META_FIELDS:
        raw = row[key]
        if key in _BOOL_FIELDS:
            value = _parse_bool(str(raw)) if not isinstance(raw, bool) else raw
        elif key == "tweet_type":
            value = str(raw).strip().lower()
        else:
            value = int(raw)
        (tweet_meta if key in TWEET_META_FIELDS else user_meta)[key] = value
    return TweetRecord(
        id=str(row["id"]),
        content=str(row["content"]),
        verdict=Verdict.parse(str(row["verdict"])),
        tweet_meta=tweet_meta,
        user_meta=user_meta,
    )


def _sentence_from_row(row: dict) -> SentenceRecord:
    return SentenceRecord(
        id=str(row["id"]),
        text=str(row["text"]),
        verdict=Verdict.parse(str(row["verdict"])),
    )


def _constraint_from_row(row: dict) -> SentenceRecord:
    label = str(row["label"]).strip().lower()
    if label == "real":
        verdict = Verdict.INFORMATIVE
    elif label == "fake":
        verdict = Verdict.MISINFORMATIVE
    else:
        raise ValueError(f"constraint label must be real/fake, got {row['label']!r}")
    return SentenceRecord(id=str(row["id"]), text=str(row["tweet"]), verdict=verdict)


_SCHEMA_SPEC = {
    Schema.DATASET_I: (DATASET_I_COLUMNS, _tweet_from_row),
    Schema.DATASET_II: (DATASET_II_COLUMNS, _sentence_from_row),
    Schema.CONSTRAINT_AAAI: (CONSTRAINT_COLUMNS, _constraint_from_row),
}


def load_dataset(path: str | Path, schema: Schema) -> LoadResult:
    """Parse a CSV or JSONL corpus file into records plus row-level errors.

    The format is picked from the file suffix (``.jsonl``/``.json`` means
    JSON-lines, anything else is read as CSV). A missing required column
    raises :class:`SchemaError`; a bad row is skipped and recorded in
    ``result.errors`` with its 1-based line number.
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(path)
    columns, build = _SCHEMA_SPEC[schema]
    result = LoadResult()
    if path.suffix.lower() in (".jsonl", ".json"):
        rows = _iter_jsonl(path, columns)
    else:
        rows = _iter_csv(path, columns)
    for line_no, row in rows:
        if isinstance(row, str):  # carried parse error message
            result.errors.append(RowError(line_no, row))
            continue
        try:
            result.records.append(build(row))
        except (ValueError, KeyError) as exc:
            result.errors.append(RowError(line_no, str(exc)))
    return result


def _iter_csv(path: Path, columns: tuple):
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames
        if header is None:
            raise SchemaError(f"{path}: empty file, expected header {list(columns)}")
        missing = [c for c in columns if c not in header]
        if missing:
            raise SchemaError(f"{path}: header missing required columns {missing}")
        for row in reader:
            yield reader.line_num, row


def _iter_jsonl(path: Path, columns: tuple):
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                row = json.loads(line)
            except json.JSONDecodeError as exc:
                yield line_no, f"invalid JSON: {exc}"
                continue
            missing = [c for c in columns if c not in row]
            if missing:
                yield line_no, f"missing fields {missing}"
                continue
            yield line_no, row


def save_dataset(records: list, path: str | Path, schema: Schema) -> None:
    """Write records back to CSV or JSONL so that load round-trips them."""
    path = Path(path)
    rows = [_record_to_row(r, schema) for r in records]
    columns = _SCHEMA_SPEC[schema][0]
    if path.suffix.lower() in (".jsonl", ".json"):
        with open(path, "w", encoding="utf-8") as fh:
            for row in rows:
                fh.write(json.dumps(row, ensure_ascii=False) + "\n")
    else:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.DictWriter(fh, fieldnames=list(columns))
            writer.writeheader()
            writer.writerows(rows)


def _record_to_row(record, schema: Schema) -> dict:
    if schema is Schema.DATASET_I:
        row = {"id": record.id, "content": record.content, "verdict": record.verdict.value}
        row.update(record.tweet_meta)
        row.update(record.user_meta)
        return row
    if schema is Schema.DATASET_II:
        return {"id": record.id, "text": record.text, "verdict": record.verdict.value}
    label = "fake" if record.verdict is Verdict.MISINFORMATIVE else "real"
    return {"id": record.id, "tweet": record.text, "label": label}


def split(records: list, spec: SplitSpec) -> tuple[list, list, list]:
    """Deterministic shuffle-then-slice split into (train, val, test).

    Sizes are the floors of the requested fractions; the remainder goes to
    the training slice. Equal seeds give equal partitions.
    """
    if not records:
        raise ValueError("cannot split an empty record list")
    n = len(records)
    n_val = int(spec.val_fraction * n)
    n_test = int(spec.test_fraction * n)
    n_train = n - n_val - n_test
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    order = rng.permutation(n)
    shuffled = [records[i] for i in order]
    train = shuffled[:n_train]
    val = shuffled[n_train : n_train + n_val]
    test = shuffled[n_train + n_val :]
    return train, val, test

#!/usr/bin/env python3
"""Generate the shipped synthetic sample corpora and demo embeddings.

Deterministic given the seed; the checked-in files under data/ are the
output of running this script once. Regenerate with:

    python scripts/make_sample_data.py
"""

from __future__ import annotations

import hashlib
import sys
from pathlib import Path

import numpy as np

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from claimcheck.corpus import Schema, SentenceRecord, TweetRecord, Verdict, save_dataset
from claimcheck.textprep import preprocess

SEED = 20240811

MIS_TEMPLATES = [
    "BREAKING: {remedy} CURES the virus in just days! Doctors HATE this secret!!!",
    "The virus was engineered in a lab, WAKE UP people! #truth #coverup",
    "Government is HIDING the real death numbers. Share before they delete this!",
    "5G towers spread the virus, the PROOF is being censored! #5G",
    "Do NOT take the vaccine, it permanently alters your DNA!!!",
    "{remedy} kills the virus instantly, my cousin is a nurse so I know.",
    "Masks cause oxygen deprivation and brain damage, STOP wearing them now!",
    "Hospitals get paid to fake covid deaths, the whole thing is a SCAM.",
    "SHOCKING leaked memo proves the pandemic was planned years ago #plandemic",
    "Drinking {remedy} every morning makes you immune, guaranteed miracle cure!",
    "They banned this video because it exposes the vaccine LIES. Watch now!!!",
    "Thermometer guns damage your brain, this is the hidden truth they deny.",
]

INFO_TEMPLATES = [
    "Washing hands for 20 seconds reduces transmission risk, per @WHO guidance.",
    "Clinical trials show the vaccine is safe and effective for adults. https://health.example/trials",
    "Wearing a mask helps protect the people around you, @CDCgov recommends it indoors.",
    "There is no evidence that {remedy} prevents infection, researchers reported.",
    "COVID-19 spreads mainly through respiratory droplets in close contact. https://evidence.example/spread",
    "Most patients recover at home; seek medical care if symptoms worsen.",
    "Vaccines were tested in large trials and monitored for safety, per @US_FDA.",
    "Hot baths do not prevent the coronavirus disease, body temperature stays normal.",
    "The virus can spread in hot and humid climates as well, protect yourself everywhere.",
    "Taking {remedy} has not been shown to cure the illness, doctors advise caution.",
    "Health agencies recommend ventilation and distancing to lower infection risk.",
    "Antibiotics do not work against viruses, they only treat bacterial infections.",
]

REMEDIES = ["garlic", "hot water", "vitamin C", "ginger tea", "sea salt", "lemon juice"]


def make_tweets(n: int, rng: np.random.Generator) -> list[TweetRecord]:
    records = []
    for i in range(n):
        mis = i % 2 == 0
        templates = MIS_TEMPLATES if mis else INFO_TEMPLATES
        template = templates[int(rng.integers(len(templates)))]
        content = template.format(remedy=REMEDIES[int(rng.integers(len(REMEDIES)))])
        if rng.random() < 0.3:
            content += f" #{['covid19', 'health', 'pandemic', 'news'][int(rng.integers(4))]}"
        if mis:
            followers = int(rng.lognormal(4.0, 1.0))
            verified = rng.random() < 0.05
            likes = int(rng.lognormal(2.5, 1.2))
            retweets = int(rng.lognormal(2.8, 1.2))
            sensitive = rng.random() < 0.15
        else:
            followers = int(rng.lognormal(7.5, 1.2))
            verified = rng.random() < 0.6
            likes = int(rng.lognormal(3.5, 1.0))
            retweets = int(rng.lognormal(2.0, 1.0))
            sensitive = rng.random() < 0.02
        tweet_meta = {
            "tweet_date": int(1_580_000_000_000 + rng.integers(0, 30_000_000_000)),
            "tweet_type": ["tweet", "retweet", "quote", "reply"][int(rng.integers(4))],
            "like_count": likes,
            "retweet_count": retweets,
            "possibly_sensitive": bool(sensitive),
        }
        user_meta = {
            "user_created_at": int(1_200_000_000_000 + rng.integers(0, 350_000_000_000)),
            "user_follower_count": followers,
            "user_following_count": int(rng.lognormal(5.5, 1.0)),
            "user_favourites_count": int(rng.lognormal(6.0, 1.5)),
            "user_verified": bool(verified),
            "user_tweet_count": int(rng.lognormal(7.0, 1.5)),
            "has_user_url": bool(rng.random() < (0.2 if mis else 0.7)),
            "user_geo": bool(rng.random() < 0.4),
            "user_profile": bool(rng.random() < (0.7 if mis else 0.95)),
        }
        records.append(
            TweetRecord(
                id=f"s{i:04d}",
                content=content,
                verdict=Verdict.MISINFORMATIVE if mis else Verdict.INFORMATIVE,
                tweet_meta=tweet_meta,
                user_meta=user_meta,
            )
        )
    return records


def make_sentences(tweets: list[TweetRecord]) -> list[SentenceRecord]:
    return [
        SentenceRecord(id=f"n{i:04d}", text=t.content, verdict=t.verdict)
        for i, t in enumerate(tweets)
    ]


def make_embeddings(tweets: list[TweetRecord], dim: int = 16) -> list[str]:
    """Per-token unit vectors plus a class-association component along a
    fixed axis, so similarity voting has signal to find."""
    token_counts: dict[str, list[int]] = {}
    for t in tweets:
        mis = t.verdict is Verdict.MISINFORMATIVE
        for token in set(preprocess(t.content).split()):
            counts = token_counts.setdefault(token, [0, 0])
            counts[1 if mis else 0] += 1
    lines = []
    for token in sorted(token_counts):
        info_n, mis_n = token_counts[token]
        association = (mis_n - info_n) / (mis_n + info_n)
        digest = hashlib.sha256(f"{SEED}:{token}".encode()).digest()
        word_rng = np.random.Generator(
            np.random.PCG64(int.from_bytes(digest[:8], "little"))
        )
        vec = word_rng.normal(size=dim)
        vec /= np.linalg.norm(vec)
        vec[0] += 2.0 * association
        lines.append(token + " " + " ".join(f"{v:.5f}" for v in vec))
    return lines


def main() -> None:
    out_dir = ROOT / "data"
    out_dir.mkdir(exist_ok=True)
    rng = np.random.Generator(np.random.PCG64(SEED))
    tweets = make_tweets(200, rng)
    save_dataset(tweets, out_dir / "sample_tweets_200.csv", Schema.DATASET_I)
    save_dataset(tweets[:50], out_dir / "sample_tweets_50.csv", Schema.DATASET_I)
    sentences = make_sentences(tweets)
    save_dataset(sentences, out_dir / "sample_sentences_200.csv", Schema.DATASET_II)
    lines = make_embeddings(tweets)
    (out_dir / "mini_embeddings.vec").write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(tweets)} tweets, {len(sentences)} sentences, {len(lines)} vectors")


if __name__ == "__main__":
    main()

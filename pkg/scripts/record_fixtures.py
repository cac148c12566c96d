#!/usr/bin/env python3
"""Record canonical service responses as fixtures for the browser console.

Boots the service in-process on a freshly trained sample workspace and
saves one JSON response per endpoint into frontend/fixtures/. The console's
contract tests replay these files, so they run without the Python backend.
"""

from __future__ import annotations

import json
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from fastapi.testclient import TestClient

from claimcheck import learn, pipeline, textprep, vectorize
from claimcheck.corpus import Schema, load_dataset
from claimcheck.features import load_default_lexicons
from claimcheck.service import create_app

DATA = ROOT / "data"
OUT = ROOT / "frontend" / "fixtures"

TWEET_META = {
    "tweet_date": 1_600_000_000_000,
    "tweet_type": "tweet",
    "like_count": 3,
    "retweet_count": 1,
    "possibly_sensitive": False,
}
USER_META = {
    "user_created_at": 1_300_000_000_000,
    "user_follower_count": 10,
    "user_following_count": 20,
    "user_favourites_count": 5,
    "user_verified": True,
    "user_tweet_count": 100,
    "has_user_url": False,
    "user_geo": True,
    "user_profile": True,
}


def build_workspace(root: Path) -> Path:
    (root / "models").mkdir()
    (root / "data").mkdir()
    sentences = load_dataset(DATA / "sample_sentences_200.csv", Schema.DATASET_II).records
    tweets = load_dataset(DATA / "sample_tweets_50.csv", Schema.DATASET_I).records

    docs = [textprep.preprocess(t) for t in pipeline.texts_of(sentences)]
    tfidf = vectorize.fit_tfidf(docs)
    X = vectorize.transform_many(tfidf, docs)
    y = pipeline.labels_of(sentences)
    for tag, kind in (("nb", "NB"), ("lr", "LR")):
        model = learn.train(
            learn.ModelConfig(kind), X, y, seed=3,
            binding=learn.binding_for_tfidf(tfidf),
        )
        learn.save_model(model, root / "models" / f"{tag}.json")

    lex = load_default_lexicons()
    frame, state = pipeline.featurize_records(tweets, lex, fit=True)
    net = learn.train(
        learn.ModelConfig("LR"), frame.matrix, pipeline.labels_of(tweets),
        seed=4, binding=learn.binding_for_features(frame.schema),
    )
    learn.save_model(net, root / "models" / "net.json")
    (root / "models" / "state.json").write_text(state.to_json())
    (root / "data" / "mini_embeddings.vec").write_text(
        (DATA / "mini_embeddings.vec").read_text()
    )
    (root / "data" / "tweets.csv").write_text(
        (DATA / "sample_tweets_50.csv").read_text()
    )
    manifest = {
        "text_models": [
            {"tag": "nb", "path": "models/nb.json", "level": "paragraph"},
            {"tag": "lr", "path": "models/lr.json", "level": "paragraph"},
        ],
        "network": {"model": "models/net.json", "transform": "models/state.json"},
        "similarity": {
            "embeddings": "data/mini_embeddings.vec",
            "corpus": "data/tweets.csv",
            "schema": "dataset1",
            "metric": "cosine",
            "default_k": 5,
        },
        "feedback_log": "feedback.jsonl",
        "datasets_dir": "data",
    }
    path = root / "manifest.json"
    path.write_text(json.dumps(manifest, indent=1))
    return path


def stabilize(doc: dict) -> dict:
    """Fixtures must be reproducible: pin the volatile envelope fields."""
    if "check_id" in doc:
        doc["check_id"] = "chk-fixture-0001"
    if "created_at" in doc:
        doc["created_at"] = 1700000000.0
    if "timestamp" in doc:
        doc["timestamp"] = 1700000000.0
    return doc


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    with tempfile.TemporaryDirectory() as tmp:
        manifest = build_workspace(Path(tmp))
        client = TestClient(create_app(manifest))

        paragraph = client.post(
            "/check/paragraph",
            json={"text": "BREAKING: garlic CURES the virus, doctors hate it!!!",
                  "model_tags": ["nb", "lr"]},
        ).json()
        sentences = client.post(
            "/check/sentences",
            json={"text": "Garlic cures the virus instantly! Masks help protect "
                          "people around you. Hospitals fake the numbers.",
                  "model_tag": "nb"},
        ).json()
        tweet = client.post(
            "/check/tweet",
            json={"id": "fixture-tweet", "content":
                  "Government is HIDING the real death numbers, share now!",
                  "tweet_meta": TWEET_META, "user_meta": USER_META},
        ).json()
        similar = client.post(
            "/similar", json={"text": "garlic cures the virus", "k": 5}
        ).json()
        real_check = client.post(
            "/check/paragraph", json={"text": "vaccines are safe"}
        ).json()
        feedback = client.post(
            "/feedback", json={"check_id": real_check["check_id"], "vote": "like"}
        ).json()
        error_unknown_model = client.post(
            "/check/paragraph", json={"text": "hello", "model_tags": ["xyz"]}
        ).json()

        fixtures = {
            "paragraph.json": stabilize(paragraph),
            "sentences.json": stabilize(sentences),
            "tweet.json": stabilize(tweet),
            "similar.json": stabilize(similar),
            "feedback.json": stabilize(feedback),
            "error_unknown_model.json": error_unknown_model,
        }
        for name, doc in fixtures.items():
            (OUT / name).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")
            print(f"wrote frontend/fixtures/{name}")


if __name__ == "__main__":
    main()

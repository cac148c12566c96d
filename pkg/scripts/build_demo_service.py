#!/usr/bin/env python3
"""Build a ready-to-serve demo workspace from the shipped sample corpus.

Trains the six classical/ensemble text classifiers at paragraph level, one
sentence-level model, a network-based model over the RFE-selected feature
set, and wires the similarity index, then writes demo/manifest.json:

    python scripts/build_demo_service.py
    claimcheck serve --manifest demo/manifest.json --port 8000
"""

from __future__ import annotations

import json
import shutil
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from claimcheck import learn, pipeline, textprep, vectorize
from claimcheck.corpus import Schema, SplitSpec, load_dataset, split
from claimcheck.features import load_default_lexicons, rfe_select

SEED = 42
TEXT_KINDS = ("LR", "NB", "SVM", "DT", "RF", "Stack")


def main() -> None:
    demo = ROOT / "demo"
    shutil.rmtree(demo, ignore_errors=True)
    (demo / "models").mkdir(parents=True)
    (demo / "data").mkdir()

    tweets = load_dataset(ROOT / "data" / "sample_tweets_200.csv", Schema.DATASET_I).records
    sentences = load_dataset(
        ROOT / "data" / "sample_sentences_200.csv", Schema.DATASET_II
    ).records
    spec = SplitSpec(0.6, 0.2, 0.2, seed=SEED)

    # paragraph-level text models on tweet content
    train_t, val_t, _ = split(tweets, spec)
    docs = [textprep.preprocess(t) for t in pipeline.texts_of(train_t)]
    tfidf = vectorize.fit_tfidf(docs)
    X = vectorize.transform_many(tfidf, docs)
    y = pipeline.labels_of(train_t)
    X_val = vectorize.transform_many(
        tfidf, [textprep.preprocess(t) for t in pipeline.texts_of(val_t)]
    )
    validation = (X_val, pipeline.labels_of(val_t))
    text_entries = []
    for kind in TEXT_KINDS:
        hp = {"n_trees": 50} if kind == "RF" else {}
        model = learn.train(
            learn.ModelConfig(kind, hp), X, y, seed=SEED,
            validation=validation, binding=learn.binding_for_tfidf(tfidf),
        )
        tag = kind.lower()
        learn.save_model(model, demo / "models" / f"{tag}_paragraph.json")
        text_entries.append(
            {"tag": tag, "path": f"models/{tag}_paragraph.json", "level": "paragraph"}
        )
        print(f"trained paragraph-level {kind}")

    # sentence-level model
    train_s, val_s, _ = split(sentences, spec)
    docs_s = [textprep.preprocess(t) for t in pipeline.texts_of(train_s)]
    tfidf_s = vectorize.fit_tfidf(docs_s)
    model_s = learn.train(
        learn.ModelConfig("Stack"),
        vectorize.transform_many(tfidf_s, docs_s),
        pipeline.labels_of(train_s),
        seed=SEED,
        binding=learn.binding_for_tfidf(tfidf_s),
    )
    learn.save_model(model_s, demo / "models" / "stack_sentence.json")
    text_entries.append(
        {"tag": "stack-sentence", "path": "models/stack_sentence.json", "level": "sentence"}
    )
    print("trained sentence-level Stack")

    # network-based model over the selected feature subset
    lex = load_default_lexicons()
    frame, state = pipeline.featurize_records(train_t, lex, fit=True)
    selection = rfe_select(
        frame, pipeline.labels_of(train_t), target_k=20,
        forest_spec={"n_trees": 25}, seed=SEED,
    )
    state = pipeline.TransformState(
        categories=state.categories, scaler=state.scaler, selected=selection.selected
    )
    net_model = learn.train(
        learn.ModelConfig("RF", {"n_trees": 50}),
        frame.select(selection.selected).matrix,
        pipeline.labels_of(train_t),
        seed=SEED,
        binding=learn.binding_for_features(selection.selected),
    )
    learn.save_model(net_model, demo / "models" / "network_rf.json")
    (demo / "models" / "state.json").write_text(state.to_json())
    print("trained network RF on 20 selected features")

    for name in ("sample_tweets_200.csv", "sample_sentences_200.csv", "mini_embeddings.vec"):
        shutil.copy(ROOT / "data" / name, demo / "data" / name)

    manifest = {
        "text_models": text_entries,
        "network": {
            "model": "models/network_rf.json",
            "transform": "models/state.json",
            "tag": "network-rf",
        },
        "similarity": {
            "embeddings": "data/mini_embeddings.vec",
            "corpus": "data/sample_tweets_200.csv",
            "schema": "dataset1",
            "metric": "cosine",
            "default_k": 5,
        },
        "feedback_log": "feedback.jsonl",
        "datasets_dir": "data",
    }
    (demo / "manifest.json").write_text(json.dumps(manifest, indent=1) + "\n")
    print(f"wrote {demo / 'manifest.json'}")


if __name__ == "__main__":
    main()

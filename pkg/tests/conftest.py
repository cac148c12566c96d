import json
from pathlib import Path

import pytest

from claimcheck import learn, pipeline, textprep, vectorize
from claimcheck.corpus import Schema, load_dataset
from claimcheck.features import load_default_lexicons

DATA_DIR = Path(__file__).resolve().parents[1] / "data"


@pytest.fixture(scope="session")
def sample_tweets():
    return load_dataset(DATA_DIR / "sample_tweets_50.csv", Schema.DATASET_I).records


@pytest.fixture(scope="session")
def sample_sentences():
    return load_dataset(DATA_DIR / "sample_sentences_200.csv", Schema.DATASET_II).records


@pytest.fixture(scope="session")
def service_workspace(tmp_path_factory, sample_tweets, sample_sentences):
    """A trained manifest directory: one text model, one network model,
    embeddings, and a datasets directory."""
    root = tmp_path_factory.mktemp("service")
    (root / "models").mkdir()
    (root / "data").mkdir()

    docs = [textprep.preprocess(t) for t in pipeline.texts_of(sample_sentences)]
    y = pipeline.labels_of(sample_sentences)
    tfidf = vectorize.fit_tfidf(docs)
    X = vectorize.transform_many(tfidf, docs)
    for tag, kind in (("nb", "NB"), ("lr", "LR")):
        model = learn.train(
            learn.ModelConfig(kind), X, y, seed=3,
            binding=learn.binding_for_tfidf(tfidf),
        )
        learn.save_model(model, root / "models" / f"{tag}_text.json")

    lex = load_default_lexicons()
    frame, state = pipeline.featurize_records(sample_tweets, lex, fit=True)
    net_model = learn.train(
        learn.ModelConfig("LR"),
        frame.matrix,
        pipeline.labels_of(sample_tweets),
        seed=4,
        binding=learn.binding_for_features(frame.schema),
    )
    learn.save_model(net_model, root / "models" / "net.json")
    (root / "models" / "state.json").write_text(state.to_json())

    embeddings_src = (DATA_DIR / "mini_embeddings.vec").read_text()
    (root / "data" / "mini_embeddings.vec").write_text(embeddings_src)
    (root / "data" / "tweets.csv").write_text(
        (DATA_DIR / "sample_tweets_50.csv").read_text()
    )

    manifest = {
        "text_models": [
            {"tag": "nb", "path": "models/nb_text.json", "level": "paragraph"},
            {"tag": "lr", "path": "models/lr_text.json", "level": "paragraph"},
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
    (root / "manifest.json").write_text(json.dumps(manifest, indent=1))
    return root

"""Claim-checking HTTP service.

Models, embeddings, and the reference index are loaded once at startup from
a JSON manifest; every check endpoint is read-only against that state, and
only POST /feedback writes anything (an append-only JSON-lines log, flushed
and fsynced before the request is acknowledged).

Manifest layout (all paths relative to the manifest file):

    {
      "text_models": [{"tag": "stack", "path": "models/stack.json",
                       "level": "paragraph"}, ...],
      "network": {"model": "models/net.json", "transform": "models/state.json"},
      "similarity": {"embeddings": "data/mini.vec",
                     "corpus": "data/tweets.csv", "schema": "dataset1",
                     "metric": "cosine", "default_k": 5},
      "feedback_log": "feedback.jsonl",
      "datasets_dir": "data"
    }

Every section is optional; endpoints backed by a missing section answer 503.
"""

from __future__ import annotations

import itertools
import json
import os
import threading
import time
import uuid
from pathlib import Path

from fastapi import FastAPI, HTTPException
from fastapi.responses import FileResponse
from pydantic import BaseModel, Field

from . import learn, pipeline, simclass, textprep, vectorize
from .corpus import Schema, TweetRecord, Verdict, load_dataset
from .features import load_default_lexicons

_SCHEMAS = {"dataset1": Schema.DATASET_I, "dataset2": Schema.DATASET_II}


def _error(status: int, code: str, message: str) -> HTTPException:
    return HTTPException(status_code=status, detail={"code": code, "message": message})


class ParagraphRequest(BaseModel):
    text: str
    model_tags: list[str] | None = None


class SentencesRequest(BaseModel):
    text: str
    model_tag: str


class TweetRequest(BaseModel):
    id: str = "adhoc"
    content: str
    tweet_meta: dict
    user_meta: dict


class SimilarRequest(BaseModel):
    text: str
    metric: str | None = None
    k: int | None = None


class FeedbackRequest(BaseModel):
    check_id: str
    vote: str = Field(pattern="^(like|dislike)$")


class ServiceState:
    def __init__(self, manifest_path: str | Path):
        manifest_path = Path(manifest_path)
        base = manifest_path.parent
        doc = json.loads(manifest_path.read_text("utf-8"))

        self.text_models: dict[str, learn.TrainedModel] = {}
        self.model_levels: dict[str, str] = {}
        for entry in doc.get("text_models", []):
            model = learn.load_model(base / entry["path"])
            if model.binding.type != "tfidf":
                raise ValueError(
                    f"text model {entry['tag']!r} must carry a tfidf binding"
                )
            self.text_models[entry["tag"]] = model
            self.model_levels[entry["tag"]] = entry.get("level", "paragraph")

        self.network = None
        if "network" in doc:
            net = doc["network"]
            self.network = {
                "model": learn.load_model(base / net["model"]),
                "state": pipeline.TransformState.from_json(
                    (base / net["transform"]).read_text("utf-8")
                ),
                "tag": net.get("tag", "network"),
            }

        self.similarity = None
        if "similarity" in doc:
            sim = doc["similarity"]
            table = vectorize.load_embeddings(base / sim["embeddings"])
            schema = _SCHEMAS[sim.get("schema", "dataset1")]
            records = load_dataset(base / sim["corpus"], schema).records
            self.similarity = {
                "table": table,
                "index": simclass.build_index(records, table),
                "metric": sim.get("metric", "cosine"),
                "default_k": int(sim.get("default_k", 5)),
            }

        self.datasets_dir = (base / doc["datasets_dir"]).resolve() if "datasets_dir" in doc else None
        self.feedback_path = (base / doc["feedback_log"]) if "feedback_log" in doc else None
        self.lexicons = load_default_lexicons()
        self.issued_checks: set[str] = set()
        self.feedback_lock = threading.Lock()
        self.check_counter = itertools.count(1)

    def new_check_id(self) -> str:
        return f"chk-{next(self.check_counter):06d}-{uuid.uuid4().hex[:8]}"

    def content_tag(self) -> str:
        for tag, level in self.model_levels.items():
            if level == "paragraph":
                return tag
        if self.text_models:
            return next(iter(self.text_models))
        raise _error(503, "no_models", "no text models configured")


def _predict_text(model: learn.TrainedModel, text: str) -> tuple[str, float]:
    doc = textprep.preprocess(text)
    row = vectorize.transform_many(model.binding.tfidf, [doc])
    proba = float(model.predict_proba(row)[0])
    verdict = Verdict.MISINFORMATIVE if proba >= 0.5 else Verdict.INFORMATIVE
    return verdict.value, proba


def create_app(manifest_path: str | Path) -> FastAPI:
    state = ServiceState(manifest_path)
    app = FastAPI(title="claimcheck", version="1.0")
    app.state.service = state

    def _issue(state: ServiceState) -> str:
        check_id = state.new_check_id()
        state.issued_checks.add(check_id)
        return check_id

    @app.get("/health")
    def health():
        return {
            "status": "ok",
            "text_models": sorted(state.text_models),
            "network": state.network is not None,
            "similarity": state.similarity is not None,
        }

    @app.post("/check/paragraph")
    def check_paragraph(req: ParagraphRequest):
        if not req.text.strip():
            raise _error(422, "empty_text", "text must be non-empty")
        tags = req.model_tags if req.model_tags else sorted(state.text_models)
        if not tags:
            raise _error(503, "no_models", "no text models configured")
        unknown = [t for t in tags if t not in state.text_models]
        if unknown:
            raise _error(404, "unknown_model", f"unknown model tags: {unknown}")
        verdicts = []
        for tag in tags:
            verdict, proba = _predict_text(state.text_models[tag], req.text)
            verdicts.append({"model": tag, "verdict": verdict, "probability": proba})
        return {
            "check_id": _issue(state),
            "text": req.text,
            "verdicts": verdicts,
            "created_at": time.time(),
        }

    @app.post("/check/sentences")
    def check_sentences(req: SentencesRequest):
        if not req.text.strip():
            raise _error(422, "empty_text", "text must be non-empty")
        if req.model_tag not in state.text_models:
            raise _error(404, "unknown_model", f"unknown model tag: {req.model_tag}")
        model = state.text_models[req.model_tag]
        sentences = textprep.split_sentences(req.text)
        breakdown = []
        for sentence in sentences:
            verdict, proba = _predict_text(model, sentence)
            breakdown.append(
                {"sentence": sentence, "verdict": verdict, "probability": proba}
            )
        return {
            "check_id": _issue(state),
            "text": req.text,
            "model": req.model_tag,
            "sentences": breakdown,
            "created_at": time.time(),
        }

    @app.post("/check/tweet")
    def check_tweet(req: TweetRequest):
        if state.network is None:
            raise _error(503, "no_network_model", "network model not configured")
        try:
            record = TweetRecord(
                id=req.id, content=req.content,
                verdict=Verdict.INFORMATIVE,  # placeholder, not used for features
                tweet_meta=req.tweet_meta, user_meta=req.user_meta,
            )
        except ValueError as exc:
            raise _error(422, "invalid_record", str(exc))
        frame, _ = pipeline.featurize_records(
            [record], state.lexicons, state=state.network["state"]
        )
        net_model = state.network["model"]
        matrix = frame.matrix
        proba_net = float(net_model.predict_proba(matrix)[0])
        verdict_net = (
            Verdict.MISINFORMATIVE if proba_net >= 0.5 else Verdict.INFORMATIVE
        )
        content_tag = state.content_tag()
        verdict_text, proba_text = _predict_text(
            state.text_models[content_tag], req.content
        )
        return {
            "check_id": _issue(state),
            "id": req.id,
            "verdicts": [
                {
                    "group": "network",
                    "model": state.network["tag"],
                    "verdict": verdict_net.value,
                    "probability": proba_net,
                },
                {
                    "group": "content",
                    "model": content_tag,
                    "verdict": verdict_text,
                    "probability": proba_text,
                },
            ],
            "created_at": time.time(),
        }

    @app.post("/similar")
    def similar(req: SimilarRequest):
        if state.similarity is None:
            raise _error(503, "no_similarity", "similarity index not configured")
        if not req.text.strip():
            raise _error(422, "empty_text", "text must be non-empty")
        sim = state.similarity
        k = req.k if req.k is not None else sim["default_k"]
        metric = req.metric or sim["metric"]
        try:
            config = simclass.SimilarityConfig(
                metric=metric, k=k, embedding=sim["table"]
            )
            result = simclass.classify(req.text, sim["index"], config)
        except ValueError as exc:
            raise _error(422, "bad_request", str(exc))
        return {
            "check_id": _issue(state),
            "text": req.text,
            "metric": metric,
            "k": k,
            "verdict": result.verdict.value,
            "score": result.score,
            "neighbors": [
                {
                    "source_id": n.source_id,
                    "text": n.text,
                    "label": "Misinformative" if n.label else "Informative",
                    "similarity": n.similarity,
                    "weight": n.weight,
                }
                for n in result.neighbors
            ],
            "created_at": time.time(),
        }

    @app.post("/feedback")
    def feedback(req: FeedbackRequest):
        if state.feedback_path is None:
            raise _error(503, "no_feedback_log", "feedback log not configured")
        if req.check_id not in state.issued_checks:
            raise _error(404, "unknown_check", f"check_id {req.check_id!r} was never issued")
        entry = {"check_id": req.check_id, "vote": req.vote, "timestamp": time.time()}
        line = json.dumps(entry, sort_keys=True) + "\n"
        with state.feedback_lock:
            with open(state.feedback_path, "a", encoding="utf-8") as fh:
                fh.write(line)
                fh.flush()
                os.fsync(fh.fileno())
        return {"recorded": True, **entry}

    @app.get("/datasets")
    def datasets():
        if state.datasets_dir is None:
            raise _error(503, "no_datasets", "datasets directory not configured")
        files = sorted(p.name for p in state.datasets_dir.iterdir() if p.is_file())
        return {"datasets": files}

    @app.get("/datasets/{name}")
    def dataset_file(name: str):
        if state.datasets_dir is None:
            raise _error(503, "no_datasets", "datasets directory not configured")
        target = (state.datasets_dir / name).resolve()
        if target.parent != state.datasets_dir or not target.is_file():
            raise _error(404, "unknown_dataset", f"no dataset named {name!r}")
        return FileResponse(target)

    return app

"""Command-line entry point.

Every subcommand writes its outputs atomically (temp file + rename) and
echoes the seed into artifacts, so re-running with identical flags
reproduces byte-identical files.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import evaluate as evalmod
from . import learn, pipeline, simclass, textprep, vectorize
from .corpus import Schema, SplitSpec, load_dataset, save_dataset, split
from .features import load_default_lexicons, pca2, rfe_select
from .learn.io import atomic_write_text

SCHEMAS = {
    "dataset1": Schema.DATASET_I,
    "dataset2": Schema.DATASET_II,
    "constraint": Schema.CONSTRAINT_AAAI,
}

KIND_NAMES = {
    "lr": "LR", "nb": "NB", "svm": "SVM", "dt": "DT",
    "rf": "RF", "stack": "Stack", "mlp": "MLP",
}


def _load_records(path: str, schema_name: str):
    result = load_dataset(path, SCHEMAS[schema_name])
    for err in result.errors:
        print(f"{path}:{err.line}: {err.message}", file=sys.stderr)
    return result.records


def _parse_hp(pairs: list[str]) -> dict:
    hp = {}
    for pair in pairs or []:
        key, _, raw = pair.partition("=")
        if not _:
            raise SystemExit(f"bad --hp {pair!r}, expected key=value")
        try:
            hp[key] = json.loads(raw)
        except json.JSONDecodeError:
            hp[key] = raw
    return hp


def cmd_ingest(args) -> int:
    records = _load_records(args.infile, args.schema)
    out_schema = SCHEMAS[args.schema]
    if out_schema is Schema.CONSTRAINT_AAAI:
        out_schema = Schema.DATASET_II  # constraint rows normalize to sentences
    save_dataset(records, args.out, out_schema)
    print(f"wrote {len(records)} records to {args.out}")
    return 0


def cmd_split(args) -> int:
    records = _load_records(args.infile, args.schema)
    spec = SplitSpec(args.train_fraction, args.val_fraction, args.test_fraction,
                     seed=args.seed)
    parts = split(records, spec)
    schema = SCHEMAS[args.schema]
    for name, part in zip(("train", "val", "test"), parts):
        out = Path(args.out_dir) / f"{name}{Path(args.infile).suffix}"
        save_dataset(part, out, schema)
        print(f"{name}: {len(part)} rows -> {out}")
    return 0


def cmd_preprocess(args) -> int:
    lines = Path(args.infile).read_text("utf-8").splitlines()
    config = textprep.PrepConfig()
    out = "\n".join(textprep.preprocess(line, config) for line in lines) + "\n"
    atomic_write_text(args.out, out)
    print(f"preprocessed {len(lines)} lines -> {args.out}")
    return 0


def cmd_featurize(args) -> int:
    records = _load_records(args.infile, "dataset1")
    lex = load_default_lexicons(args.reliable_accounts)
    if args.fit_transform:
        frame, state = pipeline.featurize_records(records, lex, fit=True)
        atomic_write_text(args.fit_transform, state.to_json())
    else:
        state = pipeline.TransformState.from_json(Path(args.transform).read_text("utf-8"))
        frame, _ = pipeline.featurize_records(records, lex, state=state)
    ids = [r.id for r in records]
    labels = pipeline.labels_of(records)
    atomic_write_text(args.out, pipeline.write_feature_csv(None, ids, labels, frame))
    print(f"featurized {frame.n_rows} rows x {len(frame.schema)} columns -> {args.out}")
    return 0


def cmd_select(args) -> int:
    ids, labels, frame = pipeline.read_feature_csv(args.infile)
    result = rfe_select(
        frame, labels, target_k=args.k,
        forest_spec={"n_trees": args.trees}, seed=args.seed,
    )
    doc = {
        "seed": args.seed,
        "target_k": args.k,
        "n_trees": args.trees,
        "selected": list(result.selected),
        "ranking": list(result.ranking),
        "importances": result.importances,
    }
    atomic_write_text(args.out, json.dumps(doc, indent=1, sort_keys=True) + "\n")
    if args.transform:
        state = pipeline.TransformState.from_json(Path(args.transform).read_text("utf-8"))
        updated = pipeline.TransformState(
            categories=state.categories, scaler=state.scaler, selected=result.selected
        )
        atomic_write_text(args.transform, updated.to_json())
    print(f"selected {len(result.selected)} features -> {args.out}")
    return 0


def cmd_pca(args) -> int:
    ids, labels, frame = pipeline.read_feature_csv(args.infile)
    result = pca2(frame.matrix)
    lines = ["id,verdict,pc1,pc2"]
    for i, row_id in enumerate(ids):
        verdict = "Misinformative" if labels[i] else "Informative"
        lines.append(f"{row_id},{verdict},{float(result.coords[i, 0])!r},{float(result.coords[i, 1])!r}")
    atomic_write_text(args.out, "\n".join(lines) + "\n")
    ratios = result.explained_variance_ratio
    print(f"explained variance ratios: {ratios[0]:.4f} {ratios[1]:.4f} -> {args.out}")
    return 0


def _train_text_model(args, kind: str):
    records = _load_records(args.train, args.schema)
    docs = [textprep.preprocess(t) for t in pipeline.texts_of(records)]
    y = pipeline.labels_of(records)
    tfidf = vectorize.fit_tfidf(docs, max_features=args.max_features)
    X = vectorize.transform_many(tfidf, docs)
    validation = None
    if args.val:
        val_records = _load_records(args.val, args.schema)
        val_docs = [textprep.preprocess(t) for t in pipeline.texts_of(val_records)]
        validation = (
            vectorize.transform_many(tfidf, val_docs),
            pipeline.labels_of(val_records),
        )
    config = learn.ModelConfig(kind, _parse_hp(args.hp))
    return learn.train(
        config, X, y, seed=args.seed, validation=validation,
        binding=learn.binding_for_tfidf(tfidf),
    )


def _train_network_model(args, kind: str):
    ids, y, frame = pipeline.read_feature_csv(args.train)
    validation = None
    if args.val:
        _, y_val, val_frame = pipeline.read_feature_csv(args.val)
        validation = (val_frame.matrix, y_val)
    config = learn.ModelConfig(kind, _parse_hp(args.hp))
    return learn.train(
        config, frame.matrix, y, seed=args.seed, validation=validation,
        binding=learn.binding_for_features(frame.schema),
    )


def cmd_train(args) -> int:
    kind = KIND_NAMES[args.kind]
    if args.mode == "text":
        model = _train_text_model(args, kind)
    else:
        model = _train_network_model(args, kind)
    learn.save_model(model, args.out)
    print(f"trained {kind} (seed {args.seed}) -> {args.out}")
    return 0


def cmd_gridsearch(args) -> int:
    grid = json.loads(Path(args.grid).read_text("utf-8"))
    kind = KIND_NAMES[args.kind]
    if args.mode == "text":
        records = _load_records(args.train, args.schema)
        docs = [textprep.preprocess(t) for t in pipeline.texts_of(records)]
        y = pipeline.labels_of(records)
        tfidf = vectorize.fit_tfidf(docs, max_features=args.max_features)
        X = vectorize.transform_many(tfidf, docs)
        val_records = _load_records(args.val, args.schema)
        val_docs = [textprep.preprocess(t) for t in pipeline.texts_of(val_records)]
        X_val = vectorize.transform_many(tfidf, val_docs)
        y_val = pipeline.labels_of(val_records)
    else:
        _, y, frame = pipeline.read_feature_csv(args.train)
        X = frame.matrix
        _, y_val, val_frame = pipeline.read_feature_csv(args.val)
        X_val = val_frame.matrix
    result = learn.grid_search(kind, grid, X, y, X_val, y_val, seed=args.seed)
    doc = {
        "seed": args.seed,
        "kind": kind,
        "best": result.best_config.hyperparameters,
        "best_f1": result.best_score,
        "table": result.table,
    }
    atomic_write_text(args.out, json.dumps(doc, indent=1, sort_keys=True) + "\n")
    print(f"searched {len(result.table)} combinations, best F1 {result.best_score:.4f} -> {args.out}")
    return 0


def _model_inputs(model, path: str, schema_name: str):
    """Rows for prediction according to the model's schema binding."""
    if model.binding.type == "tfidf":
        records = _load_records(path, schema_name)
        docs = [textprep.preprocess(t) for t in pipeline.texts_of(records)]
        X = vectorize.transform_many(model.binding.tfidf, docs)
        return [r.id for r in records], pipeline.labels_of(records), X
    ids, labels, frame = pipeline.read_feature_csv(path)
    if model.binding.type == "features" and tuple(frame.schema) != model.binding.names:
        frame = frame.select(model.binding.names)
    return ids, labels, frame.matrix


def cmd_evaluate(args) -> int:
    model = learn.load_model(args.model)
    ids, labels, X = _model_inputs(model, args.test, args.schema)
    preds = model.predict(X)
    report = evalmod.score(
        list(labels), list(preds),
        model=args.tag or model.config.kind, dataset=Path(args.test).name,
    )
    rendered = evalmod.emit_report([report], args.format)
    if args.out:
        atomic_write_text(args.out, rendered)
    print(rendered, end="" if rendered.endswith("\n") else "\n")
    return 0


def cmd_predict(args) -> int:
    model = learn.load_model(args.model)
    ids, _, X = _model_inputs(model, args.infile, args.schema)
    probas = model.predict_proba(X)
    lines = ["id,verdict,probability"]
    for row_id, p in zip(ids, probas):
        p = float(p)
        verdict = "Misinformative" if p >= 0.5 else "Informative"
        lines.append(f"{row_id},{verdict},{p!r}")
    atomic_write_text(args.out, "\n".join(lines) + "\n")
    print(f"predicted {len(ids)} rows -> {args.out}")
    return 0


def _build_index(args):
    table = vectorize.load_embeddings(args.embeddings)
    records = _load_records(args.corpus, args.schema)
    return table, simclass.build_index(records, table)


def cmd_similar(args) -> int:
    table, index = _build_index(args)
    config = simclass.SimilarityConfig(metric=args.metric, k=args.k, embedding=table)
    result = simclass.classify(args.text, index, config)
    doc = {
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
    }
    print(json.dumps(doc, indent=1))
    return 0


def cmd_tune_k(args) -> int:
    table = vectorize.load_embeddings(args.embeddings)
    train_records = _load_records(args.train, args.schema)
    val_records = _load_records(args.val, args.schema)
    index = simclass.build_index(train_records, table)
    config = simclass.SimilarityConfig(metric=args.metric, embedding=table)
    result = simclass.tune_k(index, val_records, config,
                             k_range=range(args.k_min, args.k_max + 1))
    lines = ["k,error"] + [f"{k},{err!r}" for k, err in sorted(result.errors.items())]
    atomic_write_text(args.out, "\n".join(lines) + "\n")
    print(f"best K = {result.best_k} -> {args.out}")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    port = int(os.environ.get("CLAIMCHECK_PORT", args.port))
    app = create_app(args.manifest)
    uvicorn.run(app, host=args.host, port=port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="claimcheck",
        description="Misinformation detection pipelines and claim-checking service.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        return p

    p = add("ingest", cmd_ingest, help="validate and normalize a corpus file")
    p.add_argument("--schema", choices=list(SCHEMAS), required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)

    p = add("split", cmd_split, help="deterministic train/val/test split")
    p.add_argument("--schema", choices=list(SCHEMAS), required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out-dir", required=True)
    p.add_argument("--train-fraction", type=float, default=0.6)
    p.add_argument("--val-fraction", type=float, default=0.2)
    p.add_argument("--test-fraction", type=float, default=0.2)
    p.add_argument("--seed", type=int, default=0)

    p = add("preprocess", cmd_preprocess, help="clean raw text lines")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)

    p = add("featurize", cmd_featurize, help="extract the tweet feature matrix")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--fit-transform", metavar="STATE_OUT",
                       help="fit one-hot/scaler on these rows and save the state")
    group.add_argument("--transform", metavar="STATE_IN",
                       help="apply a previously fitted state")
    p.add_argument("--reliable-accounts", default=None)

    p = add("select", cmd_select, help="recursive feature elimination")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--k", type=int, default=20)
    p.add_argument("--trees", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--transform", default=None,
                   help="also record the selection into this transform state")

    p = add("pca", cmd_pca, help="two-component projection for plotting")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)

    for name, fn in (("train", cmd_train), ("gridsearch", cmd_gridsearch)):
        p = add(name, fn, help=f"{name} a model")
        p.add_argument("--kind", choices=list(KIND_NAMES), required=True)
        p.add_argument("--mode", choices=["network", "text"], required=True)
        p.add_argument("--train", required=True)
        p.add_argument("--val", required=(name == "gridsearch"))
        p.add_argument("--schema", choices=list(SCHEMAS), default="dataset2")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--max-features", type=int, default=None)
        p.add_argument("--out", required=True)
        if name == "train":
            p.add_argument("--hp", nargs="*", default=[],
                           help="hyperparameters as key=value (JSON values)")
        else:
            p.add_argument("--grid", required=True, help="JSON file of candidate lists")

    p = add("evaluate", cmd_evaluate, help="score a saved model on a test set")
    p.add_argument("--model", required=True)
    p.add_argument("--test", required=True)
    p.add_argument("--schema", choices=list(SCHEMAS), default="dataset2")
    p.add_argument("--format", choices=["table-text", "csv", "json"], default="table-text")
    p.add_argument("--out", default=None)
    p.add_argument("--tag", default=None)

    p = add("predict", cmd_predict, help="per-row verdicts from a saved model")
    p.add_argument("--model", required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--schema", choices=list(SCHEMAS), default="dataset2")
    p.add_argument("--out", required=True)

    p = add("similar", cmd_similar, help="nearest labeled claims for a text")
    p.add_argument("--embeddings", required=True)
    p.add_argument("--corpus", required=True)
    p.add_argument("--schema", choices=list(SCHEMAS), default="dataset1")
    p.add_argument("--metric", choices=["cosine", "euclidean"], default="cosine")
    p.add_argument("--k", type=int, default=5)
    p.add_argument("--text", required=True)

    p = add("tune-k", cmd_tune_k, help="misclassification error per K")
    p.add_argument("--embeddings", required=True)
    p.add_argument("--train", required=True)
    p.add_argument("--val", required=True)
    p.add_argument("--schema", choices=list(SCHEMAS), default="dataset1")
    p.add_argument("--metric", choices=["cosine", "euclidean"], default="cosine")
    p.add_argument("--k-min", type=int, default=1)
    p.add_argument("--k-max", type=int, default=10)
    p.add_argument("--out", required=True)

    p = add("serve", cmd_serve, help="run the claim-checking HTTP service")
    p.add_argument("--manifest", required=True)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, FileNotFoundError, learn.ModelFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

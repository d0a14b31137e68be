"""Pipeline stages. Each reads the previous stage's files from the output directory.

Layout under ``config.out``::

    corpus.jsonl  entries.jsonl  random.jsonl
    features.tsv  ransac.json
    labels.tsv  binary_labels.tsv  splits_binary.tsv  splits_keywords.tsv
    models/<name>.json  reports/<name>.{txt,json}  figs/*.tsv
"""
from __future__ import annotations

import json
import logging
from functools import wraps
from pathlib import Path

import numpy as np

from .config import RunConfig, default_cache_dir
from .dataset import (
    generate_random_sequences,
    join_dataset,
    read_label_table,
    read_split_table,
    split,
    write_label_table,
    write_split_table,
)
from .errors import SeqfpError, StageError
from .evaluate import Report, export_plot_data, export_ransac, make_report, read_report, write_report
from .fingerprint import fingerprint_all, read_feature_table, write_feature_table
from .learn import (
    MODES,
    BaselineModel,
    ForestHyper,
    baseline_fit,
    baseline_predict,
    load_model,
    multilabel_fit,
    multilabel_predict,
    save_model,
)
from .numerics import RansacFit, ransac_fit
from .oeis import (
    LABELS,
    OeisClient,
    Sequence,
    build_corpus,
    extract_labels,
    iter_entries,
    iter_manifest,
    sample_ids,
    select_corpus,
    write_entries,
    write_manifest,
)

log = logging.getLogger(__name__)

TASKS = ("oeis-vs-random", "keywords")
MODELS = MODES + ("baseline",)
BINARY_LABELS = ("oeis",)
INCOMPLETE = "INCOMPLETE"


def _stage(name):
    """Wrap a stage so any failure surfaces as a StageError tagged with ``name``."""
    def deco(fn):
        @wraps(fn)
        def run(*args, **kwargs):
            try:
                return fn(*args, **kwargs)
            except StageError:
                raise
            except Exception as exc:
                raise StageError(name, exc) from exc
        return run
    return deco


def _path(cfg: RunConfig, *parts) -> Path:
    return cfg.out_dir.joinpath(*parts)


def _require(path: Path, made_by: str) -> Path:
    if not path.exists():
        raise FileNotFoundError(f"{path} not found (run `{made_by}` first)")
    return path


def model_name(task: str, mode: str) -> str:
    return "oeis_vs_random" if task == "oeis-vs-random" else mode


# ---------------------------------------------------------------- ingest

def _fetch_corpus(cfg: RunConfig):
    client = OeisClient(cfg.cache_dir or default_cache_dir(), cfg.rate_limit)
    seqs, meta = [], {}
    for sid in cfg.fetch_ids:
        entry = client.fetch_entry(sid)
        meta[entry.id] = entry
        try:
            terms = client.fetch_bfile(entry.id)
            seqs.append(Sequence(entry.id, terms, "bfile"))
        except SeqfpError:
            seqs.append(Sequence(entry.id, list(entry.terms), "entry"))
    seqs.sort(key=lambda s: s.id)
    kept = select_corpus(seqs, cfg.min_terms)
    chosen = set(sample_ids([s.id for s in kept], cfg.sample_size, cfg.stage_seed("sample")))
    corpus = [s for s in kept if s.id in chosen]
    return corpus, {s.id: meta[s.id] for s in corpus}


@_stage("ingest")
def stage_ingest(cfg: RunConfig) -> list[Sequence]:
    if cfg.fetch_ids:
        corpus, meta = _fetch_corpus(cfg)
    else:
        src = cfg.sources()
        for key, p in src.items():
            if p is not None and not p.exists():
                raise FileNotFoundError(f"{key} source {p} does not exist")
        corpus, meta = build_corpus(**src, min_terms=cfg.min_terms, sample_size=cfg.sample_size,
                                    seed=cfg.stage_seed("sample"))
    if not corpus:
        raise ValueError(f"no sequence has at least {cfg.min_terms} terms")
    missing = [s.id for s in corpus if s.id not in meta]
    if missing:
        raise ValueError(f"no name/keyword metadata for {len(missing)} sequences, e.g. {missing[0]}")
    write_manifest(_path(cfg, "corpus.jsonl"), corpus)
    write_entries(_path(cfg, "entries.jsonl"), (meta[s.id] for s in corpus))
    log.info("ingest: %d sequences", len(corpus))
    return corpus


# ---------------------------------------------------------------- features

def _random_count(cfg: RunConfig, n_corpus: int) -> int:
    return n_corpus if cfg.random_count is None else cfg.random_count


@_stage("features")
def stage_features(cfg: RunConfig):
    corpus = list(iter_manifest(_require(_path(cfg, "corpus.jsonl"), "ingest")))
    randoms = generate_random_sequences(_random_count(cfg, len(corpus)), cfg.random_length,
                                        cfg.random_lo, cfg.random_hi, cfg.stage_seed("random"))
    write_manifest(_path(cfg, "random.jsonl"), randoms)
    rows = fingerprint_all(corpus + randoms, cfg.workers)
    write_feature_table(_path(cfg, "features.tsv"), rows)
    return rows


def _feature_rows(cfg: RunConfig):
    return read_feature_table(_require(_path(cfg, "features.tsv"), "features"))


def _oeis_rows(rows):
    return [r for r in rows if not r.id.startswith("R")]


# ---------------------------------------------------------------- ransac

def ransac_points(rows):
    """(r, s) points of the OEIS rows whose Taylor fit is not degenerate."""
    keep = [r for r in _oeis_rows(rows) if not (r.features[0] == 0 and r.features[1] == 0 and r.features[2] == 0)]
    pts = np.array([(r.features[2], r.features[0]) for r in keep], dtype=np.float64).reshape(-1, 2)
    return [r.id for r in keep], pts


@_stage("ransac")
def stage_ransac(cfg: RunConfig) -> RansacFit:
    ids, pts = ransac_points(_feature_rows(cfg))
    fit = ransac_fit(pts, cfg.ransac_threshold, cfg.ransac_iterations, cfg.stage_seed("ransac"))
    body = {"ids": ids, "fit": fit.to_dict()}
    _path(cfg, "ransac.json").write_text(json.dumps(body, indent=1, sort_keys=True) + "\n", encoding="utf-8")
    return fit


def read_ransac(cfg: RunConfig) -> tuple[list[str], RansacFit]:
    body = json.loads(_require(_path(cfg, "ransac.json"), "ransac").read_text(encoding="utf-8"))
    return body["ids"], RansacFit.from_dict(body["fit"])


# ---------------------------------------------------------------- dataset

@_stage("make-dataset")
def stage_dataset(cfg: RunConfig) -> None:
    entries = {e.id: e for e in iter_entries(_require(_path(cfg, "entries.jsonl"), "ingest"))}
    rows = _feature_rows(cfg)
    oeis_ids = [r.id for r in _oeis_rows(rows)]
    all_ids = [r.id for r in rows]
    Y = np.array([extract_labels(entries[i]).as_tuple() for i in oeis_ids], dtype=bool).reshape(-1, len(LABELS))
    write_label_table(_path(cfg, "labels.tsv"), oeis_ids, Y)
    Yb = np.array([[not i.startswith("R")] for i in all_ids], dtype=bool)
    write_label_table(_path(cfg, "binary_labels.tsv"), all_ids, Yb, BINARY_LABELS)
    write_split_table(_path(cfg, "splits_binary.tsv"), all_ids,
                      split(len(all_ids), cfg.binary_split, cfg.stage_seed("split-binary")))
    write_split_table(_path(cfg, "splits_keywords.tsv"), oeis_ids,
                      split(len(oeis_ids), cfg.keyword_split, cfg.stage_seed("split-keywords")))


def load_dataset(cfg: RunConfig, task: str):
    if task not in TASKS:
        raise ValueError(f"unknown task {task!r}")
    rows = _feature_rows(cfg)
    if task == "oeis-vs-random":
        lab, spl = "binary_labels.tsv", "splits_binary.tsv"
    else:
        lab, spl = "labels.tsv", "splits_keywords.tsv"
        rows = _oeis_rows(rows)
    ids, Y, names = read_label_table(_require(_path(cfg, lab), "make-dataset"))
    splits = read_split_table(_require(_path(cfg, spl), "make-dataset"))
    return join_dataset(rows, ids, Y, splits, names)


# ---------------------------------------------------------------- train / evaluate

def _hyper(cfg: RunConfig, task: str, mode: str) -> ForestHyper:
    return ForestHyper(n_trees=cfg.trees_for(task, mode), max_depth=cfg.max_depth,
                       min_samples_leaf=cfg.min_samples_leaf, max_features=cfg.max_features)


def _check_task_model(task: str, mode: str) -> None:
    if task not in TASKS:
        raise ValueError(f"unknown task {task!r}")
    if mode not in MODELS:
        raise ValueError(f"unknown model {mode!r}")


def model_path(cfg: RunConfig, task: str, mode: str) -> Path:
    return _path(cfg, "models", f"{model_name(task, mode)}.json")


@_stage("train")
def stage_train(cfg: RunConfig, task: str, mode: str):
    _check_task_model(task, mode)
    if task == "oeis-vs-random" and mode != "random_forest":
        raise ValueError("the oeis-vs-random task uses the random_forest model")
    data = load_dataset(cfg, task)
    X, Y, _ = data.part("train")
    if X.shape[0] == 0:
        raise ValueError("training split is empty")
    if mode == "baseline":
        model = baseline_fit(Y, data.label_names)
    else:
        pca_k = cfg.pca_k_binary if task == "oeis-vs-random" else cfg.pca_k_keywords
        model = multilabel_fit(X, Y, mode, _hyper(cfg, task, mode), seed=cfg.stage_seed("train"),
                               scale=cfg.scale, pca_k=pca_k, label_names=data.label_names,
                               workers=cfg.workers)
    save_model(model_path(cfg, task, mode), model)
    return model


def predict(model, X, seed: int) -> np.ndarray:
    if isinstance(model, BaselineModel):
        return baseline_predict(model, X.shape[0], seed)
    return multilabel_predict(model, X)


@_stage("evaluate")
def stage_evaluate(cfg: RunConfig, task: str, mode: str) -> Report:
    _check_task_model(task, mode)
    data = load_dataset(cfg, task)
    model = load_model(_require(model_path(cfg, task, mode), "train"))
    X, Y, _ = data.part("test")
    if X.shape[0] == 0:
        raise ValueError("test split is empty")
    pred = predict(model, X, cfg.stage_seed("baseline"))
    name = model_name(task, mode)
    report = make_report(Y, pred, name, f"{task}/test", list(data.label_names))
    write_report(report, _path(cfg, "reports", name))
    return report


# ---------------------------------------------------------------- export

@_stage("export-figs")
def stage_export(cfg: RunConfig) -> list[Path]:
    rows = _oeis_rows(_feature_rows(cfg))
    ids = [r.id for r in rows]
    r_ids, fit = read_ransac(cfg)
    by_id = {r.id: r for r in rows}
    keyword_reports = [read_report(_path(cfg, "reports", f"{m}.json")) for m in MODELS
                       if _path(cfg, "reports", f"{m}.json").exists()]
    figs = _path(cfg, "figs")
    out = export_plot_data(
        figs,
        ids=ids,
        distances=[r.distances for r in rows],
        r_values=[r.features[2] for r in rows],
        reports=keyword_reports,
    )
    out.append(export_ransac(figs, r_ids, [by_id[i].features[2] for i in r_ids],
                             [by_id[i].features[0] for i in r_ids], fit))
    return out


# ---------------------------------------------------------------- whole run

def run_pipeline(cfg: RunConfig) -> dict:
    """Every stage in order. An ``INCOMPLETE`` marker stays behind if any stage fails."""
    out = cfg.out_dir
    out.mkdir(parents=True, exist_ok=True)
    marker = out / INCOMPLETE
    marker.write_text("pipeline did not finish; outputs in this directory may be partial\n", encoding="utf-8")
    cfg.save(out / "config.json")
    stage_ingest(cfg)
    stage_features(cfg)
    fit = stage_ransac(cfg)
    stage_dataset(cfg)
    reports = {}
    for task, mode in (("oeis-vs-random", "random_forest"), ("keywords", "random_forest"),
                       ("keywords", "extra_trees"), ("keywords", "baseline")):
        stage_train(cfg, task, mode)
        reports[model_name(task, mode)] = stage_evaluate(cfg, task, mode)
    stage_export(cfg)
    marker.unlink()
    return {"ransac": fit, "reports": reports}


__all__ = [
    "BINARY_LABELS",
    "INCOMPLETE",
    "MODELS",
    "TASKS",
    "load_dataset",
    "model_name",
    "model_path",
    "predict",
    "ransac_points",
    "read_ransac",
    "run_pipeline",
    "stage_dataset",
    "stage_evaluate",
    "stage_export",
    "stage_features",
    "stage_ingest",
    "stage_ransac",
    "stage_train",
]

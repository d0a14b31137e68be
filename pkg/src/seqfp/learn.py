"""Decision-tree ensembles (random forest, extra trees), a frequency baseline,
and a one-forest-per-label multilabel wrapper.

Trees are flat arrays: node ``i`` is internal when ``feature[i] >= 0`` and
routes a row left iff ``x[feature[i]] <= threshold[i]``. ``value[i]`` holds
the (negative, positive) training counts reaching the node.
"""
from __future__ import annotations

import gzip
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from pathlib import Path

import numpy as np

from ._backend import kernels
from .dataset import PcaModel, ScalerModel, pca_fit, scaler_fit
from .errors import ModelError, ShapeMismatchError
from .oeis import LABELS

MODES = ("random_forest", "extra_trees")
FORMAT = "seqfp-model"
FORMAT_VERSION = 1

# default tree counts per task and mode
DEFAULT_TREES = {"oeis_vs_random": 665, "random_forest": 744, "extra_trees": 1059}


@dataclass(frozen=True)
class ForestHyper:
    n_trees: int = 100
    max_depth: int | None = None
    min_samples_leaf: int = 1
    max_features: int | None = 4  # None: all features
    bootstrap: bool | None = None  # None: mode default
    splitter: str | None = None  # "best" | "random"; None: mode default

    def resolved(self, mode: str) -> "ForestHyper":
        if mode not in MODES:
            raise ValueError(f"unknown mode {mode!r}")
        boot = (mode == "random_forest") if self.bootstrap is None else self.bootstrap
        split = ("best" if mode == "random_forest" else "random") if self.splitter is None else self.splitter
        if split not in ("best", "random"):
            raise ValueError(f"unknown splitter {split!r}")
        return replace(self, bootstrap=boot, splitter=split)


@dataclass
class Tree:
    feature: np.ndarray
    threshold: np.ndarray
    left: np.ndarray
    right: np.ndarray
    value: np.ndarray  # (n_nodes, 2)
    importance: np.ndarray  # unnormalized impurity decrease per feature

    @property
    def n_nodes(self) -> int:
        return len(self.feature)

    def leaf_proba(self) -> np.ndarray:
        tot = self.value.sum(axis=1)
        return self.value[:, 1] / tot

    def apply(self, X: np.ndarray) -> np.ndarray:
        return kernels.apply_tree(self.feature, self.threshold, self.left, self.right, X)

    def predict_proba(self, X: np.ndarray) -> np.ndarray:
        return self.leaf_proba()[self.apply(X)]

    def to_dict(self) -> dict:
        return {
            "feature": self.feature.tolist(),
            "threshold": self.threshold.tolist(),
            "left": self.left.tolist(),
            "right": self.right.tolist(),
            "value": self.value.tolist(),
            "importance": self.importance.tolist(),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Tree":
        return cls(
            np.array(d["feature"], dtype=np.int64),
            np.array(d["threshold"], dtype=np.float64),
            np.array(d["left"], dtype=np.int64),
            np.array(d["right"], dtype=np.int64),
            np.array(d["value"], dtype=np.float64).reshape(-1, 2),
            np.array(d["importance"], dtype=np.float64),
        )


def _resolve_max_features(max_features, n_feat: int) -> int:
    if max_features is None:
        return n_feat
    return max(1, min(int(max_features), n_feat))


def _as_xy(X, y):
    X = np.ascontiguousarray(X, dtype=np.float64)
    y = np.ascontiguousarray(np.asarray(y).astype(np.int64))
    if X.ndim != 2 or X.shape[0] == 0:
        raise ValueError("X must be a non-empty 2-D matrix")
    if y.shape != (X.shape[0],):
        raise ShapeMismatchError("y length must match X rows")
    if np.any((y != 0) & (y != 1)):
        raise ValueError("y must be binary")
    return X, y


def tree_fit(X, y, hyper: ForestHyper, rng: np.random.Generator,
             splitter: str = "best", samples=None) -> Tree:
    """Grow one tree depth-first; ``samples`` (possibly repeated) selects the training rows."""
    X, y = _as_xy(X, y)
    n_feat = X.shape[1]
    max_features = _resolve_max_features(hyper.max_features, n_feat)
    msl = int(hyper.min_samples_leaf)
    if samples is None:
        samples = np.arange(X.shape[0], dtype=np.int64)
    else:
        samples = np.ascontiguousarray(samples, dtype=np.int64)

    feature, threshold, left, right, value = [], [], [], [], []
    importance = np.zeros(n_feat)

    def new_node(count_neg, count_pos):
        feature.append(-1)
        threshold.append(0.0)
        left.append(-1)
        right.append(-1)
        value.append((count_neg, count_pos))
        return len(feature) - 1

    pos = float(y[samples].sum())
    stack = [(new_node(len(samples) - pos, pos), samples, 0)]
    while stack:
        node, idx, depth = stack.pop()
        n = len(idx)
        p = value[node][1]
        if (p == 0 or p == n or n < 2 * msl
                or (hyper.max_depth is not None and depth >= hyper.max_depth)):
            continue
        order = rng.permutation(n_feat).astype(np.int64)
        draws = rng.random(n_feat) if splitter == "random" else None
        f, t, cost = kernels.best_split(X, y, idx, order, draws, max_features, msl)
        if f < 0:
            continue
        parent = 2.0 * p * (n - p) / n
        importance[f] += max(parent - cost, 0.0)
        go_left = X[idx, f] <= t
        li, ri = idx[go_left], idx[~go_left]
        lp = float(y[li].sum())
        rp = p - lp
        feature[node] = int(f)
        threshold[node] = float(t)
        left[node] = new_node(len(li) - lp, lp)
        right[node] = new_node(len(ri) - rp, rp)
        stack.append((right[node], ri, depth + 1))
        stack.append((left[node], li, depth + 1))

    return Tree(
        np.array(feature, dtype=np.int64),
        np.array(threshold, dtype=np.float64),
        np.array(left, dtype=np.int64),
        np.array(right, dtype=np.int64),
        np.array(value, dtype=np.float64).reshape(-1, 2),
        importance,
    )


@dataclass
class ForestModel:
    trees: list[Tree]
    mode: str
    hyper: ForestHyper
    seed: int
    n_features: int
    importance: np.ndarray = field(default=None)

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "hyper": asdict(self.hyper),
            "seed": self.seed,
            "n_features": self.n_features,
            "importance": self.importance.tolist(),
            "trees": [t.to_dict() for t in self.trees],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ForestModel":
        return cls(
            trees=[Tree.from_dict(t) for t in d["trees"]],
            mode=d["mode"],
            hyper=ForestHyper(**d["hyper"]),
            seed=d["seed"],
            n_features=int(d["n_features"]),
            importance=np.array(d["importance"], dtype=np.float64),
        )


def _fit_one(args) -> Tree:
    X, y, hyper, seed_seq = args
    rng = np.random.default_rng(seed_seq)
    samples = rng.integers(0, X.shape[0], X.shape[0]) if hyper.bootstrap else None
    return tree_fit(X, y, hyper, rng, hyper.splitter, samples)


def _seed_sequence(seed) -> np.random.SeedSequence:
    if isinstance(seed, np.random.SeedSequence):
        return seed
    if isinstance(seed, (tuple, list)):
        return np.random.SeedSequence([int(s) for s in seed])
    return np.random.SeedSequence(int(seed))


def forest_fit(X, y, mode: str = "random_forest", hyper: ForestHyper | None = None,
               seed=0, workers: int = 1) -> ForestModel:
    """Fit ``hyper.n_trees`` trees, each from its own stream spawned off ``seed``."""
    X, y = _as_xy(X, y)
    hyper = (hyper or ForestHyper()).resolved(mode)
    streams = _seed_sequence(seed).spawn(hyper.n_trees)
    jobs = [(X, y, hyper, s) for s in streams]
    if workers > 1 and hyper.n_trees > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            trees = list(pool.map(_fit_one, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        trees = [_fit_one(j) for j in jobs]
    return ForestModel(trees, mode, hyper, _seed_repr(seed), X.shape[1], _forest_importance(trees, X.shape[1]))


def _seed_repr(seed):
    if isinstance(seed, np.random.SeedSequence):
        return [int(e) for e in np.atleast_1d(seed.entropy)] + [int(k) for k in seed.spawn_key]
    if isinstance(seed, (tuple, list)):
        return [int(s) for s in seed]
    return int(seed)


def _forest_importance(trees: list[Tree], n_feat: int) -> np.ndarray:
    acc = np.zeros(n_feat)
    for t in trees:
        tot = t.importance.sum()
        if tot > 0:
            acc += t.importance / tot
    tot = acc.sum()
    return acc / tot if tot > 0 else acc


def forest_predict_proba(model: ForestModel, X) -> np.ndarray:
    """Mean over trees of the leaf positive-class frequency."""
    if not model.trees:
        raise ModelError("forest has no trees")
    X = np.ascontiguousarray(X, dtype=np.float64)
    if X.ndim != 2 or X.shape[1] != model.n_features:
        raise ShapeMismatchError(f"expected {model.n_features} columns, got {X.shape[-1]}")
    acc = np.zeros(X.shape[0])
    for t in model.trees:
        acc += t.predict_proba(X)
    return acc / len(model.trees)


# ---------------------------------------------------------------- multilabel

@dataclass
class Preprocess:
    scaler: ScalerModel | None = None
    pca: PcaModel | None = None

    @classmethod
    def fit(cls, X, scale: bool = True, pca_k: int | None = None) -> "Preprocess":
        pre = cls()
        Z = np.asarray(X, dtype=np.float64)
        if scale:
            pre.scaler = scaler_fit(Z)
            Z = pre.scaler.apply(Z)
        if pca_k:
            pre.pca = pca_fit(Z, pca_k)
        return pre

    def apply(self, X) -> np.ndarray:
        Z = np.asarray(X, dtype=np.float64)
        if self.scaler is not None:
            Z = self.scaler.apply(Z)
        if self.pca is not None:
            Z = self.pca.apply(Z)
        return Z

    def to_dict(self) -> dict:
        return {"scaler": self.scaler.to_dict() if self.scaler else None,
                "pca": self.pca.to_dict() if self.pca else None}

    @classmethod
    def from_dict(cls, d: dict) -> "Preprocess":
        return cls(ScalerModel.from_dict(d["scaler"]) if d.get("scaler") else None,
                   PcaModel.from_dict(d["pca"]) if d.get("pca") else None)


@dataclass
class MultilabelModel:
    forests: list[ForestModel]
    label_names: tuple[str, ...]
    thresholds: np.ndarray
    preprocess: Preprocess
    mode: str
    seed: int
    n_features: int

    def __post_init__(self):
        self.thresholds = np.asarray(self.thresholds, dtype=np.float64)
        if len(self.forests) != len(self.label_names) or self.thresholds.shape != (len(self.label_names),):
            raise ModelError("one forest and one threshold per label required")
        if np.any((self.thresholds <= 0) | (self.thresholds >= 1)):
            raise ModelError("thresholds must lie in (0, 1)")

    @property
    def importance(self) -> np.ndarray:
        return np.mean([f.importance for f in self.forests], axis=0)


def multilabel_fit(X, Y, mode: str = "extra_trees", hyper: ForestHyper | None = None, seed: int = 0,
                   scale: bool = True, pca_k: int | None = None, label_names=LABELS,
                   thresholds=None, workers: int = 1) -> MultilabelModel:
    """Binary relevance: one forest per label column, on shared preprocessing."""
    X = np.asarray(X, dtype=np.float64)
    Y = np.asarray(Y).astype(bool)
    if Y.ndim == 1:
        Y = Y[:, None]
    if Y.shape != (X.shape[0], len(label_names)):
        raise ShapeMismatchError(f"Y must have shape ({X.shape[0]}, {len(label_names)})")
    pre = Preprocess.fit(X, scale, pca_k)
    Z = pre.apply(X)
    forests = [forest_fit(Z, Y[:, j], mode, hyper, seed=(seed, j), workers=workers)
               for j in range(len(label_names))]
    th = np.full(len(label_names), 0.5) if thresholds is None else np.asarray(thresholds, dtype=np.float64)
    return MultilabelModel(forests, tuple(label_names), th, pre, mode, seed, X.shape[1])


def multilabel_predict_proba(model: MultilabelModel, X) -> np.ndarray:
    X = np.asarray(X, dtype=np.float64)
    if X.ndim != 2 or X.shape[1] != model.n_features:
        raise ShapeMismatchError(f"expected {model.n_features} columns")
    Z = model.preprocess.apply(X)
    return np.column_stack([forest_predict_proba(f, Z) for f in model.forests])


def multilabel_predict(model: MultilabelModel, X) -> np.ndarray:
    return multilabel_predict_proba(model, X) >= model.thresholds


# ---------------------------------------------------------------- baseline

@dataclass
class BaselineModel:
    frequency: np.ndarray
    label_names: tuple[str, ...] = LABELS


def baseline_fit(Y_train, label_names=LABELS) -> BaselineModel:
    Y = np.asarray(Y_train).astype(bool)
    if Y.ndim == 1:
        Y = Y[:, None]
    freq = Y.mean(axis=0) if Y.shape[0] else np.zeros(Y.shape[1])
    return BaselineModel(freq.astype(np.float64), tuple(label_names))


def baseline_predict(model: BaselineModel, rows: int, seed: int = 0) -> np.ndarray:
    """Label j drawn true with probability ``frequency[j]``, independently per cell."""
    rng = np.random.default_rng(seed)
    return rng.random((rows, len(model.frequency))) < model.frequency


# ---------------------------------------------------------------- persistence

def model_to_dict(model) -> dict:
    if isinstance(model, MultilabelModel):
        body = {
            "kind": "multilabel",
            "mode": model.mode,
            "seed": model.seed,
            "n_features": model.n_features,
            "labels": list(model.label_names),
            "thresholds": model.thresholds.tolist(),
            "preprocess": model.preprocess.to_dict(),
            "forests": [f.to_dict() for f in model.forests],
        }
    elif isinstance(model, BaselineModel):
        body = {"kind": "baseline", "labels": list(model.label_names),
                "frequency": model.frequency.tolist()}
    else:
        raise ModelError(f"cannot serialize {type(model).__name__}")
    return {"format": FORMAT, "version": FORMAT_VERSION, **body}


def model_from_dict(d: dict):
    if d.get("format") != FORMAT or d.get("version") != FORMAT_VERSION:
        raise ModelError("not a seqfp model file (or unsupported version)")
    if d["kind"] == "baseline":
        return BaselineModel(np.array(d["frequency"], dtype=np.float64), tuple(d["labels"]))
    if d["kind"] == "multilabel":
        return MultilabelModel(
            forests=[ForestModel.from_dict(f) for f in d["forests"]],
            label_names=tuple(d["labels"]),
            thresholds=np.array(d["thresholds"], dtype=np.float64),
            preprocess=Preprocess.from_dict(d["preprocess"]),
            mode=d["mode"],
            seed=d["seed"],
            n_features=int(d["n_features"]),
        )
    raise ModelError(f"unknown model kind {d['kind']!r}")


def save_model(path, model) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    text = json.dumps(model_to_dict(model), sort_keys=True, separators=(",", ":"))
    if path.suffix == ".gz":
        # empty name and mtime=0 keep the bytes reproducible
        with open(path, "wb") as raw, gzip.GzipFile(filename="", fileobj=raw, mode="wb", mtime=0) as gz:
            gz.write(text.encode("utf-8"))
    else:
        path.write_text(text, encoding="utf-8")


def load_model(path):
    path = Path(path)
    if path.suffix == ".gz":
        with gzip.open(path, "rt", encoding="utf-8") as fh:
            d = json.load(fh)
    else:
        d = json.loads(path.read_text(encoding="utf-8"))
    return model_from_dict(d)


def default_trees(mode: str, task: str) -> int:
    if task == "oeis-vs-random":
        return DEFAULT_TREES["oeis_vs_random"]
    return DEFAULT_TREES[mode]


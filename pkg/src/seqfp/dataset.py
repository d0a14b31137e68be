"""Random negatives, splits, standard scaling and PCA, plus dataset tables."""
from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import ParseError, PcaError, ShapeMismatchError
from .oeis import LABELS, Sequence

SPLIT_TAGS = ("train", "validation", "test")


def generate_random_sequences(count: int, length: int = 2000, lo: int = 0, hi: int = 10**6,
                              seed: int = 0, prefix: str = "R") -> list[Sequence]:
    """``count`` sequences of independent uniform integers in [lo, hi)."""
    if length < 1:
        raise ValueError("length must be >= 1")
    if not lo < hi:
        raise ValueError("need lo < hi")
    rng = np.random.default_rng(seed)
    out = []
    for k in range(count):
        terms = rng.integers(lo, hi, size=length, dtype=np.int64).tolist()
        out.append(Sequence(f"{prefix}{k + 1:06d}", terms, "synthetic"))
    return out


def split_sizes(rows: int, fractions) -> list[int]:
    """Floor each share, then hand the remainder to the largest fractional parts."""
    fr = [float(f) for f in fractions]
    if len(fr) != 3 or any(f < 0 for f in fr) or abs(sum(fr) - 1.0) > 1e-9:
        raise ValueError("fractions must be three non-negative numbers summing to 1")
    exact = [rows * f for f in fr]
    sizes = [math.floor(x + 1e-9) for x in exact]
    rem = rows - sum(sizes)
    order = sorted(range(3), key=lambda i: (-(exact[i] - sizes[i]), i))
    for i in order[:max(rem, 0)]:
        sizes[i] += 1
    return sizes


def split(rows: int, fractions=(0.8, 0.0, 0.2), seed: int = 0) -> list[str]:
    sizes = split_sizes(rows, fractions)
    perm = np.random.default_rng(seed).permutation(rows)
    tags = [""] * rows
    start = 0
    for tag, size in zip(SPLIT_TAGS, sizes):
        for i in perm[start:start + size]:
            tags[int(i)] = tag
        start += size
    return tags


@dataclass
class ScalerModel:
    mean: np.ndarray
    std: np.ndarray  # population std; 0 marks a constant column

    def apply(self, X) -> np.ndarray:
        X = np.asarray(X, dtype=np.float64)
        if X.shape[-1] != self.mean.shape[0]:
            raise ShapeMismatchError("column count differs from the fitted scaler")
        safe = np.where(self.std > 0, self.std, 1.0)
        return np.where(self.std > 0, (X - self.mean) / safe, 0.0)

    def inverse(self, Z) -> np.ndarray:
        return np.asarray(Z) * self.std + self.mean

    def to_dict(self) -> dict:
        return {"mean": self.mean.tolist(), "std": self.std.tolist()}

    @classmethod
    def from_dict(cls, d: dict) -> "ScalerModel":
        return cls(np.array(d["mean"], dtype=np.float64), np.array(d["std"], dtype=np.float64))


def scaler_fit(X_train) -> ScalerModel:
    X = np.asarray(X_train, dtype=np.float64)
    if X.ndim != 2 or X.shape[0] == 0:
        raise ValueError("scaler needs a non-empty 2-D matrix")
    return ScalerModel(X.mean(axis=0), X.std(axis=0))


def scaler_apply(model: ScalerModel, X) -> np.ndarray:
    return model.apply(X)


@dataclass
class PcaModel:
    mean: np.ndarray
    components: np.ndarray  # (k, n_features), rows orthonormal
    explained_variance: np.ndarray  # all eigenvalues, descending
    k: int

    def apply(self, X) -> np.ndarray:
        X = np.asarray(X, dtype=np.float64)
        if X.shape[-1] != self.mean.shape[0]:
            raise ShapeMismatchError("column count differs from the fitted PCA")
        return (X - self.mean) @ self.components[: self.k].T

    def reconstruct(self, Z) -> np.ndarray:
        return np.asarray(Z) @ self.components[: self.k] + self.mean

    def to_dict(self) -> dict:
        return {"mean": self.mean.tolist(), "components": self.components.tolist(),
                "explained_variance": self.explained_variance.tolist(), "k": self.k}

    @classmethod
    def from_dict(cls, d: dict) -> "PcaModel":
        return cls(np.array(d["mean"]), np.array(d["components"]),
                   np.array(d["explained_variance"]), int(d["k"]))


def pca_fit(X, k: int | None = None) -> PcaModel:
    """Eigenvectors of the sample covariance, by descending eigenvalue.

    Each component's largest-magnitude entry is made positive so fits are
    reproducible.
    """
    X = np.asarray(X, dtype=np.float64)
    if X.ndim != 2 or X.shape[0] < 2:
        raise PcaError("PCA needs at least two rows")
    n_feat = X.shape[1]
    k = n_feat if k is None else int(k)
    if not 1 <= k <= n_feat:
        raise PcaError(f"k must be in 1..{n_feat}")
    if not np.all(np.isfinite(X)):
        raise PcaError("non-finite values in PCA input")
    mean = X.mean(axis=0)
    cov = np.cov(X - mean, rowvar=False, ddof=1).reshape(n_feat, n_feat)
    try:
        vals, vecs = np.linalg.eigh(cov)
    except np.linalg.LinAlgError as exc:
        raise PcaError(f"eigendecomposition failed: {exc}") from exc
    order = np.argsort(vals, kind="stable")[::-1]
    vals = np.clip(vals[order], 0.0, None)
    comps = vecs[:, order].T.copy()
    flip = np.sign(comps[np.arange(n_feat), np.argmax(np.abs(comps), axis=1)])
    comps *= np.where(flip == 0, 1.0, flip)[:, None]
    return PcaModel(mean, comps, vals, k)


def pca_apply(model: PcaModel, X) -> np.ndarray:
    return model.apply(X)


# ---------------------------------------------------------------- tables

def write_label_table(path, ids, Y, columns=LABELS) -> None:
    Y = np.asarray(Y)
    if Y.shape != (len(ids), len(columns)):
        raise ShapeMismatchError("label matrix shape does not match ids/columns")
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="\n") as fh:
        fh.write("\t".join(("id", *columns)) + "\n")
        for sid, row in zip(ids, Y):
            fh.write("\t".join([sid, *("1" if v else "0" for v in row)]) + "\n")


def read_label_table(path) -> tuple[list[str], np.ndarray, tuple[str, ...]]:
    with Path(path).open(encoding="utf-8") as fh:
        header = fh.readline().rstrip("\n").split("\t")
        if not header or header[0] != "id":
            raise ParseError(f"{path}: label table must start with an id column")
        ids, rows = [], []
        for no, line in enumerate(fh, 2):
            parts = line.rstrip("\n").split("\t")
            if len(parts) != len(header) or any(p not in ("0", "1") for p in parts[1:]):
                raise ParseError("bad label row", no, line)
            ids.append(parts[0])
            rows.append([p == "1" for p in parts[1:]])
    Y = np.array(rows, dtype=bool).reshape(len(ids), len(header) - 1)
    return ids, Y, tuple(header[1:])


def write_split_table(path, ids, tags) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="\n") as fh:
        fh.write("id\tsplit\n")
        for sid, tag in zip(ids, tags):
            fh.write(f"{sid}\t{tag}\n")


def read_split_table(path) -> dict[str, str]:
    out = {}
    with Path(path).open(encoding="utf-8") as fh:
        fh.readline()
        for no, line in enumerate(fh, 2):
            parts = line.rstrip("\n").split("\t")
            if len(parts) != 2 or parts[1] not in SPLIT_TAGS:
                raise ParseError("bad split row", no, line)
            out[parts[0]] = parts[1]
    return out


@dataclass
class Dataset:
    ids: list[str]
    X: np.ndarray
    Y: np.ndarray
    split_tag: list[str]
    label_names: tuple[str, ...] = LABELS

    def __post_init__(self):
        n = len(self.ids)
        if self.X.shape[0] != n or self.Y.shape[0] != n or len(self.split_tag) != n:
            raise ShapeMismatchError("ids, X, Y and split tags must have equal row counts")
        if not np.all(np.isfinite(self.X)):
            raise ValueError("feature matrix has non-finite entries")

    def part(self, tag: str) -> tuple[np.ndarray, np.ndarray, list[str]]:
        mask = np.array([t == tag for t in self.split_tag], dtype=bool)
        return self.X[mask], self.Y[mask], [i for i, m in zip(self.ids, mask) if m]


def join_dataset(feature_rows, label_ids, Y, split_map, label_names=LABELS) -> Dataset:
    """Join feature rows, labels and split tags by id (feature-row order kept)."""
    lab = {sid: row for sid, row in zip(label_ids, np.asarray(Y))}
    ids, X, Ys, tags = [], [], [], []
    for row in feature_rows:
        if row.id in lab and row.id in split_map:
            ids.append(row.id)
            X.append(row.features)
            Ys.append(lab[row.id])
            tags.append(split_map[row.id])
    n_lab = len(label_names)
    return Dataset(ids, np.array(X, dtype=np.float64).reshape(len(ids), -1),
                   np.array(Ys, dtype=bool).reshape(len(ids), n_lab), tags, tuple(label_names))

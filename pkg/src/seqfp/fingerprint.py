"""The 14-feature fingerprint and the four Benford distances."""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence as Seq

import numpy as np

from .errors import DegenerateFitError, ParseError, UndefinedDistanceError
from .numerics import ols_fit, running_moments
from .oeis import Sequence

FEATURE_NAMES = ("s", "intercept", "r", "p_z") + tuple(f"b_d{i}" for i in range(10))
DISTANCE_NAMES = ("kl", "ks", "wd", "tv")
N_FEATURES = len(FEATURE_NAMES)

# WD(delta_9, b): the largest sorted-value Wasserstein distance any digit distribution can reach
WASSERSTEIN_MAX = 2.0 * (1.0 - math.log10(2.0)) / 9.0


@dataclass(frozen=True)
class DigitDistribution:
    b_d: np.ndarray  # 10 proportions, index = leading digit, 0 for zero terms
    p_z: float

    def nonzero_digits(self) -> np.ndarray:
        """b_d(1..9) renormalized over the nonzero terms."""
        mass = self.b_d[1:]
        total = float(mass.sum())
        if total <= 0.0:
            raise UndefinedDistanceError("sequence has no nonzero terms")
        return mass / total


@dataclass(frozen=True)
class BenfordReference:
    b: np.ndarray  # b[i-1] = log10((i+1)/i), i = 1..9


_BENFORD = BenfordReference(np.log10(np.arange(2, 11) / np.arange(1, 10)))


def benford_reference() -> BenfordReference:
    return _BENFORD


def leading_digit(n: int) -> int:
    if n == 0:
        return 0
    return ord(str(abs(n))[0]) - 48


def digit_distribution(terms: Seq[int]) -> DigitDistribution:
    n = len(terms)
    if n == 0:
        raise ValueError("digit_distribution needs at least one term")
    counts = np.zeros(10, dtype=np.int64)
    positive = 0
    for t in terms:
        counts[leading_digit(t)] += 1
        if t > 0:
            positive += 1
    return DigitDistribution(counts / n, positive / n)


def _check_pair(p, q: BenfordReference) -> tuple[np.ndarray, np.ndarray]:
    p = np.asarray(p, dtype=np.float64)
    if p.shape != (9,):
        raise ValueError("expected 9 digit proportions")
    if not p.sum() > 0.0:
        raise UndefinedDistanceError("digit proportions sum to zero")
    return p, q.b


def kl_divergence(p, q: BenfordReference | None = None) -> float:
    """sum p*ln(p/q) with 0*ln 0 = 0."""
    p, b = _check_pair(p, q or _BENFORD)
    nz = p > 0
    return float(max(0.0, np.sum(p[nz] * np.log(p[nz] / b[nz]))))


def ks_statistic(p, q: BenfordReference | None = None) -> float:
    p, b = _check_pair(p, q or _BENFORD)
    return float(np.max(np.abs(np.cumsum(p) - np.cumsum(b))))


def wasserstein_sorted(p, q: BenfordReference | None = None) -> float:
    """1-D transport between the two multisets of probability values."""
    p, b = _check_pair(p, q or _BENFORD)
    return float(np.mean(np.abs(np.sort(p) - np.sort(b))))


def total_variation(d: DigitDistribution, q: BenfordReference | None = None) -> float:
    b = (q or _BENFORD).b
    ref = np.concatenate(([0.0], b))
    return float(0.5 * np.sum(np.abs(d.b_d - ref)))


def distances(d: DigitDistribution) -> tuple[float, float, float, float]:
    """(kl, ks, wd, tv); the first three are NaN when the sequence is all zeros."""
    tv = total_variation(d)
    try:
        p = d.nonzero_digits()
    except UndefinedDistanceError:
        return math.nan, math.nan, math.nan, tv
    return kl_divergence(p), ks_statistic(p), wasserstein_sorted(p), tv


@dataclass(frozen=True)
class TaylorFit:
    s: float
    intercept: float
    r: float
    n_points: int
    degenerate: bool


def taylor_points(terms: Seq[int]) -> tuple[np.ndarray, np.ndarray]:
    """(ln mu(n), ln v(n)) for n >= 2 where both are positive."""
    mom = running_moments(terms)
    lx = mom.log_mu()[1:]
    ly = mom.log_var()[1:]
    keep = np.isfinite(lx) & np.isfinite(ly)
    return lx[keep], ly[keep]


def taylor_features(terms: Seq[int]) -> TaylorFit:
    xs, ys = taylor_points(terms)
    if len(xs) >= 2:
        try:
            fit = ols_fit(xs, ys)
        except DegenerateFitError:
            pass
        else:
            return TaylorFit(fit.slope, fit.intercept, fit.r, fit.n_points, False)
    return TaylorFit(0.0, 0.0, 0.0, len(xs), True)


def feature_vector(seq: Sequence | Seq[int]) -> np.ndarray:
    """[s, intercept, r, p_z, b_d(0..9)] in FEATURE_NAMES order."""
    terms = seq.terms if isinstance(seq, Sequence) else list(seq)
    tf = taylor_features(terms)
    dd = digit_distribution(terms)
    return np.concatenate(([tf.s, tf.intercept, tf.r, dd.p_z], dd.b_d))


@dataclass
class FeatureRow:
    id: str
    features: np.ndarray
    distances: tuple[float, float, float, float]


def fingerprint(seq: Sequence) -> FeatureRow:
    dd = digit_distribution(seq.terms)
    tf = taylor_features(seq.terms)
    feats = np.concatenate(([tf.s, tf.intercept, tf.r, dd.p_z], dd.b_d))
    return FeatureRow(seq.id, feats, distances(dd))


def fingerprint_all(sequences: Iterable[Sequence], workers: int = 1) -> list[FeatureRow]:
    """Fingerprints in input order regardless of worker count."""
    seqs = list(sequences)
    if workers <= 1 or len(seqs) < 2:
        return [fingerprint(s) for s in seqs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fingerprint, seqs, chunksize=max(1, len(seqs) // (4 * workers))))


# ---------------------------------------------------------------- feature table

def fmt_real(x: float) -> str:
    return format(float(x), ".17g")


TABLE_HEADER = ("id",) + FEATURE_NAMES + DISTANCE_NAMES


def write_feature_table(path, rows: Iterable[FeatureRow]) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="\n") as fh:
        fh.write("\t".join(TABLE_HEADER) + "\n")
        for row in rows:
            vals = [fmt_real(v) for v in row.features] + [fmt_real(v) for v in row.distances]
            fh.write("\t".join([row.id, *vals]) + "\n")


def read_feature_table(path) -> list[FeatureRow]:
    rows = []
    with Path(path).open(encoding="utf-8") as fh:
        header = fh.readline().rstrip("\n").split("\t")
        if tuple(header) != TABLE_HEADER:
            raise ParseError(f"{path}: unexpected feature table header")
        for no, line in enumerate(fh, 2):
            parts = line.rstrip("\n").split("\t")
            if len(parts) != len(TABLE_HEADER):
                raise ParseError(f"expected {len(TABLE_HEADER)} columns", no, line)
            try:
                vals = [float(v) for v in parts[1:]]
            except ValueError as exc:
                raise ParseError(str(exc), no, line) from exc
            rows.append(FeatureRow(parts[0], np.array(vals[:N_FEATURES]), tuple(vals[N_FEATURES:])))
    return rows

"""One test per acceptance criterion, each at its stated tolerance.

Every test reports a PASS/FAIL line (also repeated in the terminal summary).
"""
from __future__ import annotations

import itertools
import time
from fractions import Fraction

import numpy as np
import pytest

from oracles import confusion, exact_moments, exact_moments_fast, fibonacci
from seqfp.config import RunConfig
from seqfp.dataset import generate_random_sequences, split
from seqfp.evaluate import LabelMetrics, make_report, per_label_metrics, weighted_average
from seqfp.fingerprint import (
    benford_reference,
    digit_distribution,
    distances,
    fingerprint_all,
    kl_divergence,
    wasserstein_sorted,
)
from seqfp.learn import ForestHyper, multilabel_fit, multilabel_predict
from seqfp.numerics import WideReal, ols_fit, ransac_fit, running_moments
from seqfp.pipeline import ransac_points, run_pipeline

B = benford_reference().b


def wide_fraction(w: WideReal) -> Fraction:
    f = Fraction(w.mantissa)
    return f * 2**w.exponent if w.exponent >= 0 else f / 2 ** (-w.exponent)


def rel(got: Fraction, want: Fraction) -> Fraction:
    if want == 0:
        return abs(got)
    return abs(got - want) / abs(want)


@pytest.fixture(scope="module")
def default_runs(tmp_path_factory):
    """Two full runs with the default configuration (default tree counts)."""
    base = tmp_path_factory.mktemp("runs")
    results = []
    for name in ("a", "b"):
        cfg = RunConfig(out=str(base / name))
        results.append((cfg, run_pipeline(cfg)))
    return results


def test_criterion_1_distance_anchors(verdict):
    uniform = kl_divergence(np.full(9, 1 / 9))
    d1 = np.zeros(9)
    d1[0] = 1
    d9 = np.zeros(9)
    d9[8] = 1
    kl1 = kl_divergence(d1)
    wd9 = wasserstein_sorted(d9)
    ok = abs(uniform - 0.191) <= 0.001 and abs(kl1 - 1.2005) <= 0.001 and abs(wd9 - 0.1553) <= 0.0005
    verdict(1, ok, f"KL(uniform)={uniform:.5f} KL(delta1)={kl1:.5f} WD(delta9)={wd9:.5f}")


def test_criterion_2_ols_identity(verdict):
    rng = np.random.default_rng(2)
    t0 = time.perf_counter()
    worst = 0.0
    for _ in range(1000):
        n = int(rng.integers(3, 200))
        x = rng.normal(size=n) * rng.uniform(0.01, 100) + rng.normal() * 10
        y = rng.uniform(-5, 5) * x + rng.normal(size=n) * rng.uniform(0.01, 10)
        f = ols_fit(x, y)
        worst = max(worst, abs(f.slope - f.r * f.sigma_y / f.sigma_x))
    dt = time.perf_counter() - t0
    verdict(2, worst <= 1e-9 and dt < 1.0, f"max |s - r*sy/sx| = {worst:.2e} over 1000 fits in {dt:.2f}s")


def test_criterion_3_ransac(verdict, fixture_rows):
    worst, exact = 0.0, True
    for seed in range(20):
        rng = np.random.default_rng(1000 + seed)
        n_in, n_out = 60, 40
        x = rng.uniform(-1, 1, n_in)
        xo = rng.uniform(-1, 1, n_out)
        off = rng.uniform(0.6, 2.0, n_out) * rng.choice([-1, 1], n_out)
        pts = np.vstack([np.c_[x, 2 * x], np.c_[xo, 2 * xo + off]])
        truth = np.r_[np.ones(n_in, bool), np.zeros(n_out, bool)]
        perm = rng.permutation(len(pts))
        fit = ransac_fit(pts[perm], threshold=0.05, iterations=2000, seed=seed)
        worst = max(worst, abs(fit.slope - 2.0))
        exact &= bool(np.array_equal(fit.inlier_mask, truth[perm]))
    t0 = time.perf_counter()
    n_oeis = len(fixture_rows)
    _, pts = ransac_points(fixture_rows)
    corpus_fit = ransac_fit(pts, 0.05, 2000, RunConfig().stage_seed("ransac"))
    dt = time.perf_counter() - t0
    ok = worst <= 1e-6 and exact and 1.8 <= corpus_fit.slope <= 2.2 and n_oeis >= 200 and dt < 10
    verdict(3, ok, f"synthetic max |s-2|={worst:.1e}, exact inliers={exact}; "
                   f"fixture ({n_oeis} seqs) slope={corpus_fit.slope:.4f} in {dt:.2f}s")


def test_criterion_4_running_moments(verdict):
    rng = np.random.default_rng(4)
    t0 = time.perf_counter()
    worst_small = Fraction(0)
    for _ in range(100):
        n = int(rng.integers(1, 51))
        terms = [int(v) for v in rng.integers(-100, 101, n)]
        m = running_moments(terms)
        mus, vs = exact_moments(terms)
        for got, want in zip(m.mu + m.var, mus + vs):
            worst_small = max(worst_small, rel(wide_fraction(got), want))
    terms = [2**k for k in range(1000)]
    m = running_moments(terms)
    mus, vs = exact_moments_fast(terms)
    worst_big = max(rel(wide_fraction(g), w) for g, w in zip(m.mu + m.var, mus + vs))
    dt = time.perf_counter() - t0
    ok = worst_small <= Fraction(1, 10**10) and worst_big <= Fraction(1, 10**9) and dt < 10
    verdict(4, ok, f"small-integer max rel err {float(worst_small):.1e}, "
                   f"powers of two max rel err {float(worst_big):.1e} in {dt:.2f}s")


def test_criterion_5_oeis_vs_random(verdict, fixture_rows):
    t0 = time.perf_counter()
    randoms = generate_random_sequences(200, seed=5)
    rrows = fingerprint_all(randoms)
    X = np.array([r.features for r in fixture_rows + rrows])
    y = np.r_[np.ones(len(fixture_rows), bool), np.zeros(len(rrows), bool)]
    tags = np.array(split(len(y), (0.8, 0.0, 0.2), seed=5))
    tr, te = tags == "train", tags == "test"
    model = multilabel_fit(X[tr], y[tr, None], "random_forest", ForestHyper(n_trees=100), seed=5,
                           pca_k=14, label_names=("oeis",))
    rep = make_report(y[te, None], multilabel_predict(model, X[te]), "rf", "binary", ["oeis"])
    f1 = rep.labels[0].f1
    dt = time.perf_counter() - t0
    ok = len(fixture_rows) >= 200 and f1 >= 0.95 and dt < 120
    verdict(5, ok, f"{len(fixture_rows)} OEIS + 200 random, test F1={f1:.4f} "
                   f"(accuracy {rep.subset_accuracy:.4f}) in {dt:.1f}s")


def test_criterion_6_keyword_ordering(verdict, default_runs):
    reports = default_runs[0][1]["reports"]
    et, rf, base = (reports[k].weighted_f1 for k in ("extra_trees", "random_forest", "baseline"))
    verdict(6, et > base and rf > base,
            f"weighted F1 extra_trees={et:.4f} random_forest={rf:.4f} baseline={base:.4f}")


def _confusion_tuples(rows: int):
    return [(tp, fp, fn, rows - tp - fp - fn)
            for tp in range(rows + 1) for fp in range(rows + 1 - tp) for fn in range(rows + 1 - tp - fp)]


def _weighted_oracle(tuples):
    total = sum(tp + fn for tp, fp, fn, tn in tuples)
    acc = [Fraction(0)] * 3
    for tp, fp, fn, tn in tuples:
        p = Fraction(tp, tp + fp) if tp + fp else Fraction(0)
        r = Fraction(tp, tp + fn) if tp + fn else Fraction(0)
        f = 2 * p * r / (p + r) if p + r else Fraction(0)
        for k, v in enumerate((p, r, f)):
            acc[k] += (tp + fn) * v
    return [a / total for a in acc]


def test_criterion_7_metric_oracle(verdict):
    mismatches = 0
    # per-label counts: every (truth, prediction) column pair with up to 4 rows,
    # laid side by side as label columns of one matrix
    for rows in range(1, 5):
        cols = list(itertools.product(itertools.product((0, 1), repeat=rows), repeat=2))
        T = np.array([t for t, _ in cols], dtype=bool).T
        P = np.array([p for _, p in cols], dtype=bool).T
        for m, (t, p) in zip(per_label_metrics(T, P), cols):
            mismatches += (m.tp, m.fp, m.fn, m.tn) != confusion(t, p)
    # weighted averages: every triple of per-label confusion outcomes up to 4 rows x 3 labels
    # (the weighted scores depend on a matrix only through these counts)
    worst = 0.0
    for rows in range(1, 5):
        for labels in range(1, 4):
            for combo in itertools.product(_confusion_tuples(rows), repeat=labels):
                if sum(tp + fn for tp, fp, fn, tn in combo) == 0:
                    continue
                got = weighted_average([LabelMetrics(str(j), *c) for j, c in enumerate(combo)])
                want = _weighted_oracle(combo)
                worst = max(worst, *(abs(float(g) - float(w)) for g, w in zip(got, want)))
    # random 50 x 8
    rng = np.random.default_rng(7)
    for _ in range(1000):
        T = rng.random((50, 8)) < rng.random(8)
        P = rng.random((50, 8)) < rng.random(8)
        ms = per_label_metrics(T, P)
        counts = [confusion(T[:, j], P[:, j]) for j in range(8)]
        mismatches += sum((m.tp, m.fp, m.fn, m.tn) != c for m, c in zip(ms, counts))
        if any(c[0] + c[2] for c in counts):
            got = weighted_average(ms)
            want = _weighted_oracle(counts)
            worst = max(worst, *(abs(float(g) - float(w)) for g, w in zip(got, want)))
    # zero-when-undefined: a label never predicted and never true
    m = per_label_metrics(np.zeros((3, 1)), np.zeros((3, 1)))[0]
    zero_ok = (m.precision, m.recall, m.f1) == (0.0, 0.0, 0.0)
    ok = mismatches == 0 and worst <= 1e-15 and zero_ok
    verdict(7, ok, f"count mismatches={mismatches}, max weighted deviation from rational oracle={worst:.1e}, "
                   f"zero-division convention={'ok' if zero_ok else 'broken'}")


def test_criterion_8_fingerprint_invariants(verdict, fixture_rows):
    t0 = time.perf_counter()
    rng = np.random.default_rng(8)
    perm_ok = True
    for _ in range(200):
        terms = [int(v) for v in rng.integers(-(10**9), 10**9, int(rng.integers(1, 200)))]
        k = int(rng.integers(0, len(terms) + 1))
        terms[:k] = [0] * k
        a = digit_distribution(terms)
        b = digit_distribution([terms[i] for i in rng.permutation(len(terms))])
        perm_ok &= bool(np.array_equal(a.b_d, b.b_d)) and a.p_z == b.p_z
    fib = digit_distribution(fibonacci(990))
    kl_fib = kl_divergence(fib.nonzero_digits())
    tv = distances(digit_distribution([1] + [0] * 999))[3]
    wd_max = max(r.distances[2] for r in fixture_rows if np.isfinite(r.distances[2]))
    dt = time.perf_counter() - t0
    ok = perm_ok and kl_fib < 0.01 and tv >= 0.95 and wd_max <= 0.15534 and dt < 30
    verdict(8, ok, f"permutation invariance={perm_ok}, Fibonacci-990 KL={kl_fib:.5f}, "
                   f"single-nonzero TV={tv:.4f}, corpus max WD={wd_max:.5f}")


def test_criterion_9_determinism(verdict, default_runs):
    (ca, _), (cb, _) = default_runs
    a, b = ca.out_dir, cb.out_dir
    files = ["features.tsv", *(f"models/{p.name}" for p in sorted((a / "models").iterdir())),
             *(f"reports/{p.name}" for p in sorted((a / "reports").iterdir()))]
    differ = [f for f in files if (a / f).read_bytes() != (b / f).read_bytes()]
    verdict(9, not differ and len(files) > 1,
            f"{len(files)} artifacts compared, {len(differ)} differ" + (f": {differ}" if differ else ""))

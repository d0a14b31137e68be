"""Time the compiled kernels against the numpy fallback on the same inputs.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each kernel is checked for identical output before it is timed.
"""
from __future__ import annotations

import argparse
import timeit

import numpy as np

from seqfp import _kernels_py
from seqfp.learn import ForestHyper, tree_fit
from seqfp.numerics import wide_arrays

try:
    from seqfp import _kernels
except ImportError:  # extension not built
    _kernels = None


def cases(rng):
    terms = [3**k for k in range(1500)] + [int(v) for v in rng.integers(0, 10**6, 500)]
    mant, expo = wide_arrays(terms)
    X = rng.normal(size=(2000, 14))
    y = (X[:, 0] + 0.5 * rng.normal(size=2000) > 0).astype(np.int64)
    samples = np.arange(2000, dtype=np.int64)
    feats = rng.permutation(14).astype(np.int64)
    draws = rng.random(14)
    tree = tree_fit(X, y, ForestHyper(max_features=None), np.random.default_rng(0))
    tree_args = (tree.feature, tree.threshold, tree.left, tree.right, X)
    return {
        "running_moments (2000 terms)": ("running_moments", (mant, expo)),
        "best_split, best (2000 x 14)": ("best_split", (X, y, samples, feats, None, 14, 1)),
        "best_split, random (2000 x 14)": ("best_split", (X, y, samples, feats, draws, 14, 1)),
        f"apply_tree ({tree.n_nodes} nodes, 2000 rows)": ("apply_tree", tree_args),
    }


def same(a, b) -> bool:
    if isinstance(a, tuple):
        return all(same(x, y) for x, y in zip(a, b))
    return bool(np.array_equal(np.asarray(a), np.asarray(b)))


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if _kernels is None:
        print("compiled kernels unavailable; build with `pip install -e . --no-build-isolation`")
        return
    rng = np.random.default_rng(0)
    print(f"{'kernel':<38}{'python ms':>11}{'cython ms':>11}{'speedup':>9}")
    for label, (name, call_args) in cases(rng).items():
        py, cy = getattr(_kernels_py, name), getattr(_kernels, name)
        if not same(py(*call_args), cy(*call_args)):
            raise SystemExit(f"{name}: backends disagree")
        t_py = min(timeit.repeat(lambda: py(*call_args), number=1, repeat=args.repeat)) * 1e3
        t_cy = min(timeit.repeat(lambda: cy(*call_args), number=1, repeat=args.repeat)) * 1e3
        print(f"{label:<38}{t_py:>11.3f}{t_cy:>11.3f}{t_py / t_cy:>8.1f}x")


if __name__ == "__main__":
    main()

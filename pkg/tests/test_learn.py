from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from seqfp.errors import ModelError, ShapeMismatchError
from seqfp.learn import (
    DEFAULT_TREES,
    ForestHyper,
    MultilabelModel,
    baseline_fit,
    baseline_predict,
    default_trees,
    forest_fit,
    forest_predict_proba,
    load_model,
    multilabel_fit,
    multilabel_predict,
    multilabel_predict_proba,
    save_model,
    tree_fit,
)


def gini_exact(pl, nl, pr, nr):
    return Fraction(2 * pl * (nl - pl), nl) + Fraction(2 * pr * (nr - pr), nr)


def stump_oracle(X, y):
    """Exhaustive root split: lowest exact cost, then lowest feature, then lowest threshold."""
    best = None
    for f in range(X.shape[1]):
        for t in np.unique(X[:, f])[:-1]:
            m = X[:, f] <= t
            pl, nl = int(y[m].sum()), int(m.sum())
            pr, nr = int(y[~m].sum()), int((~m).sum())
            key = (gini_exact(pl, nl, pr, nr), f, t)
            if best is None or key < best:
                best = key
    return best


def two_blobs(rng, n=200):
    y = rng.integers(0, 2, n)
    X = rng.normal(size=(n, 5))
    X[:, 0] += 3.0 * y
    X[:, 3] -= 2.0 * y
    return X, y


class TestTree:
    @settings(max_examples=40)
    @given(st.integers(min_value=0, max_value=2**32 - 1))
    def test_root_matches_oracle(self, seed):
        rng = np.random.default_rng(seed)
        X = rng.integers(0, 6, size=(25, 3)).astype(float)
        y = rng.integers(0, 2, 25)
        if y.min() == y.max() or all(len(np.unique(X[:, f])) == 1 for f in range(3)):
            return
        tree = tree_fit(X, y, ForestHyper(max_depth=1, max_features=None), rng)
        cost, f, t = stump_oracle(X, y)
        assert tree.feature[0] == f
        assert tree.threshold[0] == t

    def test_perfect_fit_on_distinct_rows(self, rng):
        X = rng.normal(size=(120, 4))
        y = rng.integers(0, 2, 120)
        for splitter in ("best", "random"):
            tree = tree_fit(X, y, ForestHyper(max_features=None), np.random.default_rng(1), splitter)
            np.testing.assert_array_equal(tree.predict_proba(X), y.astype(float))

    def test_leaf_counts_partition_rows(self, rng):
        X, y = two_blobs(rng)
        tree = tree_fit(X, y, ForestHyper(min_samples_leaf=5), np.random.default_rng(0))
        leaves = tree.feature < 0
        assert tree.value[leaves].sum() == len(y)
        assert tree.value[leaves].sum(axis=1).min() >= 5
        np.testing.assert_array_equal(tree.value[0], [np.sum(y == 0), np.sum(y == 1)])

    def test_max_depth(self, rng):
        X, y = two_blobs(rng)
        tree = tree_fit(X, y, ForestHyper(max_depth=2), np.random.default_rng(0))
        assert tree.n_nodes <= 7

    def test_pure_node_is_leaf(self):
        tree = tree_fit(np.arange(10.0)[:, None], np.ones(10, int), ForestHyper(), np.random.default_rng(0))
        assert tree.n_nodes == 1

    def test_bad_labels(self):
        with pytest.raises(ValueError):
            tree_fit(np.zeros((3, 1)), [0, 2, 1], ForestHyper(), np.random.default_rng(0))
        with pytest.raises(ShapeMismatchError):
            tree_fit(np.zeros((3, 1)), [0, 1], ForestHyper(), np.random.default_rng(0))


class TestForest:
    @pytest.mark.parametrize("mode", ["random_forest", "extra_trees"])
    def test_separates_blobs(self, rng, mode):
        X, y = two_blobs(rng, 400)
        m = forest_fit(X[:300], y[:300], mode, ForestHyper(n_trees=30), seed=4)
        acc = np.mean((forest_predict_proba(m, X[300:]) >= 0.5) == y[300:])
        assert acc > 0.9
        assert m.importance.argmax() in (0, 3)
        assert m.importance.sum() == pytest.approx(1.0)

    def test_xor(self, rng):
        X = rng.uniform(-1, 1, size=(600, 2))
        y = ((X[:, 0] > 0) ^ (X[:, 1] > 0)).astype(int)
        m = forest_fit(X[:400], y[:400], "extra_trees", ForestHyper(n_trees=40), seed=0)
        assert np.mean((forest_predict_proba(m, X[400:]) >= 0.5) == y[400:]) > 0.9

    def test_mode_defaults(self):
        assert ForestHyper().resolved("random_forest").bootstrap is True
        assert ForestHyper().resolved("random_forest").splitter == "best"
        assert ForestHyper().resolved("extra_trees").bootstrap is False
        assert ForestHyper().resolved("extra_trees").splitter == "random"
        with pytest.raises(ValueError):
            ForestHyper().resolved("boosting")

    def test_deterministic_and_seed_sensitive(self, rng):
        X, y = two_blobs(rng)
        a = forest_fit(X, y, "random_forest", ForestHyper(n_trees=5), seed=7)
        b = forest_fit(X, y, "random_forest", ForestHyper(n_trees=5), seed=7)
        c = forest_fit(X, y, "random_forest", ForestHyper(n_trees=5), seed=8)
        np.testing.assert_array_equal(forest_predict_proba(a, X), forest_predict_proba(b, X))
        assert any(not np.array_equal(s.threshold, t.threshold) for s, t in zip(a.trees, c.trees))

    def test_workers_match_serial(self, rng):
        X, y = two_blobs(rng, 100)
        a = forest_fit(X, y, "extra_trees", ForestHyper(n_trees=6), seed=3, workers=1)
        b = forest_fit(X, y, "extra_trees", ForestHyper(n_trees=6), seed=3, workers=2)
        for s, t in zip(a.trees, b.trees):
            np.testing.assert_array_equal(s.threshold, t.threshold)
            np.testing.assert_array_equal(s.feature, t.feature)

    def test_proba_range_and_shape_check(self, rng):
        X, y = two_blobs(rng, 80)
        m = forest_fit(X, y, "random_forest", ForestHyper(n_trees=5), seed=0)
        p = forest_predict_proba(m, X)
        assert np.all((p >= 0) & (p <= 1))
        with pytest.raises(ShapeMismatchError):
            forest_predict_proba(m, X[:, :3])


class TestMultilabel:
    def data(self, rng):
        X = rng.normal(size=(200, 6))
        Y = np.column_stack([X[:, 0] > 0, X[:, 1] + X[:, 2] > 0.5, rng.random(200) < 0.1])
        return X, Y

    def test_fit_predict(self, rng):
        X, Y = self.data(rng)
        m = multilabel_fit(X[:150], Y[:150], "extra_trees", ForestHyper(n_trees=20), seed=1,
                           label_names=("a", "b", "c"))
        P = multilabel_predict_proba(m, X[150:])
        assert P.shape == (50, 3)
        pred = multilabel_predict(m, X[150:])
        assert np.mean(pred[:, 0] == Y[150:, 0]) > 0.85
        np.testing.assert_array_equal(pred, P >= 0.5)

    def test_per_label_streams_differ(self, rng):
        X, _ = self.data(rng)
        Y = np.column_stack([X[:, 0] > 0, X[:, 0] > 0])
        m = multilabel_fit(X, Y, "extra_trees", ForestHyper(n_trees=2), seed=0, label_names=("a", "b"))
        assert not np.array_equal(m.forests[0].trees[0].threshold, m.forests[1].trees[0].threshold)

    def test_pca_and_shape(self, rng):
        X, Y = self.data(rng)
        m = multilabel_fit(X, Y, "random_forest", ForestHyper(n_trees=3), pca_k=2, label_names=("a", "b", "c"))
        assert m.forests[0].n_features == 2
        with pytest.raises(ShapeMismatchError):
            multilabel_predict(m, X[:, :5])
        with pytest.raises(ShapeMismatchError):
            multilabel_fit(X, Y[:, :2], label_names=("a", "b", "c"))

    def test_thresholds_validated(self, rng):
        X, Y = self.data(rng)
        with pytest.raises(ModelError):
            multilabel_fit(X, Y, "extra_trees", ForestHyper(n_trees=1),
                           label_names=("a", "b", "c"), thresholds=[0.5, 1.0, 0.5])

    @pytest.mark.parametrize("suffix", [".json", ".json.gz"])
    def test_save_load_identical(self, rng, tmp_path, suffix):
        X, Y = self.data(rng)
        m = multilabel_fit(X, Y, "random_forest", ForestHyper(n_trees=4), seed=2, pca_k=3,
                           label_names=("a", "b", "c"))
        path = tmp_path / f"m{suffix}"
        save_model(path, m)
        back = load_model(path)
        assert isinstance(back, MultilabelModel)
        np.testing.assert_array_equal(multilabel_predict_proba(back, X), multilabel_predict_proba(m, X))
        save_model(tmp_path / f"again{suffix}", back)
        assert path.read_bytes() == (tmp_path / f"again{suffix}").read_bytes()

    def test_load_rejects_foreign(self, tmp_path):
        p = tmp_path / "x.json"
        p.write_text('{"format": "other"}')
        with pytest.raises(ModelError):
            load_model(p)


class TestBaseline:
    def test_frequencies(self):
        Y = np.array([[1, 0], [1, 0], [0, 0], [1, 1]], dtype=bool)
        m = baseline_fit(Y, ("a", "b"))
        np.testing.assert_allclose(m.frequency, [0.75, 0.25])

    def test_draws_follow_frequency(self):
        m = baseline_fit(np.array([[1, 0, 1]] * 3 + [[0, 0, 1]], dtype=bool), ("a", "b", "c"))
        P = baseline_predict(m, 20000, seed=5)
        assert not P[:, 1].any() and P[:, 2].all()
        assert P[:, 0].mean() == pytest.approx(0.75, abs=0.02)
        np.testing.assert_array_equal(P, baseline_predict(m, 20000, seed=5))

    def test_round_trip(self, tmp_path):
        m = baseline_fit(np.array([[1], [0]], dtype=bool), ("a",))
        save_model(tmp_path / "b.json", m)
        np.testing.assert_array_equal(load_model(tmp_path / "b.json").frequency, m.frequency)


def test_default_trees():
    assert default_trees("random_forest", "oeis-vs-random") == DEFAULT_TREES["oeis_vs_random"] == 665
    assert default_trees("random_forest", "keywords") == 744
    assert default_trees("extra_trees", "keywords") == 1059

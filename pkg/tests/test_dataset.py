from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from seqfp.errors import ParseError, PcaError, ShapeMismatchError
from seqfp.dataset import (
    Dataset,
    generate_random_sequences,
    join_dataset,
    pca_fit,
    read_label_table,
    read_split_table,
    scaler_fit,
    split,
    split_sizes,
    write_label_table,
    write_split_table,
)
from seqfp.fingerprint import FeatureRow


class TestRandomSequences:
    def test_shape_and_range(self):
        seqs = generate_random_sequences(5, length=300, lo=10, hi=20, seed=3)
        assert [s.id for s in seqs] == [f"R{k:06d}" for k in range(1, 6)]
        for s in seqs:
            assert len(s.terms) == 300
            assert all(10 <= t < 20 for t in s.terms)
            assert s.source == "synthetic"

    def test_deterministic(self):
        a = generate_random_sequences(3, length=50, seed=9)
        b = generate_random_sequences(3, length=50, seed=9)
        c = generate_random_sequences(3, length=50, seed=10)
        assert [s.terms for s in a] == [s.terms for s in b]
        assert [s.terms for s in a] != [s.terms for s in c]

    def test_bad_args(self):
        with pytest.raises(ValueError):
            generate_random_sequences(1, length=0)
        with pytest.raises(ValueError):
            generate_random_sequences(1, lo=5, hi=5)


class TestSplit:
    def test_sizes_exact(self):
        assert split_sizes(200, (0.8, 0.0, 0.2)) == [160, 0, 40]
        assert split_sizes(80, (0.7875, 0.0875, 0.125)) == [63, 7, 10]

    def test_bad_fractions(self):
        with pytest.raises(ValueError):
            split_sizes(10, (0.5, 0.2, 0.2))
        with pytest.raises(ValueError):
            split_sizes(10, (1.2, -0.2, 0.0))

    @given(st.integers(min_value=0, max_value=2000),
           st.lists(st.integers(min_value=0, max_value=100), min_size=3, max_size=3),
           st.integers(min_value=0, max_value=2**32 - 1))
    def test_partition(self, rows, weights, seed):
        if sum(weights) == 0:
            return
        fr = [w / sum(weights) for w in weights]
        fr[2] = 1.0 - fr[0] - fr[1]
        fr[2] = max(fr[2], 0.0)
        sizes = split_sizes(rows, fr)
        assert sum(sizes) == rows
        for s, f in zip(sizes, fr):
            assert abs(s - rows * f) < 1.0 + 1e-9
        tags = split(rows, fr, seed)
        assert [tags.count(t) for t in ("train", "validation", "test")] == sizes
        assert tags == split(rows, fr, seed)


class TestScaler:
    def test_standardizes(self, rng):
        X = rng.normal(3.0, 5.0, size=(200, 4))
        X[:, 2] = 7.0
        m = scaler_fit(X)
        Z = m.apply(X)
        np.testing.assert_allclose(Z[:, [0, 1, 3]].mean(axis=0), 0.0, atol=1e-12)
        np.testing.assert_allclose(Z[:, [0, 1, 3]].std(axis=0), 1.0, atol=1e-12)
        np.testing.assert_array_equal(Z[:, 2], 0.0)
        np.testing.assert_allclose(m.inverse(Z)[:, [0, 1, 3]], X[:, [0, 1, 3]], atol=1e-12)

    def test_shape_mismatch(self, rng):
        m = scaler_fit(rng.normal(size=(10, 3)))
        with pytest.raises(ShapeMismatchError):
            m.apply(np.zeros((2, 4)))


class TestPca:
    def test_against_svd(self, rng):
        X = rng.normal(size=(300, 5)) @ rng.normal(size=(5, 5))
        m = pca_fit(X)
        Xc = X - X.mean(axis=0)
        sv = np.linalg.svd(Xc, compute_uv=False)
        np.testing.assert_allclose(m.explained_variance, sv**2 / (len(X) - 1), rtol=1e-9)
        np.testing.assert_allclose(m.components @ m.components.T, np.eye(5), atol=1e-10)
        np.testing.assert_allclose(m.reconstruct(m.apply(X)), X, atol=1e-9)

    def test_truncated_projection(self, rng):
        X = rng.normal(size=(100, 6))
        m = pca_fit(X, k=2)
        assert m.apply(X).shape == (100, 2)
        Z = m.apply(X)
        np.testing.assert_allclose(np.var(Z, axis=0, ddof=1), m.explained_variance[:2], rtol=1e-9)

    def test_sign_convention_deterministic(self, rng):
        X = rng.normal(size=(50, 4))
        a, b = pca_fit(X), pca_fit(X.copy())
        np.testing.assert_array_equal(a.components, b.components)
        idx = np.argmax(np.abs(a.components), axis=1)
        assert np.all(a.components[np.arange(4), idx] > 0)

    def test_errors(self, rng):
        with pytest.raises(PcaError):
            pca_fit(np.zeros((1, 3)))
        with pytest.raises(PcaError):
            pca_fit(rng.normal(size=(5, 3)), k=4)
        X = rng.normal(size=(5, 3))
        X[0, 0] = np.nan
        with pytest.raises(PcaError):
            pca_fit(X)

    def test_round_trip_dict(self, rng):
        from seqfp.dataset import PcaModel
        m = pca_fit(rng.normal(size=(20, 3)), k=2)
        back = PcaModel.from_dict(m.to_dict())
        np.testing.assert_array_equal(back.components, m.components)
        assert back.k == 2


class TestTables:
    def test_label_round_trip(self, tmp_path):
        ids = ["A000001", "A000002", "A000003"]
        Y = np.array([[1, 0], [0, 0], [1, 1]], dtype=bool)
        write_label_table(tmp_path / "l.tsv", ids, Y, ("a", "b"))
        rid, rY, names = read_label_table(tmp_path / "l.tsv")
        assert rid == ids and names == ("a", "b")
        np.testing.assert_array_equal(rY, Y)

    def test_label_shape(self, tmp_path):
        with pytest.raises(ShapeMismatchError):
            write_label_table(tmp_path / "l.tsv", ["A1"], np.zeros((1, 3)), ("a", "b"))

    def test_label_bad_cell(self, tmp_path):
        p = tmp_path / "l.tsv"
        p.write_text("id\ta\nA000001\t2\n")
        with pytest.raises(ParseError):
            read_label_table(p)

    def test_split_round_trip(self, tmp_path):
        write_split_table(tmp_path / "s.tsv", ["x", "y"], ["train", "test"])
        assert read_split_table(tmp_path / "s.tsv") == {"x": "train", "y": "test"}
        (tmp_path / "s.tsv").write_text("id\tsplit\nx\tholdout\n")
        with pytest.raises(ParseError):
            read_split_table(tmp_path / "s.tsv")


class TestDataset:
    def test_join_keeps_feature_order(self):
        rows = [FeatureRow(i, np.full(14, k, dtype=float), (0.0,) * 4) for k, i in enumerate("cab")]
        ds = join_dataset(rows, ["a", "b"], np.array([[1], [0]], dtype=bool),
                          {"a": "train", "b": "test", "c": "train"}, ("x",))
        assert ds.ids == ["a", "b"]
        X, Y, ids = ds.part("train")
        assert ids == ["a"] and X[0, 0] == 1.0 and Y[0, 0]

    def test_mismatch(self):
        with pytest.raises(ShapeMismatchError):
            Dataset(["a"], np.zeros((2, 14)), np.zeros((1, 1), bool), ["train"])

    def test_non_finite(self):
        X = np.zeros((1, 14))
        X[0, 0] = np.inf
        with pytest.raises(ValueError):
            Dataset(["a"], X, np.zeros((1, 1), bool), ["train"])

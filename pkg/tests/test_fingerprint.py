from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import fibonacci, leading_digit_counts, normal_equations
from seqfp.errors import ParseError, UndefinedDistanceError
from seqfp.fingerprint import (
    FEATURE_NAMES,
    WASSERSTEIN_MAX,
    FeatureRow,
    benford_reference,
    digit_distribution,
    distances,
    feature_vector,
    fingerprint,
    fingerprint_all,
    kl_divergence,
    ks_statistic,
    leading_digit,
    read_feature_table,
    taylor_features,
    taylor_points,
    total_variation,
    wasserstein_sorted,
    write_feature_table,
)
from seqfp.oeis import Sequence

B = benford_reference().b


def delta(i):
    p = np.zeros(9)
    p[i - 1] = 1.0
    return p


class TestBenford:
    def test_constants(self):
        assert B[0] == pytest.approx(0.301030, abs=1e-6)
        assert B[8] == pytest.approx(0.045757, abs=1e-6)
        assert B.sum() == pytest.approx(1.0, abs=1e-12)
        assert np.all(np.diff(B) < 0)


class TestDigits:
    def test_hand_example(self):
        d = digit_distribution([1, 23, 0, -456, 5])
        np.testing.assert_allclose(d.b_d, [0.2, 0.2, 0.2, 0, 0.2, 0.2, 0, 0, 0, 0])
        assert d.p_z == pytest.approx(0.6)

    def test_powers_of_ten(self):
        d = digit_distribution([10, 100, 1000])
        assert d.b_d[1] == 1.0 and d.p_z == 1.0

    def test_leading_digit(self):
        assert leading_digit(0) == 0
        assert leading_digit(-907) == 9
        assert leading_digit(7 * 10**999) == 7

    def test_empty(self):
        with pytest.raises(ValueError):
            digit_distribution([])

    @given(st.lists(st.integers(min_value=-(10**30), max_value=10**30), min_size=1, max_size=80), st.randoms())
    def test_permutation_invariance_and_oracle(self, terms, r):
        d = digit_distribution(terms)
        shuffled = list(terms)
        r.shuffle(shuffled)
        e = digit_distribution(shuffled)
        np.testing.assert_array_equal(d.b_d, e.b_d)
        assert d.p_z == e.p_z
        np.testing.assert_allclose(d.b_d, np.array(leading_digit_counts(terms)) / len(terms), rtol=0, atol=1e-15)
        assert d.b_d.sum() == pytest.approx(1.0, abs=1e-12)
        assert 0.0 <= d.p_z <= 1.0

    @given(st.lists(st.integers(min_value=-(10**20), max_value=10**20), min_size=1, max_size=50))
    def test_scale_covariance(self, terms):
        if not any(terms):
            return
        a = digit_distribution(terms).nonzero_digits()
        b = digit_distribution([10 * t for t in terms]).nonzero_digits()
        np.testing.assert_array_equal(a, b)


class TestDistances:
    def test_kl_anchors(self):
        assert kl_divergence(np.full(9, 1 / 9)) == pytest.approx(0.191, abs=1e-3)
        assert kl_divergence(delta(1)) == pytest.approx(1.2005, abs=1e-3)
        assert kl_divergence(delta(1)) == pytest.approx(math.log(math.log2(10)), abs=1e-12)
        assert kl_divergence(B) == 0.0

    def test_ks_anchors(self):
        assert ks_statistic(delta(1)) == pytest.approx(0.69897, abs=1e-5)
        assert ks_statistic(delta(9)) == pytest.approx(0.95424, abs=1e-5)
        assert ks_statistic(B) == pytest.approx(0.0, abs=1e-15)

    def test_wasserstein_anchors(self):
        assert wasserstein_sorted(delta(9)) == pytest.approx(0.15533, abs=1e-4)
        assert wasserstein_sorted(delta(9)) == pytest.approx(WASSERSTEIN_MAX, abs=1e-15)
        assert wasserstein_sorted(B) == 0.0
        assert wasserstein_sorted(B[::-1]) == 0.0
        assert wasserstein_sorted(np.random.default_rng(0).permutation(B)) == 0.0

    def test_tv(self):
        d = digit_distribution([1] * 10)
        assert total_variation(d) == pytest.approx(0.69897, abs=1e-5)

    def test_tv_zero_for_benford(self):
        from seqfp.fingerprint import DigitDistribution
        assert total_variation(DigitDistribution(np.r_[0.0, B], 1.0)) == pytest.approx(0.0, abs=1e-15)

    def test_mostly_zero_sequence_tv(self):
        for n in (100, 1000, 5000):
            tv = distances(digit_distribution([1] + [0] * (n - 1)))[3]
            assert tv >= 0.95
        assert distances(digit_distribution([1] + [0] * 4999))[3] > distances(digit_distribution([1] + [0] * 99))[3]

    def test_all_zero_undefined(self):
        d = digit_distribution([0, 0, 0])
        with pytest.raises(UndefinedDistanceError):
            d.nonzero_digits()
        with pytest.raises(UndefinedDistanceError):
            kl_divergence(np.zeros(9))
        kl, ks, wd, tv = distances(d)
        assert math.isnan(kl) and math.isnan(ks) and math.isnan(wd)
        assert tv == pytest.approx(1.0)

    def test_shape_check(self):
        with pytest.raises(ValueError):
            kl_divergence(np.ones(10) / 10)

    @given(st.lists(st.floats(min_value=0, max_value=1), min_size=9, max_size=9))
    def test_ranges(self, raw):
        p = np.array(raw)
        if p.sum() <= 0:
            return
        p = p / p.sum()
        assert kl_divergence(p) >= 0.0
        assert 0.0 <= ks_statistic(p) <= 1.0
        assert 0.0 <= wasserstein_sorted(p) <= WASSERSTEIN_MAX + 1e-12

    def test_fibonacci_kl(self):
        d = digit_distribution(fibonacci(990))
        p = np.array(leading_digit_counts(fibonacci(990))[1:], dtype=float)
        p /= p.sum()
        np.testing.assert_allclose(d.nonzero_digits(), p, rtol=0, atol=1e-15)
        assert kl_divergence(p) < 0.01
        np.testing.assert_allclose(d.b_d[1:], B, atol=0.02)


class TestTaylor:
    def test_naturals(self):
        n = np.arange(1, 991)
        tf = taylor_features(list(range(1, 991)))
        assert 1.9 <= tf.s <= 2.1 and tf.r > 0.999
        xs = np.log((n[1:] + 1) / 2)
        ys = np.log(n[1:] * (n[1:] + 1) / 12)
        s, b, r = normal_equations(xs.tolist(), ys.tolist())
        assert tf.s == pytest.approx(s, abs=1e-9)
        assert tf.intercept == pytest.approx(b, abs=1e-9)
        assert tf.r == pytest.approx(r, abs=1e-9)

    def test_constant_degenerate(self):
        tf = taylor_features([7] * 50)
        assert tf.degenerate and (tf.s, tf.intercept, tf.r) == (0.0, 0.0, 0.0)

    def test_short_and_nonpositive(self):
        assert taylor_features([5]).degenerate
        xs, ys = taylor_points([-3, -1, -2, -7])
        assert len(xs) == 0
        assert taylor_features([-3, -1, -2, -7]).degenerate

    def test_points_skip_first(self):
        xs, ys = taylor_points([1, 2, 3])
        np.testing.assert_allclose(np.exp(xs), [1.5, 2.0])
        np.testing.assert_allclose(np.exp(ys), [0.5, 1.0])

    @given(st.lists(st.integers(min_value=0, max_value=10**40), min_size=3, max_size=60))
    def test_identity(self, terms):
        tf = taylor_features(terms)
        if tf.degenerate:
            assert (tf.s, tf.intercept, tf.r) == (0.0, 0.0, 0.0)
            return
        xs, ys = taylor_points(terms)
        sx, sy = xs.std(), ys.std()
        assert tf.s == pytest.approx(tf.r * sy / sx, rel=1e-6, abs=1e-9)

    def test_huge_terms_finite(self):
        tf = taylor_features([3**k for k in range(2000)])
        assert math.isfinite(tf.s) and math.isfinite(tf.intercept)
        assert tf.s == pytest.approx(2.0, abs=0.01)


class TestFeatureVector:
    def test_order_and_length(self):
        assert FEATURE_NAMES[:4] == ("s", "intercept", "r", "p_z")
        assert len(FEATURE_NAMES) == 14

    def test_constant(self):
        v = feature_vector([7] * 30)
        expect = np.zeros(14)
        expect[3] = 1.0
        expect[4 + 7] = 1.0
        np.testing.assert_array_equal(v, expect)

    def test_zeros(self):
        v = feature_vector(Sequence("A000004", [0] * 30))
        assert v[3] == 0.0 and v[4] == 1.0 and v[0] == v[1] == v[2] == 0.0

    def test_fingerprint_consistent(self):
        s = Sequence("A000045", fibonacci(1000), "bfile")
        row = fingerprint(s)
        np.testing.assert_array_equal(row.features, feature_vector(s))
        assert np.all(np.isfinite(row.features))

    def test_parallel_order(self, fixture_corpus):
        seqs = fixture_corpus[0][:12]
        a = fingerprint_all(seqs, workers=1)
        b = fingerprint_all(seqs, workers=2)
        assert [r.id for r in a] == [r.id for r in b] == [s.id for s in seqs]
        for x, y in zip(a, b):
            np.testing.assert_array_equal(x.features, y.features)


class TestCorpusInvariants:
    def test_distance_ranges(self, fixture_rows):
        for row in fixture_rows:
            kl, ks, wd, tv = row.distances
            assert np.all(np.isfinite(row.features))
            if math.isnan(kl):
                assert row.features[4] == 1.0  # all zero
                continue
            assert kl >= 0.0
            assert 0.0 <= ks <= 1.0
            assert wd <= 0.15534
            assert 0.0 <= tv <= 1.0


class TestFeatureTable:
    def test_round_trip_bit_exact(self, tmp_path, fixture_rows):
        p = tmp_path / "f.tsv"
        write_feature_table(p, fixture_rows)
        back = read_feature_table(p)
        assert [r.id for r in back] == [r.id for r in fixture_rows]
        for a, b in zip(back, fixture_rows):
            np.testing.assert_array_equal(a.features, b.features)
            np.testing.assert_array_equal(np.array(a.distances), np.array(b.distances))
        p2 = tmp_path / "g.tsv"
        write_feature_table(p2, back)
        assert p.read_bytes() == p2.read_bytes()

    def test_bad_header(self, tmp_path):
        p = tmp_path / "f.tsv"
        p.write_text("id\tx\n")
        with pytest.raises(ParseError):
            read_feature_table(p)

    def test_bad_row(self, tmp_path):
        p = tmp_path / "f.tsv"
        write_feature_table(p, [FeatureRow("A000001", np.zeros(14), (0.0, 0.0, 0.0, 0.0))])
        p.write_text(p.read_text() + "A000002\t1\n")
        with pytest.raises(ParseError):
            read_feature_table(p)

"""Pure-Python/numpy versions of the hot kernels.

Every function here has a twin with the same signature in ``_kernels.pyx``.
Both perform the same IEEE operations in the same order, so results agree
bit for bit; ``tests/test_kernels.py`` holds them to that.
"""
from __future__ import annotations

import math

import numpy as np

# Beyond this exponent gap the smaller addend cannot touch a 53-bit mantissa.
_EXP_GAP = 64


def _norm(m, e):
    if m == 0.0:
        return 0.0, 0
    fr, ex = math.frexp(m)
    return fr * 2.0, e + ex - 1


def wide_add(am, ae, bm, be):
    if am == 0.0:
        return bm, be
    if bm == 0.0:
        return am, ae
    d = ae - be
    if d > _EXP_GAP:
        return am, ae
    if d < -_EXP_GAP:
        return bm, be
    if d >= 0:
        return _norm(am + math.ldexp(bm, -d), ae)
    return _norm(math.ldexp(am, d) + bm, be)


def wide_mul(am, ae, bm, be):
    return _norm(am * bm, ae + be)


def wide_div(am, ae, bm, be):
    return _norm(am / bm, ae - be)


def running_moments(mant, expo):
    """Welford recurrence over wide values given as (mantissa, exponent) arrays.

    Returns ``(mu_m, mu_e, var_m, var_e)``; ``var`` uses the n-1 divisor and is
    zero at the first position.
    """
    n_terms = mant.shape[0]
    mu_m = np.zeros(n_terms, dtype=np.float64)
    mu_e = np.zeros(n_terms, dtype=np.int64)
    var_m = np.zeros(n_terms, dtype=np.float64)
    var_e = np.zeros(n_terms, dtype=np.int64)
    mm, me = 0.0, 0
    sm, se = 0.0, 0
    for i in range(n_terms):
        xm = float(mant[i])
        xe = int(expo[i])
        cm, ce = _norm(float(i + 1), 0)
        dm, de = wide_add(xm, xe, -mm, me)
        qm, qe = wide_div(dm, de, cm, ce)
        mm, me = wide_add(mm, me, qm, qe)
        rm, re_ = wide_add(xm, xe, -mm, me)
        pm, pe = wide_mul(dm, de, rm, re_)
        sm, se = wide_add(sm, se, pm, pe)
        mu_m[i] = mm
        mu_e[i] = me
        if i > 0:
            km, ke = _norm(float(i), 0)
            vm, ve = wide_div(sm, se, km, ke)
            var_m[i] = vm
            var_e[i] = ve
    return mu_m, mu_e, var_m, var_e


def gini_cost(pl, nl, pr, nr):
    return 2.0 * pl * (nl - pl) / nl + 2.0 * pr * (nr - pr) / nr


def best_split(X, y, samples, features, draws, max_features, min_samples_leaf):
    """Search the node rows ``samples`` for the lowest weighted-Gini split.

    Features are visited in the order given. Features constant on the node are
    skipped; the search stops after ``max_features`` non-constant ones. With
    ``draws`` (one uniform value per feature column) each visited feature gets a
    single threshold ``min + u*(max - min)``; otherwise every boundary between
    distinct sorted values is tried and the threshold is the left value.

    Returns ``(feature, threshold, cost)`` with feature -1 when nothing valid.
    """
    n = samples.shape[0]
    ys = y[samples].astype(np.float64)
    best_f = -1
    best_t = 0.0
    best_c = math.inf
    visited = 0
    for f in features:
        if visited >= max_features:
            break
        f = int(f)
        vals = X[samples, f]
        vmin = vals.min()
        vmax = vals.max()
        if not vmin < vmax:
            continue
        visited += 1
        if draws is None:
            order = np.argsort(vals, kind="stable")
            sv = vals[order]
            sy = ys[order]
            pl = np.cumsum(sy)[:-1]
            ptot = float(sy.sum())
            nl = np.arange(1, n, dtype=np.float64)
            nr = n - nl
            pr = ptot - pl
            ok = (sv[:-1] < sv[1:]) & (nl >= min_samples_leaf) & (nr >= min_samples_leaf)
            if not ok.any():
                continue
            pos = np.flatnonzero(ok)
            cost = gini_cost(pl[pos], nl[pos], pr[pos], nr[pos])
            k = int(np.argmin(cost))
            c = float(cost[k])
            t = float(sv[pos[k]])
        else:
            t = vmin + float(draws[f]) * (vmax - vmin)
            if t >= vmax:
                t = vmin
            mask = vals <= t
            nl = float(mask.sum())
            nr = n - nl
            if nl < min_samples_leaf or nr < min_samples_leaf:
                continue
            pl = float(ys[mask].sum())
            pr = float(ys.sum()) - pl
            c = gini_cost(pl, nl, pr, nr)
        if c < best_c or (c == best_c and f < best_f):
            best_f, best_t, best_c = f, t, c
    return best_f, best_t, best_c


def apply_tree(feature, threshold, left, right, X):
    """Leaf index reached by each row of ``X``."""
    node = np.zeros(X.shape[0], dtype=np.int64)
    active = feature[node] >= 0
    rows = np.arange(X.shape[0])
    while active.any():
        r = rows[active]
        nd = node[r]
        go_left = X[r, feature[nd]] <= threshold[nd]
        node[r] = np.where(go_left, left[nd], right[nd])
        active[r] = feature[node[r]] >= 0
    return node

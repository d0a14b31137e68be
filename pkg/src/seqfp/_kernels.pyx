# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled twins of the functions in ``_kernels_py``.

Same signatures, same operation order; see that module for the contracts.
"""
import numpy as np
cimport numpy as cnp
from libc.math cimport frexp, ldexp, INFINITY
from libc.stdlib cimport malloc, free

cnp.import_array()

ctypedef long long i64

cdef int EXP_GAP = 64


cdef inline void _norm(double m, i64 e, double* om, i64* oe) noexcept nogil:
    cdef int ex
    cdef double fr
    if m == 0.0:
        om[0] = 0.0
        oe[0] = 0
        return
    fr = frexp(m, &ex)
    om[0] = fr * 2.0
    oe[0] = e + ex - 1


cdef inline void _add(double am, i64 ae, double bm, i64 be,
                      double* om, i64* oe) noexcept nogil:
    cdef i64 d
    if am == 0.0:
        om[0] = bm
        oe[0] = be
        return
    if bm == 0.0:
        om[0] = am
        oe[0] = ae
        return
    d = ae - be
    if d > EXP_GAP:
        om[0] = am
        oe[0] = ae
        return
    if d < -EXP_GAP:
        om[0] = bm
        oe[0] = be
        return
    if d >= 0:
        _norm(am + ldexp(bm, <int>(-d)), ae, om, oe)
    else:
        _norm(ldexp(am, <int>d) + bm, be, om, oe)


def wide_add(double am, i64 ae, double bm, i64 be):
    cdef double om
    cdef i64 oe
    _add(am, ae, bm, be, &om, &oe)
    return om, oe


def wide_mul(double am, i64 ae, double bm, i64 be):
    cdef double om
    cdef i64 oe
    _norm(am * bm, ae + be, &om, &oe)
    return om, oe


def wide_div(double am, i64 ae, double bm, i64 be):
    cdef double om
    cdef i64 oe
    _norm(am / bm, ae - be, &om, &oe)
    return om, oe


def running_moments(const double[::1] mant, const i64[::1] expo):
    cdef Py_ssize_t n_terms = mant.shape[0]
    cdef cnp.ndarray[double] mu_m_arr = np.zeros(n_terms, dtype=np.float64)
    cdef cnp.ndarray[i64] mu_e_arr = np.zeros(n_terms, dtype=np.int64)
    cdef cnp.ndarray[double] var_m_arr = np.zeros(n_terms, dtype=np.float64)
    cdef cnp.ndarray[i64] var_e_arr = np.zeros(n_terms, dtype=np.int64)
    cdef double[::1] mu_m = mu_m_arr
    cdef i64[::1] mu_e = mu_e_arr
    cdef double[::1] var_m = var_m_arr
    cdef i64[::1] var_e = var_e_arr
    cdef double mm = 0.0, sm = 0.0, xm, cm, dm, qm, rm, pm, km, vm
    cdef i64 me = 0, se = 0, xe, ce, de, qe, re, pe, ke, ve
    cdef Py_ssize_t i
    with nogil:
        for i in range(n_terms):
            xm = mant[i]
            xe = expo[i]
            _norm(<double>(i + 1), 0, &cm, &ce)
            _add(xm, xe, -mm, me, &dm, &de)
            _norm(dm / cm, de - ce, &qm, &qe)
            _add(mm, me, qm, qe, &mm, &me)
            _add(xm, xe, -mm, me, &rm, &re)
            _norm(dm * rm, de + re, &pm, &pe)
            _add(sm, se, pm, pe, &sm, &se)
            mu_m[i] = mm
            mu_e[i] = me
            if i > 0:
                _norm(<double>i, 0, &km, &ke)
                _norm(sm / km, se - ke, &vm, &ve)
                var_m[i] = vm
                var_e[i] = ve
    return mu_m_arr, mu_e_arr, var_m_arr, var_e_arr


cdef inline double _gini_cost(double pl, double nl, double pr, double nr) noexcept nogil:
    return 2.0 * pl * (nl - pl) / nl + 2.0 * pr * (nr - pr) / nr


cdef void _sort_pairs(double* v, double* w, Py_ssize_t lo, Py_ssize_t hi) noexcept nogil:
    # in-place quicksort of v[lo:hi] carrying w along; order among equal keys is irrelevant
    cdef Py_ssize_t i, j, mid
    cdef double pivot, tv, tw
    while hi - lo > 16:
        mid = lo + (hi - lo) // 2
        # median of three into v[mid]
        if v[mid] < v[lo]:
            tv = v[mid]; v[mid] = v[lo]; v[lo] = tv
            tw = w[mid]; w[mid] = w[lo]; w[lo] = tw
        if v[hi - 1] < v[lo]:
            tv = v[hi - 1]; v[hi - 1] = v[lo]; v[lo] = tv
            tw = w[hi - 1]; w[hi - 1] = w[lo]; w[lo] = tw
        if v[hi - 1] < v[mid]:
            tv = v[hi - 1]; v[hi - 1] = v[mid]; v[mid] = tv
            tw = w[hi - 1]; w[hi - 1] = w[mid]; w[mid] = tw
        pivot = v[mid]
        i = lo
        j = hi - 1
        while i <= j:
            while v[i] < pivot:
                i += 1
            while v[j] > pivot:
                j -= 1
            if i <= j:
                tv = v[i]; v[i] = v[j]; v[j] = tv
                tw = w[i]; w[i] = w[j]; w[j] = tw
                i += 1
                j -= 1
        if j + 1 - lo < hi - i:
            _sort_pairs(v, w, lo, j + 1)
            lo = i
        else:
            _sort_pairs(v, w, i, hi)
            hi = j + 1
    for i in range(lo + 1, hi):
        tv = v[i]
        tw = w[i]
        j = i - 1
        while j >= lo and v[j] > tv:
            v[j + 1] = v[j]
            w[j + 1] = w[j]
            j -= 1
        v[j + 1] = tv
        w[j + 1] = tw


def best_split(const double[:, :] X, const i64[::1] y, const i64[::1] samples,
               const i64[::1] features, draws, i64 max_features,
               i64 min_samples_leaf):
    cdef Py_ssize_t n = samples.shape[0]
    cdef Py_ssize_t n_feat = features.shape[0]
    cdef const double[::1] u
    cdef bint use_draws = draws is not None
    if use_draws:
        u = draws
    cdef double* v = <double*> malloc(n * sizeof(double))
    cdef double* w = <double*> malloc(n * sizeof(double))
    if v == NULL or w == NULL:
        free(v)
        free(w)
        raise MemoryError()
    cdef i64 best_f = -1
    cdef double best_t = 0.0, best_c = INFINITY
    cdef i64 visited = 0
    cdef Py_ssize_t k, i, f
    cdef double vmin, vmax, x, t, c, pl, nl, pr, nr, ptot, fc, ft
    cdef bint found
    try:
        with nogil:
            ptot = 0.0
            for i in range(n):
                ptot += <double>y[samples[i]]
            for k in range(n_feat):
                if visited >= max_features:
                    break
                f = features[k]
                vmin = X[samples[0], f]
                vmax = vmin
                for i in range(n):
                    x = X[samples[i], f]
                    v[i] = x
                    if x < vmin:
                        vmin = x
                    if x > vmax:
                        vmax = x
                if not vmin < vmax:
                    continue
                visited += 1
                found = False
                if not use_draws:
                    for i in range(n):
                        w[i] = <double>y[samples[i]]
                    _sort_pairs(v, w, 0, n)
                    pl = 0.0
                    fc = INFINITY
                    ft = 0.0
                    for i in range(n - 1):
                        pl += w[i]
                        if not v[i] < v[i + 1]:
                            continue
                        nl = <double>(i + 1)
                        nr = n - nl
                        if nl < min_samples_leaf or nr < min_samples_leaf:
                            continue
                        pr = ptot - pl
                        c = _gini_cost(pl, nl, pr, nr)
                        if c < fc:
                            fc = c
                            ft = v[i]
                            found = True
                    if not found:
                        continue
                    c = fc
                    t = ft
                else:
                    t = vmin + u[f] * (vmax - vmin)
                    if t >= vmax:
                        t = vmin
                    nl = 0.0
                    pl = 0.0
                    for i in range(n):
                        if v[i] <= t:
                            nl += 1.0
                            pl += <double>y[samples[i]]
                    nr = n - nl
                    if nl < min_samples_leaf or nr < min_samples_leaf:
                        continue
                    pr = ptot - pl
                    c = _gini_cost(pl, nl, pr, nr)
                if c < best_c or (c == best_c and f < best_f):
                    best_f = f
                    best_t = t
                    best_c = c
    finally:
        free(v)
        free(w)
    return best_f, best_t, best_c


def apply_tree(const i64[::1] feature, const double[::1] threshold,
               const i64[::1] left, const i64[::1] right, const double[:, :] X):
    cdef Py_ssize_t n = X.shape[0]
    cdef cnp.ndarray[i64] out_arr = np.zeros(n, dtype=np.int64)
    cdef i64[::1] out = out_arr
    cdef Py_ssize_t r
    cdef i64 node
    with nogil:
        for r in range(n):
            node = 0
            while feature[node] >= 0:
                if X[r, feature[node]] <= threshold[node]:
                    node = left[node]
                else:
                    node = right[node]
            out[r] = node
    return out_arr

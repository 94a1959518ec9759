# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; see ``_core_py`` for the reference semantics."""

from libc.stdlib cimport malloc, free, abs as c_abs

cdef enum:
    MAXN = 62

MAX_KERNEL_N = 62

ctypedef unsigned long long u64


cdef inline u64 _mask(int* s, int n):
    cdef u64 m = 0
    cdef int k
    for k in range(n):
        if s[k] < 0:
            m |= (<u64>1) << k
    return m


def aperiodic_pm(values):
    cdef int n = len(values)
    cdef int* s = <int*>malloc(n * sizeof(int))
    cdef int t, k
    cdef long acc
    out = []
    try:
        for k in range(n):
            s[k] = values[k]
        for t in range(n):
            acc = 0
            for k in range(n - t):
                acc += s[k] * s[k + t]
            out.append(acc)
    finally:
        free(s)
    return out


def _check_n(int n):
    if n < 1 or n > MAXN:
        raise ValueError(f"kernel length must be in 1..{MAXN}, got {n}")


cdef struct BoundedState:
    int n
    int c
    int s[MAXN]
    int rho[MAXN]


cdef inline void _assign(int* s, int* rho, int d, int v):
    cdef int t
    s[d] = v
    for t in range(1, d + 1):
        rho[t] += s[d - t] * v


cdef inline void _unassign(int* s, int* rho, int d):
    cdef int t
    cdef int v = s[d]
    for t in range(1, d + 1):
        rho[t] -= s[d - t] * v


cdef inline bint _feasible(BoundedState* st, int d):
    cdef int slack = st.c + st.n - d - 1
    cdef int t
    for t in range(1, d + 1):
        if c_abs(st.rho[t]) > slack:
            return False
    return True


cdef void _bounded_dfs(BoundedState* st, int d, list out):
    cdef int v
    if d == st.n:
        out.append(_mask(st.s, st.n))
        return
    for v in (-1, 1):
        _assign(st.s, st.rho, d, v)
        if _feasible(st, d):
            _bounded_dfs(st, d + 1, out)
        _unassign(st.s, st.rho, d)


def bounded_leaves(int n, c, prefix):
    _check_n(n)
    cdef BoundedState st
    cdef int d, k
    st.n = n
    st.c = int(c)
    for k in range(MAXN):
        st.s[k] = 0
        st.rho[k] = 0
    out = []
    cdef int plen = min(len(prefix), n)
    for d in range(plen):
        _assign(st.s, st.rho, d, prefix[d])
        if not _feasible(&st, d):
            return out
    _bounded_dfs(&st, plen, out)
    return out


cdef struct EnergyState:
    int n
    int s[MAXN]
    int rho[MAXN]
    long best
    u64 best_mask
    bint found


cdef inline long _lower_bound(EnergyState* st, int d):
    cdef int r = st.n - d
    cdef int t, p, m
    cdef long total = 0
    for t in range(1, st.n):
        if t < d:
            p = c_abs(st.rho[t])
            if p >= r:
                m = p - r
            else:
                m = (p + r) & 1
        else:
            m = (st.n - t) & 1
        total += m * m
    return total


cdef void _energy_dfs(EnergyState* st, int d):
    cdef int v, t
    cdef long e
    if d == st.n:
        e = 0
        for t in range(1, st.n):
            e += st.rho[t] * st.rho[t]
        if not st.found or e < st.best:
            st.found = True
            st.best = e
            st.best_mask = _mask(st.s, st.n)
        return
    for v in (-1, 1):
        _assign(st.s, st.rho, d, v)
        if not st.found or _lower_bound(st, d + 1) < st.best:
            _energy_dfs(st, d + 1)
        _unassign(st.s, st.rho, d)


def min_energy(int n, prefix):
    _check_n(n)
    cdef EnergyState st
    cdef int d, k
    st.n = n
    st.found = False
    st.best = 0
    st.best_mask = 0
    for k in range(MAXN):
        st.s[k] = 0
        st.rho[k] = 0
    cdef int plen = min(len(prefix), n)
    for d in range(plen):
        _assign(st.s, st.rho, d, prefix[d])
    _energy_dfs(&st, plen)
    if not st.found:
        return None, 0
    return st.best, st.best_mask


def perfect_rows(int n):
    _check_n(n)
    cdef int s[MAXN]
    cdef int half = n // 2
    cdef int t, k, j
    cdef long acc
    cdef u64 mask
    cdef u64 total = (<u64>1) << n
    cdef bint ok
    out = []
    mask = 0
    while mask < total:
        for k in range(n):
            s[k] = -1 if (mask >> k) & 1 else 1
        ok = True
        for t in range(1, half + 1):
            acc = 0
            for k in range(n):
                j = k + t
                if j >= n:
                    j -= n
                acc += s[k] * s[j]
            if acc != 0:
                ok = False
                break
        if ok:
            out.append(mask)
        mask += 1
    return out

# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled versions of the hot kernels.

Outputs must stay bit-identical with ``kernels._fallback``: same dominance
definition, same (value, index) tie-breaks in sorts, same accumulation
order. The fallback module documents the contracts.
"""

import numpy as np

cimport numpy as cnp
from libc.stdlib cimport free, malloc, qsort

cnp.import_array()

cdef double C_INF = float("inf")


cdef struct ValIdx:
    double v
    Py_ssize_t i


cdef int _cmp_vi(const void* pa, const void* pb) noexcept nogil:
    cdef const ValIdx* a = <const ValIdx*> pa
    cdef const ValIdx* b = <const ValIdx*> pb
    if a.v < b.v:
        return -1
    if a.v > b.v:
        return 1
    if a.i < b.i:
        return -1
    if a.i > b.i:
        return 1
    return 0


cdef struct Pt:
    double x
    double y


cdef int _cmp_pt(const void* pa, const void* pb) noexcept nogil:
    cdef const Pt* a = <const Pt*> pa
    cdef const Pt* b = <const Pt*> pb
    if a.x < b.x:
        return -1
    if a.x > b.x:
        return 1
    if a.y < b.y:
        return -1
    if a.y > b.y:
        return 1
    return 0


def nondominated_ranks(F):
    """Front index per row of the (N, M) objective matrix, 0 = best front."""
    F = np.ascontiguousarray(F, dtype=np.float64)
    cdef Py_ssize_t n = F.shape[0]
    ranks_arr = np.empty(n, dtype=np.int32)
    if n == 0:
        return ranks_arr
    cdef Py_ssize_t m = F.shape[1]
    cdef double[:, ::1] f = F
    cdef int[::1] ranks = ranks_arr
    cdef unsigned char* dom = <unsigned char*> malloc(n * n)
    cdef Py_ssize_t* ndom = <Py_ssize_t*> malloc(n * sizeof(Py_ssize_t))
    cdef Py_ssize_t* front = <Py_ssize_t*> malloc(n * sizeof(Py_ssize_t))
    cdef Py_ssize_t* nxt = <Py_ssize_t*> malloc(n * sizeof(Py_ssize_t))
    if dom == NULL or ndom == NULL or front == NULL or nxt == NULL:
        free(dom); free(ndom); free(front); free(nxt)
        raise MemoryError()
    cdef Py_ssize_t i, j, k, fsize, nsize, rank
    cdef bint le_all, lt_any
    with nogil:
        for j in range(n):
            ndom[j] = 0
        for i in range(n):
            for j in range(n):
                le_all = True
                lt_any = False
                for k in range(m):
                    if f[i, k] > f[j, k]:
                        le_all = False
                        break
                    if f[i, k] < f[j, k]:
                        lt_any = True
                if le_all and lt_any:
                    dom[i * n + j] = 1
                    ndom[j] += 1
                else:
                    dom[i * n + j] = 0
        fsize = 0
        for j in range(n):
            if ndom[j] == 0:
                front[fsize] = j
                fsize += 1
        rank = 0
        while fsize > 0:
            nsize = 0
            for k in range(fsize):
                i = front[k]
                ranks[i] = rank
                for j in range(n):
                    if dom[i * n + j] and ndom[j] > 0:
                        ndom[j] -= 1
                        if ndom[j] == 0:
                            nxt[nsize] = j
                            nsize += 1
            rank += 1
            for k in range(nsize):
                front[k] = nxt[k]
            fsize = nsize
    free(dom); free(ndom); free(front); free(nxt)
    return ranks_arr


cdef void _crowding_buf(const double* f, Py_ssize_t n, Py_ssize_t m,
                        double* d, ValIdx* s) noexcept nogil:
    # f is row-major (n, m); writes distances into d; s is scratch of size n.
    cdef Py_ssize_t i, j
    cdef double vrange
    if n <= 2:
        for i in range(n):
            d[i] = C_INF
        return
    for i in range(n):
        d[i] = 0.0
    for j in range(m):
        for i in range(n):
            s[i].v = f[i * m + j]
            s[i].i = i
        qsort(s, n, sizeof(ValIdx), _cmp_vi)
        d[s[0].i] = C_INF
        d[s[n - 1].i] = C_INF
        vrange = s[n - 1].v - s[0].v
        if vrange > 0.0:
            for i in range(1, n - 1):
                d[s[i].i] += (s[i + 1].v - s[i - 1].v) / vrange


def crowding_distances(F):
    """NSGA-II crowding distance of one front given as an (n, M) matrix."""
    F = np.ascontiguousarray(F, dtype=np.float64)
    cdef Py_ssize_t n = F.shape[0]
    out = np.empty(n, dtype=np.float64)
    if n == 0:
        return out
    cdef Py_ssize_t m = F.shape[1]
    cdef double[:, ::1] f = F
    cdef double[::1] d = out
    cdef ValIdx* s = <ValIdx*> malloc(n * sizeof(ValIdx))
    if s == NULL:
        raise MemoryError()
    with nogil:
        _crowding_buf(&f[0, 0], n, m, &d[0], s)
    free(s)
    return out


def truncate_by_crowding(F, capacity):
    """Ascending indices of rows kept after iterative min-crowding eviction."""
    F = np.ascontiguousarray(F, dtype=np.float64)
    cdef Py_ssize_t n = F.shape[0]
    cdef Py_ssize_t cap = int(capacity)
    if n <= cap:
        return np.arange(n, dtype=np.int64)
    cdef Py_ssize_t m = F.shape[1]
    cdef double[:, ::1] f = F
    cdef Py_ssize_t* idx = <Py_ssize_t*> malloc(n * sizeof(Py_ssize_t))
    cdef double* buf = <double*> malloc(n * m * sizeof(double))
    cdef double* d = <double*> malloc(n * sizeof(double))
    cdef ValIdx* s = <ValIdx*> malloc(n * sizeof(ValIdx))
    if idx == NULL or buf == NULL or d == NULL or s == NULL:
        free(idx); free(buf); free(d); free(s)
        raise MemoryError()
    cdef Py_ssize_t alive = n
    cdef Py_ssize_t i, j, pos
    cdef double best
    with nogil:
        for i in range(n):
            idx[i] = i
        while alive > cap:
            for i in range(alive):
                for j in range(m):
                    buf[i * m + j] = f[idx[i], j]
            _crowding_buf(buf, alive, m, d, s)
            pos = 0
            best = d[0]
            for i in range(1, alive):
                if d[i] < best:
                    best = d[i]
                    pos = i
            for i in range(pos, alive - 1):
                idx[i] = idx[i + 1]
            alive -= 1
    out = np.empty(alive, dtype=np.int64)
    cdef cnp.int64_t[::1] o = out
    for i in range(alive):
        o[i] = idx[i]
    free(idx); free(buf); free(d); free(s)
    return out


def hv2d(F, ref):
    """Exact bi-objective hypervolume by a sweep over f1-sorted points."""
    F = np.ascontiguousarray(F, dtype=np.float64)
    ref = np.asarray(ref, dtype=np.float64)
    cdef Py_ssize_t n = F.shape[0]
    if n == 0:
        return 0.0
    cdef double rx = ref[0]
    cdef double ry = ref[1]
    cdef double[:, ::1] f = F
    cdef Pt* pts = <Pt*> malloc(n * sizeof(Pt))
    if pts == NULL:
        raise MemoryError()
    cdef Py_ssize_t cnt = 0
    cdef Py_ssize_t i
    cdef double area = 0.0
    cdef double best2 = ry
    with nogil:
        for i in range(n):
            if f[i, 0] < rx and f[i, 1] < ry:
                pts[cnt].x = f[i, 0]
                pts[cnt].y = f[i, 1]
                cnt += 1
        if cnt > 0:
            qsort(pts, cnt, sizeof(Pt), _cmp_pt)
            for i in range(cnt):
                if pts[i].y < best2:
                    area += (rx - pts[i].x) * (best2 - pts[i].y)
                    best2 = pts[i].y
    free(pts)
    return area

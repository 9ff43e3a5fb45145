# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled short-vector enumeration kernel (128-bit integer arithmetic).

Mirrors ``_enumpure.enumerate_counts`` exactly: same scaled-integer data,
same exact interval logic, identical counts.  The driver only selects this
kernel after checking that every intermediate value fits comfortably in a
signed 128-bit integer.
"""

from libc.stdlib cimport free, malloc

cdef extern from *:
    ctypedef long long i128 "__int128"

cdef extern from "math.h":
    long double sqrtl(long double) nogil


cdef inline i128 i128_from(object v):
    cdef long long hi = <long long> (v >> 64)
    cdef unsigned long long lo = <unsigned long long> (v & 0xFFFFFFFFFFFFFFFF)
    return ((<i128> hi) << 64) | (<i128> lo)


cdef inline object i128_to(i128 v):
    cdef bint neg = v < 0
    if neg:
        v = -v
    cdef unsigned long long hi = <unsigned long long> (v >> 64)
    cdef unsigned long long lo = <unsigned long long> (v & <i128> 0xFFFFFFFFFFFFFFFF)
    out = (int(hi) << 64) | int(lo)
    return -out if neg else out


cdef inline i128 isqrt128(i128 n):
    cdef long double d
    cdef i128 r
    if n < 2:
        return n
    d = <long double> n
    r = <i128> sqrtl(d)
    if r < 0:
        r = 0
    while r * r > n:
        r -= 1
    while (r + 1) * (r + 1) <= n:
        r += 1
    return r


cdef inline i128 fdiv(i128 a, i128 b):
    # floor division, b > 0
    cdef i128 q = a / b
    if a % b != 0 and a < 0:
        q -= 1
    return q


cdef inline i128 cdivceil(i128 a, i128 b):
    # ceiling division, b > 0
    cdef i128 q = a / b
    if a % b != 0 and a > 0:
        q += 1
    return q


def enumerate_counts(int rank, w, c, rint, qscale, bound, top_values=None):
    """Count nonzero vectors of each norm <= bound; see the pure kernel."""
    cdef long long bnd = <long long> bound
    counts_py = [0] * (bnd + 1)
    cdef long long nodes = 0
    if rank == 0 or bnd < 0:
        return counts_py, 0

    cdef i128 qs = i128_from(qscale)
    cdef i128 t0 = qs * <i128> bnd
    cdef int n = rank
    cdef i128 *wv = <i128 *> malloc(n * sizeof(i128))
    cdef i128 *cv = <i128 *> malloc(n * sizeof(i128))
    cdef i128 *rv = <i128 *> malloc(n * n * sizeof(i128))
    cdef i128 *xv = <i128 *> malloc(n * sizeof(i128))
    cdef i128 *vcen = <i128 *> malloc(n * sizeof(i128))
    cdef i128 *tbud = <i128 *> malloc(n * sizeof(i128))
    cdef i128 *nxt = <i128 *> malloc(n * sizeof(i128))
    cdef i128 *end = <i128 *> malloc(n * sizeof(i128))
    cdef char *azero = <char *> malloc(n * sizeof(char))
    cdef long long *cnt = <long long *> malloc((bnd + 1) * sizeof(long long))
    if (wv == NULL or cv == NULL or rv == NULL or xv == NULL or vcen == NULL
            or tbud == NULL or nxt == NULL or end == NULL or azero == NULL
            or cnt == NULL):
        raise MemoryError
    cdef int i, j, k
    cdef i128 v, b, lo, hi, d, tn, xval
    cdef bint have_top = top_values is not None
    cdef Py_ssize_t top_idx = 0, top_len = 0
    cdef long long *topv = NULL
    try:
        for i in range(n):
            wv[i] = i128_from(w[i])
            cv[i] = i128_from(c[i])
            row = rint[i]
            for j in range(n):
                rv[i * n + j] = i128_from(row[j])
        for i in range(bnd + 1):
            cnt[i] = 0
        if have_top:
            top_list = list(top_values)
            top_len = len(top_list)
            topv = <long long *> malloc(max(top_len, 1) * sizeof(long long))
            if topv == NULL:
                raise MemoryError
            for i in range(top_len):
                topv[i] = <long long> top_list[i]

        k = n - 1
        tbud[k] = t0
        azero[k] = 1
        # set interval at level k
        v = 0
        for j in range(k + 1, n):
            v += rv[k * n + j] * xv[j]
        vcen[k] = v
        b = isqrt128(tbud[k] / wv[k])
        lo = cdivceil(-b - v, cv[k])
        hi = fdiv(b - v, cv[k])
        if azero[k] and lo < 0:
            lo = 0
        nxt[k] = lo
        end[k] = hi

        while True:
            if k == n - 1 and have_top:
                if top_idx >= top_len:
                    break
                xval = <i128> topv[top_idx]
                top_idx += 1
                if xval < nxt[k] or xval > end[k]:
                    continue
            else:
                if nxt[k] > end[k]:
                    k += 1
                    if k == n:
                        break
                    continue
                xval = nxt[k]
                nxt[k] += 1
            nodes += 1
            d = cv[k] * xval + vcen[k]
            tn = tbud[k] - wv[k] * d * d
            xv[k] = xval
            if k == 0:
                if xval != 0 or not azero[0]:
                    cnt[<long long> ((t0 - tn) / qs)] += 2
            else:
                azero[k - 1] = 1 if (azero[k] and xval == 0) else 0
                tbud[k - 1] = tn
                k -= 1
                v = 0
                for j in range(k + 1, n):
                    v += rv[k * n + j] * xv[j]
                vcen[k] = v
                b = isqrt128(tbud[k] / wv[k])
                lo = cdivceil(-b - v, cv[k])
                hi = fdiv(b - v, cv[k])
                if azero[k] and lo < 0:
                    lo = 0
                nxt[k] = lo
                end[k] = hi
        for i in range(bnd + 1):
            counts_py[i] = cnt[i]
        return counts_py, int(nodes)
    finally:
        free(wv); free(cv); free(rv); free(xv); free(vcen)
        free(tbud); free(nxt); free(end); free(azero); free(cnt)
        if topv != NULL:
            free(topv)

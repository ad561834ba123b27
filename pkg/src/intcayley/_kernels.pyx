# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels mirroring ``_kernels_py``.

All arithmetic runs on 64-bit ints. Inputs whose magnitudes could overflow
raise OverflowError; the dispatcher then reruns the call in pure Python.
"""
from libc.stdlib cimport malloc, calloc, free

ctypedef long long i64

cdef i64 MAX_N = 1LL << 31
cdef i64 MAX_Q = 1LL << 40
cdef i64 MAX_C = 1LL << 20
cdef i64 MAX_ACC = 1LL << 61


cdef inline i64 _abs(i64 v) nogil:
    return -v if v < 0 else v


cdef i64* _to_array(seq, Py_ssize_t n) except NULL:
    cdef i64* out = <i64*> malloc((n if n > 0 else 1) * sizeof(i64))
    cdef Py_ssize_t i
    if out == NULL:
        raise MemoryError()
    for i in range(n):
        out[i] = seq[i]
    return out


cdef i64* _flatten(elems, Py_ssize_t count, Py_ssize_t k) except NULL:
    cdef i64* out = <i64*> malloc((count * k if count * k > 0 else 1) * sizeof(i64))
    cdef Py_ssize_t i, j
    if out == NULL:
        raise MemoryError()
    i = 0
    for elem in elems:
        for j in range(k):
            out[i * k + j] = elem[j]
        i += 1
    return out


cdef i64* _modulus_array(modulus, Py_ssize_t* deg) except NULL:
    cdef Py_ssize_t d = len(modulus) - 1
    cdef Py_ssize_t j
    cdef i64* low = _to_array(modulus, d + 1)
    for j in range(d):
        if _abs(low[j]) > MAX_C:
            free(low)
            raise OverflowError("modulus coefficient too large for the compiled kernel")
    deg[0] = d
    return low


cdef int _reduce(i64* rem, Py_ssize_t length, i64* low, Py_ssize_t d) nogil:
    """In-place remainder by a monic polynomial; returns -1 on overflow risk."""
    cdef Py_ssize_t i, j, base
    cdef i64 q, v
    for i in range(length - 1, d - 1, -1):
        q = rem[i]
        if q == 0:
            continue
        if _abs(q) > MAX_Q:
            return -1
        base = i - d
        for j in range(d):
            if low[j] != 0:
                v = rem[base + j] - q * low[j]
                if _abs(v) > MAX_ACC:
                    return -1
                rem[base + j] = v
        rem[i] = 0
    return 0


def psi_exponents(alpha, elems, weights, i64 N):
    if N >= MAX_N:
        raise OverflowError("exponent too large for the compiled kernel")
    cdef Py_ssize_t k = len(weights)
    cdef Py_ssize_t j
    cdef i64 acc
    cdef i64* aw = _to_array(weights, k)
    for j in range(k):
        aw[j] = (<i64> alpha[j] * aw[j]) % N
    out = []
    try:
        for elem in elems:
            acc = 0
            for j in range(k):
                acc = (acc + aw[j] * <i64> elem[j]) % N
            out.append(acc)
    finally:
        free(aw)
    return out


def reduce_monic(coeffs, modulus):
    cdef Py_ssize_t d
    cdef Py_ssize_t n = len(coeffs)
    cdef Py_ssize_t length, i
    cdef i64* rem
    cdef i64* low = _modulus_array(modulus, &d)
    length = n if n > d else d
    rem = <i64*> calloc(length if length > 0 else 1, sizeof(i64))
    if rem == NULL:
        free(low)
        raise MemoryError()
    try:
        for i in range(n):
            v = coeffs[i]
            if abs(v) > MAX_Q:
                raise OverflowError("coefficient too large for the compiled kernel")
            rem[i] = v
        if _reduce(rem, length, low, d) < 0:
            raise OverflowError("intermediate value too large for the compiled kernel")
        return [rem[i] for i in range(d)]
    finally:
        free(low)
        free(rem)


def char_sum_table(alphas, elems, weights, i64 N, modulus):
    if N >= MAX_N:
        raise OverflowError("exponent too large for the compiled kernel")
    cdef Py_ssize_t k = len(weights)
    cdef Py_ssize_t count = len(elems)
    cdef Py_ssize_t d, i, j
    cdef Py_ssize_t length
    cdef i64 acc
    cdef i64* w = _to_array(weights, k)
    cdef i64* aw = <i64*> malloc((k if k > 0 else 1) * sizeof(i64))
    cdef i64* flat = NULL
    cdef i64* low = NULL
    cdef i64* hist = NULL
    out = []
    try:
        flat = _flatten(elems, count, k)
        low = _modulus_array(modulus, &d)
        length = N if N > d else d
        hist = <i64*> malloc(length * sizeof(i64))
        if aw == NULL or hist == NULL:
            raise MemoryError()
        for alpha in alphas:
            for j in range(k):
                aw[j] = (<i64> alpha[j] * w[j]) % N
            for i in range(length):
                hist[i] = 0
            with nogil:
                for i in range(count):
                    acc = 0
                    for j in range(k):
                        acc = (acc + aw[j] * flat[i * k + j]) % N
                    hist[acc] += 1
                if _reduce(hist, length, low, d) < 0:
                    with gil:
                        raise OverflowError("intermediate value too large for the compiled kernel")
            out.append(tuple([hist[i] for i in range(d)]))
    finally:
        free(w)
        free(aw)
        free(flat)
        free(low)
        free(hist)
    return out


def eigen_rows_hold(alpha, elems, conn, factors, weights, i64 N, modulus, i64 lam):
    if N >= MAX_N:
        raise OverflowError("exponent too large for the compiled kernel")
    if _abs(lam) > MAX_Q:
        raise OverflowError("eigenvalue too large for the compiled kernel")
    cdef Py_ssize_t k = len(weights)
    cdef Py_ssize_t na = len(elems)
    cdef Py_ssize_t ns = len(conn)
    cdef Py_ssize_t d, a, s, j, i
    cdef Py_ssize_t length
    cdef i64 acc, base
    cdef bint ok = True
    cdef i64* fac = _to_array(factors, k)
    cdef i64* aw = _to_array(weights, k)
    cdef i64* A = NULL
    cdef i64* S = NULL
    cdef i64* low = NULL
    cdef i64* hist = NULL
    try:
        for j in range(k):
            aw[j] = (<i64> alpha[j] * aw[j]) % N
        A = _flatten(elems, na, k)
        S = _flatten(conn, ns, k)
        low = _modulus_array(modulus, &d)
        length = N if N > d else d
        hist = <i64*> malloc(length * sizeof(i64))
        if hist == NULL:
            raise MemoryError()
        with nogil:
            for a in range(na):
                for i in range(length):
                    hist[i] = 0
                for s in range(ns):
                    acc = 0
                    for j in range(k):
                        acc = (acc + ((A[a * k + j] + S[s * k + j]) % fac[j]) * aw[j]) % N
                    hist[acc] += 1
                base = 0
                for j in range(k):
                    base = (base + A[a * k + j] * aw[j]) % N
                hist[base] -= lam
                if _reduce(hist, length, low, d) < 0:
                    with gil:
                        raise OverflowError("intermediate value too large for the compiled kernel")
                for i in range(d):
                    if hist[i] != 0:
                        ok = False
                        break
                if not ok:
                    break
    finally:
        free(fac)
        free(aw)
        free(A)
        free(S)
        free(low)
        free(hist)
    return ok

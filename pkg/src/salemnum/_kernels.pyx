# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled arithmetic kernels.

Mirror of `_kernels_py` with C-level loop control.  Coefficients stay
arbitrary-precision Python ints; the win is in loop and list-access
overhead, which dominates the dense polynomial inner loops for
moderate coefficient sizes.
"""

from math import gcd

BACKEND = "compiled"


def mul(list a, list b):
    cdef Py_ssize_t la = len(a), lb = len(b)
    cdef Py_ssize_t i, j
    if la == 0 or lb == 0:
        return []
    cdef list out = [0] * (la + lb - 1)
    cdef object ca, cb, acc
    for i in range(la):
        ca = a[i]
        if ca:
            for j in range(lb):
                cb = b[j]
                if cb:
                    out[i + j] = out[i + j] + ca * cb
    while out and not out[len(out) - 1]:
        out.pop()
    return out


def prem(list a, list b):
    cdef Py_ssize_t db = len(b) - 1
    cdef list r = list(a)
    cdef Py_ssize_t dr = len(r) - 1
    cdef Py_ssize_t i, k
    if dr < db:
        return r
    cdef object lb = b[db]
    cdef object c
    for k in range(dr - db, -1, -1):
        c = r[db + k]
        for i in range(db + k):
            r[i] = r[i] * lb
        r[db + k] = 0
        if c:
            for i in range(db):
                r[i + k] = r[i + k] - c * b[i]
    del r[db:]
    while r and not r[len(r) - 1]:
        r.pop()
    return r


def exact_div(list a, list b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return []
    cdef Py_ssize_t da = len(a) - 1, db = len(b) - 1
    cdef Py_ssize_t i, k
    if da < db:
        return None
    cdef object lb = b[db]
    cdef list r = list(a)
    cdef list q = [0] * (da - db + 1)
    cdef object c, qc
    for k in range(da - db, -1, -1):
        c = r[db + k]
        if c:
            if c % lb:
                return None
            qc = c // lb
            q[k] = qc
            r[db + k] = 0
            for i in range(db):
                r[i + k] = r[i + k] - qc * b[i]
    for i in range(db):
        if r[i]:
            return None
    return q


def eval_at(list coeffs, object num, object den):
    cdef Py_ssize_t n = len(coeffs)
    cdef Py_ssize_t i
    if n == 0:
        return 0
    cdef object v = coeffs[n - 1]
    cdef object p
    if den == 1:
        for i in range(n - 2, -1, -1):
            v = v * num + coeffs[i]
        return v
    p = 1
    for i in range(n - 2, -1, -1):
        p = p * den
        v = v * num + coeffs[i] * p
    return v


def content(list coeffs):
    cdef object g = 0
    cdef object c
    for c in coeffs:
        g = gcd(g, c)
        if g == 1:
            return 1
    return g


def scalar_div_exact(list coeffs, object g):
    if g == 1:
        return list(coeffs)
    cdef list out = []
    cdef object c, q, rem
    for c in coeffs:
        q, rem = divmod(c, g)
        if rem:
            raise ValueError("scalar does not divide coefficient")
        out.append(q)
    return out

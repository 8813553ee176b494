# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled integer kernels for cyclotomic arithmetic.

Same contract as ``_kernels_py``. Work is done in 64-bit machine integers with
overflow detection; any overflow reruns the operation on Python integers.
"""

from libc.stdlib cimport malloc, calloc, free
from math import gcd

from eqclass import _kernels_py

cdef extern from *:
    """
    static int eq_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static int eq_add_ovf(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    static int eq_sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    """
    bint eq_mul_ovf(long long a, long long b, long long *r) nogil
    bint eq_add_ovf(long long a, long long b, long long *r) nogil
    bint eq_sub_ovf(long long a, long long b, long long *r) nogil


cdef long long* _to_c(seq, Py_ssize_t n) except? NULL:
    cdef long long* out = <long long*> calloc(n if n > 0 else 1, sizeof(long long))
    cdef Py_ssize_t i
    if out == NULL:
        raise MemoryError()
    try:
        for i in range(len(seq)):
            out[i] = seq[i]
    except OverflowError:
        free(out)
        return NULL
    return out


cdef bint _reduce_c(long long* r, Py_ssize_t n, long long* p, Py_ssize_t deg) nogil:
    """In-place reduction of r[0:n] modulo p; returns False on overflow."""
    cdef Py_ssize_t i, j, base
    cdef long long q, t
    for i in range(n - 1, deg - 1, -1):
        q = r[i]
        if q != 0:
            base = i - deg
            for j in range(deg):
                if p[j] != 0:
                    if eq_mul_ovf(q, p[j], &t):
                        return False
                    if eq_sub_ovf(r[base + j], t, &r[base + j]):
                        return False
        r[i] = 0
    return True


def reduce_mod(c, phi):
    cdef Py_ssize_t deg = len(phi) - 1
    cdef Py_ssize_t n = len(c)
    cdef long long* r
    cdef long long* p
    cdef bint ok
    if n <= deg:
        return list(c) + [0] * (deg - n)
    r = _to_c(c, n)
    if r == NULL:
        return _kernels_py.reduce_mod(c, phi)
    p = _to_c(phi, deg + 1)
    if p == NULL:
        free(r)
        return _kernels_py.reduce_mod(c, phi)
    with nogil:
        ok = _reduce_c(r, n, p, deg)
    try:
        if ok:
            return [r[i] for i in range(deg)]
        return _kernels_py.reduce_mod(c, phi)
    finally:
        free(r)
        free(p)


def mul_mod(a, b, phi):
    cdef Py_ssize_t deg = len(phi) - 1
    cdef Py_ssize_t na = len(a), nb = len(b)
    cdef Py_ssize_t n = na + nb - 1 if na and nb else 0
    cdef long long* ca
    cdef long long* cb
    cdef long long* p
    cdef long long* prod
    cdef long long t
    cdef Py_ssize_t i, j
    cdef bint ok = True
    if deg == 0:
        return []
    ca = _to_c(a, na)
    if ca == NULL:
        return _kernels_py.mul_mod(a, b, phi)
    cb = _to_c(b, nb)
    if cb == NULL:
        free(ca)
        return _kernels_py.mul_mod(a, b, phi)
    p = _to_c(phi, deg + 1)
    if p == NULL:
        free(ca)
        free(cb)
        return _kernels_py.mul_mod(a, b, phi)
    prod = <long long*> calloc(n if n > deg else deg, sizeof(long long))
    if prod == NULL:
        free(ca)
        free(cb)
        free(p)
        raise MemoryError()
    with nogil:
        for i in range(na):
            if ca[i] == 0:
                continue
            for j in range(nb):
                if cb[j] == 0:
                    continue
                if eq_mul_ovf(ca[i], cb[j], &t) or eq_add_ovf(prod[i + j], t, &prod[i + j]):
                    ok = False
                    break
            if not ok:
                break
        if ok and n > deg:
            ok = _reduce_c(prod, n, p, deg)
    try:
        if ok:
            return [prod[i] for i in range(deg)]
        return _kernels_py.mul_mod(a, b, phi)
    finally:
        free(ca)
        free(cb)
        free(p)
        free(prod)


def lin_comb(a, ca, b, cb):
    cdef long long x, y, s, t, u
    cdef Py_ssize_t i, n = len(a)
    cdef list out
    try:
        x = ca
        y = cb
    except OverflowError:
        return _kernels_py.lin_comb(a, ca, b, cb)
    out = [0] * n
    try:
        for i in range(n):
            s = a[i]
            t = b[i]
            if eq_mul_ovf(x, s, &s) or eq_mul_ovf(y, t, &t) or eq_add_ovf(s, t, &u):
                return _kernels_py.lin_comb(a, ca, b, cb)
            out[i] = u
    except OverflowError:
        return _kernels_py.lin_comb(a, ca, b, cb)
    return out


def normalize(num, den):
    return _kernels_py.normalize(num, den)


def ypoly_mul_mod(a, b, phi):
    cdef Py_ssize_t deg = len(phi) - 1
    cdef Py_ssize_t na = len(a), nb = len(b)
    cdef Py_ssize_t width = 2 * deg - 1
    cdef Py_ssize_t nout = na + nb - 1
    cdef long long* ca
    cdef long long* cb
    cdef long long* p
    cdef long long* acc
    cdef long long t, x
    cdef Py_ssize_t i, j, s, u, k
    cdef bint ok = True
    if na == 0 or nb == 0 or deg == 0:
        return _kernels_py.ypoly_mul_mod(a, b, phi)
    ca = <long long*> malloc(na * deg * sizeof(long long))
    cb = <long long*> malloc(nb * deg * sizeof(long long))
    p = _to_c(phi, deg + 1)
    acc = <long long*> calloc(nout * width, sizeof(long long))
    if ca == NULL or cb == NULL or p == NULL or acc == NULL:
        free(ca)
        free(cb)
        free(p)
        free(acc)
        return _kernels_py.ypoly_mul_mod(a, b, phi)
    try:
        for i in range(na):
            for s in range(deg):
                ca[i * deg + s] = a[i][s]
        for j in range(nb):
            for s in range(deg):
                cb[j * deg + s] = b[j][s]
    except OverflowError:
        ok = False
    if ok:
        with nogil:
            for i in range(na):
                for j in range(nb):
                    k = (i + j) * width
                    for s in range(deg):
                        x = ca[i * deg + s]
                        if x == 0:
                            continue
                        for u in range(deg):
                            if cb[j * deg + u] == 0:
                                continue
                            if eq_mul_ovf(x, cb[j * deg + u], &t) or eq_add_ovf(acc[k + s + u], t, &acc[k + s + u]):
                                ok = False
                                break
                        if not ok:
                            break
                    if not ok:
                        break
                if not ok:
                    break
            if ok:
                for i in range(nout):
                    if not _reduce_c(acc + i * width, width, p, deg):
                        ok = False
                        break
    try:
        if ok:
            return [[acc[i * width + s] for s in range(deg)] for i in range(nout)]
        return _kernels_py.ypoly_mul_mod(a, b, phi)
    finally:
        free(ca)
        free(cb)
        free(p)
        free(acc)

"""Pure-Python integer kernels for cyclotomic arithmetic.

Elements of Q(zeta_N) are stored as an integer numerator vector in the power
basis plus a positive common denominator. The kernels below work on the
integer vectors only; ``phi`` is the monic cyclotomic polynomial given as a
coefficient list from low to high degree.
"""

from math import gcd


def reduce_mod(c, phi):
    """Remainder of the integer polynomial ``c`` modulo the monic ``phi``."""
    deg = len(phi) - 1
    r = list(c)
    if len(r) < deg:
        return r + [0] * (deg - len(r))
    for i in range(len(r) - 1, deg - 1, -1):
        q = r[i]
        if q:
            base = i - deg
            for j in range(deg):
                pj = phi[j]
                if pj:
                    r[base + j] -= q * pj
        r[i] = 0
    return r[:deg]


def mul_mod(a, b, phi):
    """Product of two reduced vectors, reduced modulo ``phi``."""
    deg = len(phi) - 1
    prod = [0] * (2 * deg - 1 if deg else 0)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] += ai * bj
    return reduce_mod(prod, phi)


def lin_comb(a, ca, b, cb):
    """Elementwise ``ca*a + cb*b`` for equal-length vectors."""
    return [ca * x + cb * y for x, y in zip(a, b)]


def normalize(num, den):
    """Cancel the common content of ``num`` against ``den``; force ``den > 0``."""
    if den < 0:
        num = [-x for x in num]
        den = -den
    g = gcd(den, *num)
    if g > 1:
        num = [x // g for x in num]
        den //= g
    return tuple(num), den


def ypoly_mul_mod(a, b, phi):
    """Product of polynomials in y whose coefficients are reduced vectors.

    ``a`` and ``b`` are dense lists (lowest y-degree first) of integer vectors
    of length ``deg(phi)``; the result has ``len(a) + len(b) - 1`` entries.
    """
    deg = len(phi) - 1
    width = 2 * deg - 1 if deg else 0
    acc = [[0] * width for _ in range(len(a) + len(b) - 1)] if a and b else []
    for i, va in enumerate(a):
        for j, vb in enumerate(b):
            row = acc[i + j]
            for s, x in enumerate(va):
                if x:
                    for t, z in enumerate(vb):
                        if z:
                            row[s + t] += x * z
    return [reduce_mod(row, phi) for row in acc]

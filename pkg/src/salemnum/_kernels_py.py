"""Pure-Python arithmetic kernels.

A polynomial is a plain list of Python ints in ascending degree order with
no trailing zeros; the zero polynomial is the empty list.  These functions
are the hot inner loops of the package; `salemnum._kernels` is a compiled
drop-in replacement built from `_kernels.pyx`, and `salemnum.kernels`
picks whichever is available at import time.

Everything here is exact integer arithmetic.  No normalization is done on
inputs; callers guarantee the representation invariant.
"""

from math import gcd

BACKEND = "pure"


def mul(a, b):
    """Product of two coefficient lists (schoolbook)."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
    while out and not out[-1]:
        out.pop()
    return out


def prem(a, b):
    """Pseudo-remainder: rem(lc(b)**(deg a - deg b + 1) * a, b), exact in Z.

    Requires b nonzero.  If deg a < deg b returns a copy of a (zero
    scaling steps).  The scaling factor is applied on every step so the
    multiplier is exactly lc(b)**(delta+1) with delta = deg a - deg b.
    """
    db = len(b) - 1
    r = list(a)
    dr = len(r) - 1
    if dr < db:
        return r
    lb = b[-1]
    for k in range(dr - db, -1, -1):
        c = r[db + k]
        # r <- lb*r - c*x^k*b ; entries above db+k are already zero
        for i in range(db + k):
            r[i] *= lb
        r[db + k] = 0
        if c:
            for i in range(db):
                r[i + k] -= c * b[i]
    del r[db:]
    while r and not r[-1]:
        r.pop()
    return r


def exact_div(a, b):
    """Quotient q with a == q*b over Z, or None when no such q exists."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return []
    da, db = len(a) - 1, len(b) - 1
    if da < db:
        return None
    lb = b[-1]
    r = list(a)
    q = [0] * (da - db + 1)
    for k in range(da - db, -1, -1):
        c = r[db + k]
        if c:
            if c % lb:
                return None
            qc = c // lb
            q[k] = qc
            r[db + k] = 0
            for i in range(db):
                r[i + k] -= qc * b[i]
    for c in r:
        if c:
            return None
    return q


def eval_at(coeffs, num, den):
    """Homogenized evaluation den**deg(f) * f(num/den); den=1 gives f(num)."""
    if not coeffs:
        return 0
    v = coeffs[-1]
    if den == 1:
        for i in range(len(coeffs) - 2, -1, -1):
            v = v * num + coeffs[i]
        return v
    p = 1
    for i in range(len(coeffs) - 2, -1, -1):
        p *= den
        v = v * num + coeffs[i] * p
    return v


def content(coeffs):
    """Nonnegative gcd of all coefficients (0 for the zero polynomial)."""
    g = 0
    for c in coeffs:
        g = gcd(g, c)
        if g == 1:
            return 1
    return g


def scalar_div_exact(coeffs, g):
    """Divide every coefficient by g (must divide exactly)."""
    if g == 1:
        return list(coeffs)
    out = []
    for c in coeffs:
        q, rem = divmod(c, g)
        if rem:
            raise ValueError("scalar does not divide coefficient")
        out.append(q)
    return out

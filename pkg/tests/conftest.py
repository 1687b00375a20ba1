"""Shared test oracles and generators.

The oracles here are deliberately independent of the library's own
algorithms: resultants through Bareiss elimination on an explicit
Sylvester matrix, and root counting through floating-point companion
roots (cross-checks only) or exact sign changes on a fine grid.
"""

import random

import numpy as np
import pytest

from salemnum.polycore import IntPoly


def sylvester_resultant(a: IntPoly, b: IntPoly) -> int:
    """Resultant via fraction-free Bareiss elimination of the Sylvester matrix."""
    da, db = a.degree, b.degree
    if da < 0 or db < 0:
        raise ValueError("zero polynomial")
    if da == 0:
        return a.coeffs[0] ** db
    if db == 0:
        return b.coeffs[0] ** da
    n = da + db
    m = [[0] * n for _ in range(n)]
    arow = list(a.coeffs)[::-1]  # descending
    brow = list(b.coeffs)[::-1]
    for i in range(db):
        for j, c in enumerate(arow):
            m[i][i + j] = c
    for i in range(da):
        for j, c in enumerate(brow):
            m[db + i][i + j] = c
    # Bareiss: exact integer elimination
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for swap in range(k + 1, n):
                if m[swap][k] != 0:
                    m[k], m[swap] = m[swap], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def float_real_roots(p: IntPoly):
    """Approximate real roots via numpy eigenvalues (test cross-check only)."""
    roots = np.roots([float(c) for c in p.coeffs[::-1]])
    return sorted(r.real for r in roots if abs(r.imag) < 1e-7)


def float_count_in(p: IntPoly, lo: float, hi: float, margin: float = 1e-6) -> int:
    roots = float_real_roots(p)
    for r in roots:
        if abs(r - lo) < margin or abs(r - hi) < margin:
            raise AssertionError("float oracle: root too close to an endpoint")
    return sum(lo < r < hi for r in roots)


def grid_count_roots(p: IntPoly, roots: list, lo, hi) -> int:
    """Exact count of known constructed roots inside an open interval."""
    return sum(lo < r < hi for r in roots)


def random_monic_reciprocal(rng: random.Random, d: int, coeff: int = 9) -> IntPoly:
    """Monic reciprocal polynomial of degree 2*d."""
    half = [1] + [rng.randint(-coeff, coeff) for _ in range(d)]
    full = half[:-1] + [half[-1]] + half[-2::-1]
    return IntPoly(full[::-1])


def random_intpoly(rng: random.Random, max_deg: int, coeff: int) -> IntPoly:
    d = rng.randint(0, max_deg)
    cs = [rng.randint(-coeff, coeff) for _ in range(d + 1)]
    if all(c == 0 for c in cs):
        cs[-1] = 1
    return IntPoly(cs)


@pytest.fixture
def rng():
    return random.Random(20260809)

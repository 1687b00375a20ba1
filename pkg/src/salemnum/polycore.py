"""Exact integer polynomial arithmetic and Salem certification.

A polynomial lives in Z[x] as a dense coefficient sequence in ascending
degree order ("1,-3,1" is x^2 - 3x + 1).  `IntPoly` is the immutable
public wrapper; the inner loops run on plain lists through
`salemnum.kernels`.  Everything in this module is exact - no floating
point is used anywhere, intervals have rational endpoints, and the only
infinities are sentinels resolved by leading-coefficient signs.

Main entry points:

* ring operations, `div_exact`, `gcd_poly`, `resultant`
* `cyclotomic(m)` and `strip_cyclotomic(f)`
* `count_real_roots(f, lo, hi)` via Sturm sequences
* `to_trace_form` / `from_trace_form`, the reciprocal <-> totally-positive
  correspondence F(x) = x^d Q(x + 1/x + 2)
* `certify_salem(f)`, producing a machine-checkable `SalemCertificate`
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, inf
from typing import Iterable, Optional, Union

from . import kernels
from .errors import (
    NotDivisible,
    NotMonic,
    NotReciprocal,
    NotSquarefree,
    OddDegree,
)

Endpoint = Union[int, Fraction, float]


# ---------------------------------------------------------------------------
# IntPoly


class IntPoly:
    """Dense univariate polynomial over Z, immutable and hashable.

    coeffs[0] is the constant term; the representation is normalized so
    the last coefficient is nonzero (the zero polynomial has no
    coefficients and degree -1).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficient expected, got {c!r}")
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("IntPoly is immutable")

    # -- construction helpers

    @staticmethod
    def zero() -> "IntPoly":
        return IntPoly()

    @staticmethod
    def one() -> "IntPoly":
        return IntPoly((1,))

    @staticmethod
    def x() -> "IntPoly":
        return IntPoly((0, 1))

    @staticmethod
    def monomial(k: int, c: int = 1) -> "IntPoly":
        return IntPoly([0] * k + [c])

    @staticmethod
    def x_pow_minus_one(k: int) -> "IntPoly":
        """x^k - 1."""
        return IntPoly([-1] + [0] * (k - 1) + [1])

    # -- basic queries

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def is_reciprocal(self) -> bool:
        """Palindromic coefficients: f(x) = x^deg(f) f(1/x)."""
        return bool(self.coeffs) and self.coeffs == self.coeffs[::-1]

    def lc(self) -> int:
        if not self.coeffs:
            return 0
        return self.coeffs[-1]

    def trace(self) -> int:
        """Negative of the second-highest coefficient of a monic polynomial."""
        if self.degree < 1:
            raise ValueError("trace needs degree >= 1")
        return -self.coeffs[self.degree - 1]

    def content(self) -> int:
        return kernels.content(list(self.coeffs))

    def primitive(self) -> "IntPoly":
        g = self.content()
        if g <= 1:
            return self
        return IntPoly(kernels.scalar_div_exact(list(self.coeffs), g))

    def derivative(self) -> "IntPoly":
        return IntPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def reverse(self) -> "IntPoly":
        return IntPoly(self.coeffs[::-1])

    def evaluate(self, point):
        """Exact evaluation at an int or Fraction."""
        if isinstance(point, Fraction):
            n, d = point.numerator, point.denominator
            v = kernels.eval_at(list(self.coeffs), n, d)
            return Fraction(v, d ** max(self.degree, 0))
        return kernels.eval_at(list(self.coeffs), point, 1)

    # -- arithmetic

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __neg__(self) -> "IntPoly":
        return IntPoly([-c for c in self.coeffs])

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly([other * c for c in self.coeffs])
        return IntPoly(kernels.mul(list(self.coeffs), list(other.coeffs)))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPoly":
        if n < 0:
            raise ValueError("negative power")
        out = [1]
        base = list(self.coeffs)
        while n:
            if n & 1:
                out = kernels.mul(out, base)
            n >>= 1
            if n:
                base = kernels.mul(base, base)
        return IntPoly(out)

    def shift_mul(self, k: int) -> "IntPoly":
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return IntPoly([0] * k + list(self.coeffs))

    # -- protocol

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)!r})"

    def __str__(self):
        return format_poly(self)


def parse_poly(text: str) -> IntPoly:
    """Parse the comma-separated ascending coefficient format."""
    parts = [p.strip() for p in text.strip().split(",")]
    if parts == [""]:
        raise ValueError("empty polynomial text")
    return IntPoly([int(p) for p in parts])


def format_poly(p: IntPoly) -> str:
    if p.is_zero():
        return "0"
    return ",".join(str(c) for c in p.coeffs)


# ---------------------------------------------------------------------------
# ring operations (thin wrappers; the operators above are equivalent)


def add(a: IntPoly, b: IntPoly) -> IntPoly:
    return a + b


def sub(a: IntPoly, b: IntPoly) -> IntPoly:
    return a - b


def mul(a: IntPoly, b: IntPoly) -> IntPoly:
    return a * b


def div_exact(a: IntPoly, b: IntPoly) -> IntPoly:
    """Quotient q with a = q*b over Z; NotDivisible otherwise."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    q = kernels.exact_div(list(a.coeffs), list(b.coeffs))
    if q is None:
        raise NotDivisible(f"{a} is not divisible by {b}")
    return IntPoly(q)


def _primitive_keep_sign(cs: list) -> list:
    g = kernels.content(cs)
    if g > 1:
        return kernels.scalar_div_exact(cs, g)
    return cs


def gcd_poly(a: IntPoly, b: IntPoly) -> IntPoly:
    """Polynomial gcd over Z (primitive PRS), positive leading coefficient."""
    if a.is_zero():
        g = b
    elif b.is_zero():
        g = a
    else:
        ca, cb = a.content(), b.content()
        A = _primitive_keep_sign(list(a.coeffs))
        B = _primitive_keep_sign(list(b.coeffs))
        while B:
            R = kernels.prem(A, B)
            A, B = B, _primitive_keep_sign(R)
        g = gcd(ca, cb) * IntPoly(A)
    if g.lc() < 0:
        g = -g
    return g


def squarefree_part(f: IntPoly) -> IntPoly:
    """f / gcd(f, f'), primitive with the sign of f's leading coefficient."""
    if f.degree < 1:
        return f
    g = gcd_poly(f, f.derivative())
    out = div_exact(f, g).primitive()
    if out.lc() < 0:
        out = -out
    return out


# ---------------------------------------------------------------------------
# resultants (subresultant polynomial remainder sequence)


def resultant(a, b) -> int:
    """Res(a, b) = lc(a)^deg(b) * prod b(alpha_i) over the roots of a.

    Computed through the subresultant remainder sequence, so intermediate
    coefficients stay within determinant bounds and no Sylvester matrix is
    ever formed.
    """
    A = list(a.coeffs) if isinstance(a, IntPoly) else list(a)
    B = list(b.coeffs) if isinstance(b, IntPoly) else list(b)
    return _resultant_list(A, B)


def _resultant_list(A: list, B: list) -> int:
    if not A or not B:
        raise ValueError("resultant of the zero polynomial")
    da, db = len(A) - 1, len(B) - 1
    if da == 0:
        return A[0] ** db
    if db == 0:
        return B[0] ** da
    s = 1
    if da < db:
        A, B = B, A
        da, db = db, da
        if da & db & 1:
            s = -1
    ca, cb = kernels.content(A), kernels.content(B)
    if ca > 1:
        A = kernels.scalar_div_exact(A, ca)
    if cb > 1:
        B = kernels.scalar_div_exact(B, cb)
    t = (ca ** db) * (cb ** da)
    g = 1
    h = 1
    while True:
        da, db = len(A) - 1, len(B) - 1
        delta = da - db
        if da & db & 1:
            s = -s
        R = kernels.prem(A, B)
        if not R:
            return 0  # shared factor of positive degree
        A = B
        B = kernels.scalar_div_exact(R, g * (h ** delta))
        g = A[-1]
        if delta == 1:
            h = g
        elif delta >= 2:
            # h <- g^delta / h^(delta-1), exact by subresultant theory
            q, rem = divmod(g ** delta, h ** (delta - 1))
            if rem:
                raise AssertionError("subresultant h-update not exact")
            h = q
        if len(B) == 1:
            da = len(A) - 1
            num = B[0] ** da
            if da >= 2:
                q, rem = divmod(num, h ** (da - 1))
                if rem:
                    raise AssertionError("subresultant final division not exact")
            else:
                q = num
            return s * t * q


# ---------------------------------------------------------------------------
# cyclotomic polynomials


@lru_cache(maxsize=None)
def euler_phi(m: int) -> int:
    if m < 1:
        raise ValueError("positive integer expected")
    out = m
    n = m
    p = 2
    while p * p <= n:
        if n % p == 0:
            out -= out // p
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out -= out // n
    return out


@lru_cache(maxsize=None)
def _divisors(m: int) -> tuple:
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d != m // d:
                large.append(m // d)
        d += 1
    return tuple(small + large[::-1])


@lru_cache(maxsize=None)
def _cyclotomic_coeffs(m: int) -> tuple:
    if m == 1:
        return (-1, 1)
    num = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for d in _divisors(m):
        if d < m:
            num = kernels.exact_div(num, list(_cyclotomic_coeffs(d)))
            if num is None:
                raise AssertionError("cyclotomic recursion broke")
    return tuple(num)


def cyclotomic(m: int) -> IntPoly:
    """The m-th cyclotomic polynomial, monic of degree phi(m).

    Computed by iterated exact division of x^m - 1 by the factors for
    proper divisors; memoized, safe for concurrent callers.
    """
    if m < 1:
        raise ValueError("positive integer expected")
    return IntPoly(_cyclotomic_coeffs(m))


_phi_lock = threading.Lock()
_phi_table: list = [0, 1]  # phi sieve, grown on demand


def _phi_sieve_upto(limit: int) -> list:
    global _phi_table
    with _phi_lock:
        if len(_phi_table) <= limit:
            size = limit + 1
            tab = list(range(size))
            for p in range(2, size):
                if tab[p] == p:  # p prime
                    for k in range(p, size, p):
                        tab[k] -= tab[k] // p
            _phi_table = tab
        return _phi_table


def cyclotomic_indices(max_degree: int) -> list:
    """All m >= 1 with phi(m) <= max_degree, ascending.

    phi(m) >= sqrt(m/2), so enumerating m <= 2*max_degree^2 + 1 is
    provably complete.
    """
    if max_degree < 1:
        return []
    bound = 2 * max_degree * max_degree + 1
    tab = _phi_sieve_upto(bound)
    return [m for m in range(1, bound + 1) if tab[m] <= max_degree]


@dataclass(frozen=True)
class CyclotomicFactorization:
    """f = residual * prod over (m -> multiplicity) of cyclotomic(m)^mult."""

    cyclotomic_part: dict
    residual: IntPoly

    def reassemble(self) -> IntPoly:
        out = self.residual
        for m, k in self.cyclotomic_part.items():
            out = out * cyclotomic(m) ** k
        return out


@lru_cache(maxsize=None)
def _cyclo_probe_values(m: int) -> tuple:
    cs = list(_cyclotomic_coeffs(m))
    return (kernels.eval_at(cs, 2, 1), kernels.eval_at(cs, -2, 1))


def strip_cyclotomic(f: IntPoly) -> CyclotomicFactorization:
    """Divide out every cyclotomic factor of f, with multiplicities.

    Candidate indices m run over everything with phi(m) <= deg(f); each
    candidate is screened by the integer divisibility tests
    cyclotomic(m)(2) | f(2) and cyclotomic(m)(-2) | f(-2) before any
    polynomial division is attempted, so the quadratic-time divisions
    only run for genuine (or near-genuine) factors.
    """
    if f.is_zero():
        raise ValueError("cannot strip the zero polynomial")
    residual = list(f.coeffs)
    found: dict = {}
    if len(residual) - 1 < 1:
        return CyclotomicFactorization({}, IntPoly(residual))
    v2 = kernels.eval_at(residual, 2, 1)
    vm2 = kernels.eval_at(residual, -2, 1)
    for m in cyclotomic_indices(len(residual) - 1):
        if euler_phi(m) > len(residual) - 1:
            continue
        p2, pm2 = _cyclo_probe_values(m)
        if v2 != 0 and v2 % p2:
            continue
        if vm2 != 0 and vm2 % pm2:
            continue
        phim = list(_cyclotomic_coeffs(m))
        while True:
            q = kernels.exact_div(residual, phim)
            if q is None:
                break
            residual = q
            found[m] = found.get(m, 0) + 1
            v2 = kernels.eval_at(residual, 2, 1)
            vm2 = kernels.eval_at(residual, -2, 1)
        if len(residual) == 1:
            break
    return CyclotomicFactorization(found, IntPoly(residual))


# ---------------------------------------------------------------------------
# Sturm sequences and real root counting


@dataclass(frozen=True)
class RootCount:
    """Exact count of distinct real roots in the open interval."""

    interval: tuple
    count: int


def _sign(v) -> int:
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


class SturmChain:
    """Negated-remainder chain of a polynomial with primitive reduction.

    Chain elements equal the classical Sturm sequence entries up to
    positive constants, which leaves every sign computation intact while
    keeping coefficient growth near subresultant bounds.
    """

    def __init__(self, f: IntPoly):
        if f.is_zero():
            raise ValueError("Sturm chain of the zero polynomial")
        chain = [_primitive_keep_sign(list(f.coeffs))]
        if f.degree >= 1:
            chain.append(_primitive_keep_sign(list(f.derivative().coeffs)))
            while chain[-1]:
                a, b = chain[-2], chain[-1]
                delta = len(a) - len(b)  # = deg a - deg b, both nonzero
                r = kernels.prem(a, b)
                if b[-1] < 0 and (delta + 1) % 2 == 1:
                    # prem scaled by a negative constant; flip back so the
                    # entry is a positive multiple of the true remainder
                    r = [-c for c in r]
                r = [-c for c in r]
                chain.append(_primitive_keep_sign(r))
            chain.pop()
        self.chain = chain
        self.poly = f

    def is_squarefree(self) -> bool:
        # last chain element is gcd(f, f') up to constants
        return len(self.chain) == 1 or len(self.chain[-1]) == 1

    def variations_at(self, point: Endpoint) -> int:
        signs = []
        if point == inf:
            for p in self.chain:
                signs.append(_sign(p[-1]))
        elif point == -inf:
            for p in self.chain:
                s = _sign(p[-1])
                if (len(p) - 1) % 2 == 1:
                    s = -s
                signs.append(s)
        else:
            frac = Fraction(point)
            num, den = frac.numerator, frac.denominator
            for p in self.chain:
                signs.append(_sign(kernels.eval_at(p, num, den)))
        count = 0
        prev = 0
        for s in signs:
            if s == 0:
                continue
            if prev and s != prev:
                count += 1
            prev = s
        return count

    def count_open(self, lo: Endpoint, hi: Endpoint) -> int:
        """Distinct real roots in the open interval (lo, hi)."""
        n = self.variations_at(lo) - self.variations_at(hi)
        if hi not in (inf, -inf):
            if self.poly.evaluate(Fraction(hi)) == 0:
                n -= 1  # V(lo) - V(hi) counts the half-open (lo, hi]
        return n


def count_real_roots(f: IntPoly, lo: Endpoint, hi: Endpoint) -> RootCount:
    """Exact number of distinct real roots of squarefree f in open (lo, hi).

    Endpoints are exact rationals, or the +/- inf sentinels which are
    resolved by leading-coefficient signs.  Raises NotSquarefree when
    gcd(f, f') is nonconstant.
    """
    if f.is_zero():
        raise ValueError("root count of the zero polynomial")
    if not _endpoint_less(lo, hi):
        raise ValueError("empty interval: need lo < hi")
    chain = SturmChain(f)
    if not chain.is_squarefree():
        raise NotSquarefree(f"gcd(f, f') is nonconstant for {f}")
    return RootCount((lo, hi), chain.count_open(lo, hi))


def _endpoint_less(lo: Endpoint, hi: Endpoint) -> bool:
    if lo == -inf:
        return hi != -inf
    if lo == inf:
        return False
    if hi == inf:
        return True
    if hi == -inf:
        return False
    return Fraction(lo) < Fraction(hi)


# ---------------------------------------------------------------------------
# trace form: F(x) = x^d Q(x + 1/x + 2)


def to_trace_form(p: IntPoly) -> IntPoly:
    """The unique monic Q of degree d with p(x) = x^d Q(x + 1/x + 2).

    Requires p monic, reciprocal, of even degree 2d.  Uses the recurrence
    z_0 = 2, z_1 = t, z_{k+1} = t z_k - z_{k-1} expressing x^k + x^{-k}
    as a polynomial in t = x + 1/x, then substitutes t = y - 2.
    """
    if not p.is_monic():
        raise NotMonic(f"monic polynomial required: {p}")
    if not p.is_reciprocal():
        raise NotReciprocal(f"reciprocal polynomial required: {p}")
    if p.degree % 2 != 0:
        raise OddDegree(f"even degree required: {p}")
    d = p.degree // 2
    a = p.coeffs
    # G(t) = a_d + sum_{k>=1} a_{d+k} z_k(t)
    g = [a[d]]
    zprev = [2]
    zcur = [0, 1]
    for k in range(1, d + 1):
        c = a[d + k]
        if c:
            while len(g) < len(zcur):
                g.append(0)
            for i, zc in enumerate(zcur):
                g[i] += c * zc
        if k < d:
            znext = kernels.mul([0, 1], zcur)
            for i, zc in enumerate(zprev):
                znext[i] -= zc
            zprev, zcur = zcur, znext
    # substitute t = y - 2 by Horner over Z[y]
    out: list = []
    for c in reversed(g):
        out = kernels.mul(out, [-2, 1])
        if c:
            if out:
                out[0] += c
            else:
                out = [c]
    return IntPoly(out)


def from_trace_form(q: IntPoly) -> IntPoly:
    """x^deg(q) * q(x + 1/x + 2): monic reciprocal of degree 2*deg(q)."""
    if not q.is_monic():
        raise NotMonic(f"monic polynomial required: {q}")
    d = q.degree
    # sum of b_k (x+1)^(2k) x^(d-k)
    out: list = []
    pw = [1]  # (x+1)^(2k)
    sq = [1, 2, 1]
    for k, c in enumerate(q.coeffs):
        if c:
            term = [0] * (d - k) + [c * v for v in pw]
            if len(out) < len(term):
                out += [0] * (len(term) - len(out))
            for i, v in enumerate(term):
                out[i] += v
        if k < d:
            pw = kernels.mul(pw, sq)
    return IntPoly(out)


# ---------------------------------------------------------------------------
# Salem certification


VERDICT_SALEM = "salem"
VERDICT_NO_SALEM = "no-salem-factor"
VERDICT_QUADRATIC = "quadratic-factor"
VERDICT_NOT_SQUAREFREE = "not-squarefree"
VERDICT_NOT_SALEM = "not-salem"


@dataclass(frozen=True)
class SalemCertificate:
    """Machine-checkable verdict of `certify_salem`.

    For the "salem" verdict, `salem_poly` is the minimal polynomial of a
    Salem number of the stated degree and trace; `cyclotomic_part` maps
    stripped cyclotomic indices to multiplicities; the two root counts
    are the Sturm evidence on the trace form (degree-d totally real
    polynomial with count_mid roots in (0,4) and count_high in (4,inf)).
    """

    input: IntPoly
    verdict: str
    cyclotomic_part: dict
    degree: Optional[int] = None
    trace: Optional[int] = None
    count_mid: Optional[RootCount] = None
    count_high: Optional[RootCount] = None
    salem_poly: Optional[IntPoly] = None
    detail: str = ""

    @property
    def is_salem(self) -> bool:
        return self.verdict == VERDICT_SALEM


def certify_salem(f: IntPoly) -> SalemCertificate:
    """Decide whether f is a Salem polynomial times a cyclotomic factor.

    Pipeline: check monic and reciprocal; strip every cyclotomic factor;
    a constant residual means no Salem factor at all.  Otherwise the
    residual must be reciprocal of even degree 2d >= 4; its trace form
    must be squarefree with exactly one root in (4, inf) and d-1 roots
    in (0, 4).  When that holds the residual is irreducible - a proper
    factor would either keep all roots on the unit circle (then it is
    cyclotomic by Kronecker's theorem, but those were stripped) or be a
    smaller Salem-type factor and break the root counts - so it is the
    minimal polynomial of a Salem number, recorded with its degree and
    trace.  A degree-2 residual is the reciprocal-quadratic-unit case,
    reported as its own verdict rather than Salem (Salem numbers have
    degree >= 4).
    """
    if not f.is_monic():
        raise NotMonic(f"monic polynomial with integer coefficients required: {f}")
    if not f.is_reciprocal():
        raise NotReciprocal(f"reciprocal polynomial required: {f}")
    fact = strip_cyclotomic(f)
    residual = fact.residual
    cyc = dict(fact.cyclotomic_part)
    if residual.degree == 0:
        return SalemCertificate(f, VERDICT_NO_SALEM, cyc, detail="all factors cyclotomic")
    if not residual.is_reciprocal() or residual.degree % 2:
        # cannot happen for reciprocal input; kept as a guard for callers
        return SalemCertificate(f, VERDICT_NOT_SALEM, cyc, detail="non-reciprocal residual")
    d = residual.degree // 2
    q = to_trace_form(residual)
    chain = SturmChain(q)
    if not chain.is_squarefree():
        return SalemCertificate(f, VERDICT_NOT_SQUAREFREE, cyc, detail="trace form not squarefree")
    mid = RootCount((0, 4), chain.count_open(0, 4))
    high = RootCount((4, inf), chain.count_open(4, inf))
    if residual.degree == 2:
        return SalemCertificate(
            f,
            VERDICT_QUADRATIC,
            cyc,
            degree=2,
            trace=residual.trace(),
            count_mid=mid,
            count_high=high,
            salem_poly=residual,
            detail="reciprocal quadratic residual",
        )
    if high.count == 1 and mid.count == d - 1:
        return SalemCertificate(
            f,
            VERDICT_SALEM,
            cyc,
            degree=residual.degree,
            trace=residual.trace(),
            count_mid=mid,
            count_high=high,
            salem_poly=residual,
        )
    return SalemCertificate(
        f,
        VERDICT_NOT_SALEM,
        cyc,
        degree=residual.degree,
        trace=residual.trace(),
        count_mid=mid,
        count_high=high,
        salem_poly=residual,
        detail=f"root counts (0,4)={mid.count}, (4,inf)={high.count}, need ({d - 1}, 1)",
    )


def symmetric_halve(p: IntPoly) -> IntPoly:
    """q with p(x) = x^d q(x + 1/x + 2) for reciprocal p of even degree 2d.

    Same transform as `to_trace_form` but without the monic requirement
    (the leading coefficient carries over), used for interlacing checks
    on non-monic reciprocal polynomials.
    """
    if not p.is_reciprocal():
        raise NotReciprocal(f"reciprocal polynomial required: {p}")
    if p.degree % 2 != 0:
        raise OddDegree(f"even degree required: {p}")
    d = p.degree // 2
    a = p.coeffs
    g = [a[d]]
    zprev = [2]
    zcur = [0, 1]
    for k in range(1, d + 1):
        c = a[d + k]
        if c:
            while len(g) < len(zcur):
                g.append(0)
            for i, zc in enumerate(zcur):
                g[i] += c * zc
        if k < d:
            znext = kernels.mul([0, 1], zcur)
            for i, zc in enumerate(zprev):
                znext[i] -= zc
            zprev, zcur = zcur, znext
    out: list = []
    for c in reversed(g):
        out = kernels.mul(out, [-2, 1])
        if c:
            if out:
                out[0] += c
            else:
                out = [c]
    return IntPoly(out)


def isolate_real_roots(f: IntPoly, lo, hi) -> list:
    """Disjoint rational intervals isolating every distinct root in (lo, hi).

    f must be squarefree and nonzero at the finite endpoints.  Returns a
    list of (a, b) pairs in ascending order; a == b marks an exact
    rational root.  Pure bisection, with Sturm counts certifying that
    each interval holds exactly one root.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if f.evaluate(lo) == 0 or f.evaluate(hi) == 0:
        raise ValueError("endpoints must not be roots")
    chain = SturmChain(f)
    if not chain.is_squarefree():
        raise NotSquarefree(f"{f}")

    out = []

    def rec(a, b, cnt):
        if cnt == 0:
            return
        if cnt == 1:
            out.append((a, b))
            return
        m = (a + b) / 2
        if f.evaluate(m) == 0:
            cl = chain.count_open(a, m)
            rec(a, m, cl)
            out.append((m, m))
            rec(m, b, cnt - cl - 1)
        else:
            cl = chain.count_open(a, m)
            rec(a, m, cl)
            rec(m, b, cnt - cl)

    rec(lo, hi, chain.count_open(lo, hi))
    return out

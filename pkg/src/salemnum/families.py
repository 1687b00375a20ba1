"""Salem-candidate constructions from prime tuples.

The constructions assemble a rational function Q(x)/P(x) as a sum of
quotients of products of x^k - 1 terms (plus one hard-coded degree-8
pair), reduce the fraction to lowest terms, and return

    f(x) = (x^2 - 1) P(x) - x Q(x).

For the seven-tuple family with free parameter n the result has degree
n + p1 + ... + p7 - 5 and trace -3; for the quadruples the degree is
p1 + p2 + p3 + p4 + 6.  Outcomes are classified against the trichotomy:
Salem minimal polynomial, Salem times cyclotomic, or reciprocal
quadratic times cyclotomic.

Fractions are reduced exactly: every denominator in sight has a fully
known cyclotomic factorization, so gcd cancellation is performed by
trial division against that factor list, which is provably complete and
far cheaper than a generic remainder-sequence gcd at these degrees.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

from .errors import (
    InadmissibleN,
    NotCoprime,
    SharedRoot,
    UnexpectedShape,
    UnknownQuadruple,
)
from . import kernels, tables
from .polycore import (
    IntPoly,
    SalemCertificate,
    SturmChain,
    VERDICT_NO_SALEM,
    VERDICT_QUADRATIC,
    VERDICT_SALEM,
    _cyclotomic_coeffs,
    _divisors,
    certify_salem,
    div_exact,
    gcd_poly,
    isolate_real_roots,
    symmetric_halve,
)


# ---------------------------------------------------------------------------
# tuple types


@dataclass(frozen=True)
class SevenTuple:
    """Seven pairwise-coprime integers >= 2 driving an infinite family."""

    primes: tuple

    def __post_init__(self):
        ps = self.primes
        if len(ps) != 7 or any(p < 2 for p in ps):
            raise ValueError("seven integers >= 2 required")
        for i in range(7):
            for j in range(i + 1, 7):
                if gcd(ps[i], ps[j]) != 1:
                    raise ValueError(f"entries {ps[i]}, {ps[j]} are not coprime")

    @property
    def total(self) -> int:
        return sum(self.primes)

    @property
    def product(self) -> int:
        out = 1
        for p in self.primes:
            out *= p
        return out

    @property
    def degree_offset(self) -> int:
        """Degree of the family member at parameter n is n + this."""
        return self.total - 5

    def admissible(self, n: int) -> bool:
        return n >= 2 and gcd(n, self.product) == 1

    def admissible_values(self, count: int, start: int = 2):
        """The first `count` admissible n, ascending from `start`."""
        out = []
        n = start
        while len(out) < count:
            if self.admissible(n):
                out.append(n)
            n += 1
        return out


@dataclass(frozen=True)
class Quadruple:
    primes: tuple

    def __post_init__(self):
        ps = self.primes
        if len(ps) != 4 or any(p < 2 for p in ps):
            raise ValueError("four integers >= 2 required")

    @property
    def total(self) -> int:
        return sum(self.primes)


SEVEN_TUPLES = tuple(SevenTuple(row) for row in tables.load_tuple_rows("seven_tuples.txt"))
QUADRUPLES = tuple(Quadruple(row) for row in tables.load_tuple_rows("quadruples.txt"))

# The sporadic interlacing pair of degree 8, hard-coded verbatim
# (ascending coefficients).  The second one factors as
# (x-1)(x+1)(x^2+x+1)(x^4+x^3+x^2+x+1), which the loader self-checks.
SPORADIC_NUM = (1, 1, 0, -1, -1, -1, 0, 1, 1)
SPORADIC_DEN = (-1, -2, -2, -1, 0, 1, 2, 2, 1)
_SPORADIC_DEN_FACTORS = Counter({1: 1, 2: 1, 3: 1, 5: 1})


def _self_check_sporadic():
    prod = [1]
    for m, k in _SPORADIC_DEN_FACTORS.items():
        for _ in range(k):
            prod = kernels.mul(prod, list(_cyclotomic_coeffs(m)))
    if tuple(prod) != SPORADIC_DEN:
        raise AssertionError("sporadic pair transcription check failed")


_self_check_sporadic()


# ---------------------------------------------------------------------------
# exact fraction assembly


def _x_pow_minus_one(k: int) -> list:
    return [-1] + [0] * (k - 1) + [1]


@dataclass(frozen=True)
class _Summand:
    num: tuple
    den: tuple
    den_factors: Counter  # cyclotomic index -> multiplicity, full factorization


def _pair_summand(m: int, n: int) -> _Summand:
    """(x^(m+n) - 1) / ((x^m - 1)(x^n - 1))."""
    den = kernels.mul(_x_pow_minus_one(m), _x_pow_minus_one(n))
    factors = Counter()
    for d in _divisors(m):
        factors[d] += 1
    for d in _divisors(n):
        factors[d] += 1
    return _Summand(tuple(_x_pow_minus_one(m + n)), tuple(den), factors)


def _fraction_sum(summands):
    """Sum the quotients over a common denominator; no reduction yet."""
    dens = [list(s.den) for s in summands]
    D = [1]
    for den in dens:
        D = kernels.mul(D, den)
    N: list = []
    for i, s in enumerate(summands):
        term = list(s.num)
        for j, den in enumerate(dens):
            if j != i:
                term = kernels.mul(term, den)
        if len(N) < len(term):
            N += [0] * (len(term) - len(N))
        for k, c in enumerate(term):
            N[k] += c
    while N and not N[-1]:
        N.pop()
    factors = Counter()
    for s in summands:
        factors += s.den_factors
    return N, D, factors


def _reduce_fraction(N, D, factors):
    """Cancel gcd(N, D) by trial division against D's known factor list."""
    cancelled = Counter()
    for m in sorted(factors):
        phim = list(_cyclotomic_coeffs(m))
        for _ in range(factors[m]):
            qn = kernels.exact_div(N, phim)
            if qn is None:
                break
            qd = kernels.exact_div(D, phim)
            if qd is None:
                raise AssertionError("denominator factor list inconsistent")
            N, D = qn, qd
            cancelled[m] += 1
    remaining = factors - cancelled
    return N, D, cancelled, remaining


def _assemble(summands):
    """Reduced pair (P, Q) with Q/P the summed quotient, plus cancel info."""
    N, D, factors = _fraction_sum(summands)
    N, D, cancelled, remaining = _reduce_fraction(N, D, factors)
    return IntPoly(D), IntPoly(N), cancelled, remaining


def _salem_combination(P: IntPoly, Q: IntPoly) -> IntPoly:
    return IntPoly([-1, 0, 1]) * P - Q.shift_mul(1)


# ---------------------------------------------------------------------------
# public constructions


def interlacing_summand(m: int, n: int):
    """The circular-interlacing pair Q = (x^m-1)(x^n-1)/(x-1),
    P = (x^(m+n)-1)/(x-1) for coprime m, n."""
    if m < 1 or n < 1:
        raise ValueError("positive integers required")
    if gcd(m, n) != 1:
        raise NotCoprime(f"gcd({m},{n}) != 1")
    xm1 = IntPoly([-1, 1])
    q = IntPoly(kernels.mul(_x_pow_minus_one(m), _x_pow_minus_one(n)))
    return div_exact(q, xm1), div_exact(IntPoly(_x_pow_minus_one(m + n)), xm1)


def seven_tuple_poly(t: SevenTuple, n: int) -> IntPoly:
    """The degree n + p1 + ... + p7 - 5 family member at parameter n.

    n must be >= 2 and coprime to the full product p1...p7.  The output
    is asserted monic, reciprocal, of the stated degree, with trace -3
    and constant term 1.
    """
    if not t.admissible(n):
        raise InadmissibleN(f"n={n} inadmissible for {t.primes}")
    ps = t.primes
    summands = [
        _pair_summand(ps[0], ps[1]),
        _pair_summand(ps[2], ps[3]),
        _pair_summand(ps[4], ps[5]),
        _pair_summand(ps[6], n),
    ]
    P, Q, _, _ = _assemble(summands)
    f = _salem_combination(P, Q)
    expected = n + t.degree_offset
    assert f.degree == expected, f"degree {f.degree} != {expected}"
    assert f.is_monic() and f.is_reciprocal(), "construction lost reciprocity"
    assert f.trace() == -3, f"trace {f.trace()} != -3"
    assert f.coeffs[0] == 1, "constant term != 1"
    return f


def quad_poly(q: Quadruple) -> IntPoly:
    """The degree p1+p2+p3+p4+6 Salem polynomial of a listed quadruple."""
    if q not in QUADRUPLES:
        raise UnknownQuadruple(f"{q.primes} is not one of the ten quadruples")
    ps = q.primes
    summands = [
        _Summand(SPORADIC_NUM, SPORADIC_DEN, Counter(_SPORADIC_DEN_FACTORS)),
        _pair_summand(ps[0], ps[1]),
        _pair_summand(ps[2], ps[3]),
    ]
    P, Q, _, _ = _assemble(summands)
    f = _salem_combination(P, Q)
    expected = q.total + 6
    assert f.degree == expected, f"degree {f.degree} != {expected}"
    assert f.is_monic() and f.is_reciprocal(), "construction lost reciprocity"
    assert f.trace() == -3, f"trace {f.trace()} != -3"
    return f


def quartic_family(n: int) -> IntPoly:
    """x^4 - n x^3 - (2n+1) x^2 - n x + 1; Salem of trace n for n >= 1."""
    if n < 0:
        raise ValueError("nonnegative n required")
    return IntPoly([1, -n, -(2 * n + 1), -n, 1])


# ---------------------------------------------------------------------------
# outcome classification


KIND_SALEM_MINIMAL = "SalemMinimal"
KIND_SALEM_TIMES_CYCLOTOMIC = "SalemTimesCyclotomic"
KIND_QUADRATIC_TIMES_CYCLOTOMIC = "QuadraticTimesCyclotomic"
KIND_NO_SALEM_FACTOR = "NoSalemFactor"


@dataclass(frozen=True)
class ConstructionOutcome:
    kind: str
    certificate: Optional[SalemCertificate]
    stripped: dict


def classify(f: IntPoly) -> ConstructionOutcome:
    """Map a constructed polynomial onto the three-way outcome.

    SalemMinimal when the certificate is Salem with nothing stripped,
    SalemTimesCyclotomic when cyclotomic factors were stripped first,
    QuadraticTimesCyclotomic for a reciprocal quadratic residual, and
    NoSalemFactor when everything was cyclotomic.  Any other residual
    signals an implementation bug, not a mathematical possibility.
    """
    cert = certify_salem(f)
    if cert.verdict == VERDICT_SALEM:
        kind = KIND_SALEM_MINIMAL if not cert.cyclotomic_part else KIND_SALEM_TIMES_CYCLOTOMIC
        return ConstructionOutcome(kind, cert, dict(cert.cyclotomic_part))
    if cert.verdict == VERDICT_QUADRATIC:
        return ConstructionOutcome(KIND_QUADRATIC_TIMES_CYCLOTOMIC, cert, dict(cert.cyclotomic_part))
    if cert.verdict == VERDICT_NO_SALEM:
        return ConstructionOutcome(KIND_NO_SALEM_FACTOR, cert, dict(cert.cyclotomic_part))
    raise UnexpectedShape(f"residual fits no expected case: {cert.verdict} ({cert.detail})")


# ---------------------------------------------------------------------------
# circular interlacing verification


def _circle_side_data(poly: IntPoly):
    """Decompose one side of an interlacing pair for the alternation check.

    Returns (has_root_at_1, has_root_at_minus_1, halved) where halved is
    the polynomial in y = x + 1/x + 2 whose roots in (0, 4) carry the
    conjugate root pairs on the open upper unit circle, or None when the
    side cannot satisfy the condition (repeated or off-circle roots).
    """
    rest = poly
    mult1 = 0
    while rest.evaluate(1) == 0:
        rest = div_exact(rest, IntPoly([-1, 1]))
        mult1 += 1
        if mult1 > 1:
            return None
    mult2 = 0
    while rest.evaluate(-1) == 0:
        rest = div_exact(rest, IntPoly([1, 1]))
        mult2 += 1
        if mult2 > 1:
            return None
    if not rest.is_reciprocal() or rest.degree % 2:
        return None
    halved = symmetric_halve(rest)
    if halved.degree > 0:
        chain = SturmChain(halved)
        if not chain.is_squarefree():
            return None
        if chain.count_open(0, 4) != halved.degree:
            return None  # some conjugate pair is off the unit circle
    return (mult1 == 1, mult2 == 1, halved)


def verify_circular_interlacing(ms) -> bool:
    """Check strict root alternation on the unit circle for a summed pair.

    `ms` is a list of coprime (m, n) pairs; the combined (P, Q) comes
    from exact quotient addition.  All roots of both sides must lie on
    the unit circle, which is verified by mapping each side through
    y = x + 1/x + 2 and counting real roots in (0, 4) with Sturm
    sequences; alternation is then decided by exact root isolation of
    the combined halved polynomial.  (For a single summand the roots
    are roots of unity, but summed numerators are not monic, so their
    circle roots are not rational angles and factoring into cyclotomics
    cannot decide this; the Sturm route is exact in every case.)

    Raises SharedRoot when P and Q are not coprime after reduction.
    """
    if not ms:
        raise ValueError("at least one pair required")
    for m, n in ms:
        if gcd(m, n) != 1:
            raise NotCoprime(f"gcd({m},{n}) != 1")
    summands = [_pair_summand(m, n) for m, n in ms]
    P, Q, _, _ = _assemble(summands)
    if P == Q:
        raise SharedRoot("P and Q are identical")
    g = gcd_poly(P, Q)
    if g.degree > 0:
        raise SharedRoot(f"P and Q share the factor {g}")
    if P.degree != Q.degree or P.degree == 0:
        return False
    dp = _circle_side_data(P)
    dq = _circle_side_data(Q)
    if dp is None or dq is None:
        return False
    p_at_1, p_at_m1, hp = dp
    q_at_1, q_at_m1, hq = dq
    # strict alternation around the circle forces a root of PQ at both
    # x = 1 and x = -1 (owned by exactly one side; coprimality already
    # rules out joint ownership)
    if not (p_at_1 or q_at_1) or not (p_at_m1 or q_at_m1):
        return False
    product = hp * hq
    labels = ["P" if p_at_1 else "Q"]  # y = 4 end, angle 0
    if product.degree > 0:
        intervals = isolate_real_roots(product, 0, 4)
        chain_p = SturmChain(hp) if hp.degree > 0 else None
        for a, b in reversed(intervals):  # descending y = ascending angle
            if a == b:
                owner = "P" if hp.evaluate(a) == 0 else "Q"
            else:
                # isolation endpoints can themselves be (other) roots, so
                # decide ownership by an exact count, not endpoint signs
                inside = chain_p.count_open(a, b) if chain_p else 0
                owner = "P" if inside == 1 else "Q"
            labels.append(owner)
    labels.append("P" if p_at_m1 else "Q")  # y = 0 end, angle pi
    return all(labels[i] != labels[i + 1] for i in range(len(labels) - 1))

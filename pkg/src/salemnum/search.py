"""CRT search for totally positive trace-form polynomials of Salem type.

The target is a monic degree-d polynomial P~ with prescribed trace T
(default 2d-3), all roots real, exactly one in (4, inf) and the rest in
(0, 4); then x^d P~(x + 1/x + 2) is a Salem polynomial of degree 2d and
trace T - 2d.  Candidates are assembled from residues P_i modulo
auxiliary polynomials Q_i (the halved forms of cyclotomic polynomials,
with from_trace_form(Q_i) equal to the cyclotomic polynomial exactly)
chosen so that Res(Q_i, P_i) = +-1, glued by polynomial CRT, and lifted
to degree d with the trace fixed:

    P~ = (x - T + t) Q + P,   Q = prod Q_i,   t = trace(Q).

Residues come either from bounded brute-force coefficient enumeration
or from products of real cyclotomic units u * e_1^a_1 ... with |a_j|
bounded; both streams re-verify every emitted residue by an actual
resultant computation.  The search is a pure function of its
configuration: enumeration is in graded order and results are
deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, inf
from typing import Iterator, Optional

from . import kernels
from .errors import DegenerateIndex, DegreeMismatch, ModuliNotCoprime
from .polycore import (
    IntPoly,
    SalemCertificate,
    SturmChain,
    VERDICT_SALEM,
    certify_salem,
    cyclotomic,
    from_trace_form,
    gcd_poly,
    resultant,
    to_trace_form,
)

STRATEGY_UNITS = "units"
STRATEGY_BRUTE = "brute"


# ---------------------------------------------------------------------------
# auxiliary moduli


@dataclass(frozen=True)
class AuxModulus:
    """Index m plus the halved cyclotomic polynomial Q of degree phi(m)/2."""

    m: int
    poly: IntPoly


def real_cyclotomic(m: int) -> AuxModulus:
    """The degree phi(m)/2 polynomial Q with from_trace_form(Q) = Phi_m."""
    if m < 3:
        raise DegenerateIndex(f"m={m}: phi(m) is odd, no halved form")
    q = to_trace_form(cyclotomic(m))
    if from_trace_form(q) != cyclotomic(m):
        raise AssertionError("halved cyclotomic self-check failed")
    return AuxModulus(m, q)


# ---------------------------------------------------------------------------
# rational-coefficient helpers (ext gcd / inversion modulo a modulus)


def _frac(p: IntPoly) -> list:
    return [Fraction(c) for c in p.coeffs]


def _ftrim(a: list) -> list:
    while a and not a[-1]:
        a.pop()
    return a


def _fdivmod(a: list, b: list):
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    q = [Fraction(0)] * max(len(a) - db, 0)
    while len(a) - 1 >= db and a:
        k = len(a) - 1 - db
        c = a[-1] / lb
        q[k] = c
        for i in range(db + 1):
            a[i + k] -= c * b[i]
        _ftrim(a)
        if len(a) - 1 < db:
            break
    return _ftrim(q), _ftrim(a)


def _fmulmod(a: list, b: list, mod: list) -> list:
    prod = [Fraction(0)] * (len(a) + len(b) - 1) if a and b else []
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                prod[i + j] += ca * cb
    _, r = _fdivmod(_ftrim(prod), mod)
    return r


def _finverse_mod(a: list, mod: list) -> Optional[list]:
    """Inverse of a modulo mod over Q, or None when gcd is nonconstant."""
    r0, r1 = list(mod), list(a)
    s0, s1 = [], [Fraction(1)]
    while r1:
        q, r = _fdivmod(r0, r1)
        s = _fsub(s0, _fmul(q, s1))
        r0, s0, r1, s1 = r1, s1, r, s
    if len(r0) != 1:
        return None
    c = r0[0]
    return _ftrim([v / c for v in s0])


def _fmul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _ftrim(out)


def _fsub(a: list, b: list) -> list:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _ftrim(out)


def _to_int_poly(a: list) -> Optional[IntPoly]:
    out = []
    for c in a:
        f = Fraction(c)
        if f.denominator != 1:
            return None
        out.append(f.numerator)
    return IntPoly(out)


# ---------------------------------------------------------------------------
# residue streams


def _verify_unit_residue(q: AuxModulus, p: IntPoly) -> bool:
    if p.is_zero() or p.degree >= q.poly.degree:
        return False
    return resultant(q.poly, p) in (1, -1)


def _brute_stream(q: AuxModulus, coeff_bound: int) -> Iterator[IntPoly]:
    """All residues with coefficients in [-B, B], graded by |coeff| sum.

    Enumerated lazily grade by grade (lexicographic within a grade), so
    large coefficient spaces never materialize up front.
    """
    d = q.poly.degree
    for grade in range(0, coeff_bound * d + 1):
        for vec in _signed_vectors(d, grade, coeff_bound):
            p = IntPoly(list(vec))
            if _verify_unit_residue(q, p):
                yield p


def _halved_power_basis_mod(q: AuxModulus, a: int) -> list:
    """x^a + x^-a + 2 expressed in y = x + 1/x + 2, reduced mod Q."""
    # w_k = x^k + x^-k as a polynomial in y: w_0 = 2, w_1 = y - 2,
    # w_{k+1} = (y - 2) w_k - w_{k-1}; reduction mod the monic Q keeps
    # everything integral.
    mod = list(q.poly.coeffs)
    wprev = [2]
    wcur = [-2, 1]
    if a == 0:
        return wprev
    for _ in range(a - 1):
        wnext = kernels.mul([-2, 1], wcur)
        if len(wnext) < len(wprev):
            wnext += [0] * (len(wprev) - len(wnext))
        for i, c in enumerate(wprev):
            wnext[i] -= c
        while wnext and not wnext[-1]:
            wnext.pop()
        wnext = _int_mod(wnext, mod)
        wprev, wcur = wcur, wnext
    return wcur


def _int_mod(a: list, mod: list) -> list:
    """Remainder of a modulo a monic modulus, exact over Z."""
    a = list(a)
    db = len(mod) - 1
    while len(a) - 1 >= db and a:
        k = len(a) - 1 - db
        c = a[-1]
        for i in range(db + 1):
            a[i + k] -= c * mod[i]
        while a and not a[-1]:
            a.pop()
    return a


def _unit_generators(q: AuxModulus) -> list:
    """Real cyclotomic unit generators as integer residues mod Q.

    For 1 < a < m/2 with gcd(a, m) = 1, the element
    (z^a - 1)(z^-a - 1) / ((z - 1)(z^-1 - 1)) = (2 - w_a) / (2 - w_1)
    is a unit; there are phi(m)/2 - 1 = deg(Q) - 1 of them.
    """
    m = q.m
    mod = list(q.poly.coeffs)
    fmod = _frac(q.poly)
    den = [Fraction(4), Fraction(-1)]  # 2 - w_1 = 4 - y
    inv_den = _finverse_mod(den, fmod)
    if inv_den is None:
        raise AssertionError("4 - y not invertible modulo Q")
    gens = []
    for a in range(2, (m + 1) // 2):
        if gcd(a, m) != 1:
            continue
        w = _halved_power_basis_mod(q, a)
        num = [-c for c in w]
        if num:
            num[0] += 2
        else:
            num = [2]
        g = _fmulmod([Fraction(c) for c in _int_mod(num, mod)], inv_den, fmod)
        gp = _to_int_poly(g)
        if gp is None:
            raise AssertionError("cyclotomic unit is not integral")
        gens.append(gp)
    return gens


def _unit_stream(q: AuxModulus, unit_bound: int) -> Iterator[IntPoly]:
    """Products u * prod gens^a with u = +-1 and |a_j| < unit_bound.

    Exponent vectors run in graded lexicographic order by sum |a_j|;
    each emitted residue is re-verified by an actual resultant
    computation and deduplicated within the stream.
    """
    mod = list(q.poly.coeffs)
    fmod = _frac(q.poly)
    gens = _unit_generators(q)
    pow_cache = []
    for gp in gens:
        inv = _finverse_mod(_frac(gp), fmod)
        if inv is None:
            raise AssertionError("unit generator not invertible")
        invp = _to_int_poly(inv)
        if invp is None:
            raise AssertionError("unit inverse not integral")
        pows = {0: [1], 1: list(gp.coeffs), -1: list(invp.coeffs)}
        pow_cache.append(pows)

    def power(j: int, e: int) -> list:
        pows = pow_cache[j]
        if e in pows:
            return pows[e]
        step = 1 if e > 0 else -1
        base = pows[step]
        prev = power(j, e - step)
        pows[e] = _int_mod(kernels.mul(prev, base), mod)
        return pows[e]

    r = len(gens)
    seen = set()
    max_grade = (unit_bound - 1) * r
    for grade in range(0, max_grade + 1):
        for signed in _signed_vectors(r, grade, unit_bound - 1):
            prod = [1]
            for j, e in enumerate(signed):
                if e:
                    prod = _int_mod(kernels.mul(prod, power(j, e)), mod)
            for u in (1, -1):
                p = IntPoly([u * c for c in prod])
                if p.coeffs in seen:
                    continue
                seen.add(p.coeffs)
                if _verify_unit_residue(q, p):
                    yield p


def _signed_vectors(r: int, grade: int, bound: int):
    """Integer vectors of length r with sum |e_j| = grade, |e_j| <= bound."""
    if r == 0:
        if grade == 0:
            yield ()
        return
    for head in range(-min(grade, bound), min(grade, bound) + 1):
        for rest in _signed_vectors(r - 1, grade - abs(head), bound):
            yield (head,) + rest


def residue_candidates(
    q: AuxModulus,
    unit_bound: int = 3,
    strategy: str = STRATEGY_UNITS,
    coeff_bound: int = 3,
) -> Iterator[IntPoly]:
    """Residues P with deg P < deg Q and Res(Q, P) = +-1."""
    if strategy == STRATEGY_BRUTE:
        if coeff_bound < 1:
            raise ValueError("coefficient bound >= 1 required")
        return _brute_stream(q, coeff_bound)
    if strategy == STRATEGY_UNITS:
        if unit_bound < 1:
            raise ValueError("unit exponent bound >= 1 required")
        return _unit_stream(q, unit_bound)
    raise ValueError(f"unknown strategy {strategy!r}")


# ---------------------------------------------------------------------------
# CRT and trace lift


def poly_crt(residues) -> Optional[IntPoly]:
    """Solve P = P_i (mod Q_i) over Q; None (skip) when not integral.

    The rational solution modulo prod Q_i always exists for pairwise
    coprime moduli, but nothing forces integer coefficients for
    arbitrary residues; non-integral solutions are skipped rather than
    raised, matching the retry-with-other-residues search flow.
    """
    residues = list(residues)
    if not residues:
        raise ValueError("at least one congruence required")
    if len(residues) == 1:
        p, _ = residues[0]
        return p
    mods = [q for _, q in residues]
    total = mods[0]
    for q in mods[1:]:
        total = total * q
    ftotal = _frac(total)
    acc: list = []
    for p, q in residues:
        fq = _frac(q)
        fn, rem = _fdivmod(list(ftotal), fq)
        if rem:
            raise AssertionError("modulus product not divisible")
        minv = _finverse_mod(fn, fq)
        if minv is None:
            raise ModuliNotCoprime(f"{q} shares a factor with another modulus")
        term = _fmul(_fmul(_frac(p), minv), fn)
        acc = _fsub(acc, [-c for c in term])
        _, acc = _fdivmod(acc, ftotal)
    return _to_int_poly(acc)


def lift_trace(q: IntPoly, p: IntPoly, d: int, target_trace: Optional[int] = None) -> IntPoly:
    """P~ = (x - T + t) Q + P, monic of degree d with trace exactly T."""
    if not q.is_monic() or q.degree != d - 1:
        raise DegreeMismatch(f"modulus must be monic of degree {d - 1}")
    if p.degree >= d - 1:
        raise DegreeMismatch("residue degree must be below deg Q")
    t = q.trace() if q.degree >= 1 else 0
    big_t = 2 * d - 3 if target_trace is None else target_trace
    lin = IntPoly([t - big_t, 1])
    out = lin * q + p
    assert out.degree == d and out.is_monic() and out.trace() == big_t
    return out


# ---------------------------------------------------------------------------
# candidate verdicts


@dataclass(frozen=True)
class Candidate:
    poly: IntPoly  # the degree-d trace-form polynomial
    residues: tuple  # ((m, P_i), ...) provenance
    exponents: tuple  # per modulus: (sign, exponent vector) or stream index
    salem_poly: Optional[IntPoly] = None
    certificate: Optional[SalemCertificate] = None


@dataclass(frozen=True)
class CandidateVerdict:
    accepted: bool
    reason: str
    certificate: Optional[SalemCertificate] = None
    salem_poly: Optional[IntPoly] = None


def check_polynomial(ptilde: IntPoly, d: int, target_trace: Optional[int] = None) -> CandidateVerdict:
    """Full acceptance pipeline for a degree-d trace-form candidate.

    Requires all d roots real and simple, exactly one in (4, inf) and
    d - 1 in (0, 4); then certifies x^d P~(x + 1/x + 2) as a Salem
    minimal polynomial, which simultaneously certifies irreducibility
    of P~ (a proper factor would induce a cyclotomic or smaller Salem
    factor upstairs).
    """
    big_t = 2 * d - 3 if target_trace is None else target_trace
    if ptilde.degree != d or not ptilde.is_monic():
        return CandidateVerdict(False, "wrong degree or not monic")
    if ptilde.trace() != big_t:
        return CandidateVerdict(False, f"trace {ptilde.trace()} != {big_t}")
    chain = SturmChain(ptilde)
    if not chain.is_squarefree():
        return CandidateVerdict(False, "not squarefree")
    if chain.count_open(-inf, inf) != d:
        return CandidateVerdict(False, "not totally real")
    if chain.count_open(4, inf) != 1 or chain.count_open(0, 4) != d - 1:
        return CandidateVerdict(False, "root location pattern failed")
    salem = from_trace_form(ptilde)
    cert = certify_salem(salem)
    ok = (
        cert.verdict == VERDICT_SALEM
        and not cert.cyclotomic_part
        and cert.degree == 2 * d
        and cert.trace == big_t - 2 * d
    )
    if not ok:
        return CandidateVerdict(False, f"certification failed: {cert.verdict}", cert)
    return CandidateVerdict(True, "salem", cert, salem)


def check_candidate(c: Candidate, target_trace: Optional[int] = None) -> CandidateVerdict:
    return check_polynomial(c.poly, c.poly.degree, target_trace)


# ---------------------------------------------------------------------------
# search driver


@dataclass
class SearchConfig:
    d: int  # half degree: the Salem polynomial has degree 2d
    moduli: tuple  # AuxModulus list, degrees summing to d - 1
    target_trace: Optional[int] = None  # trace of P~, default 2d - 3
    strategy: str = STRATEGY_UNITS
    unit_bound: int = 3
    coeff_bound: int = 3
    budget: int = 100_000

    def __post_init__(self):
        if self.d < 2:
            raise ValueError("half degree d >= 2 required")
        if self.budget < 1:
            raise ValueError("budget >= 1 required")
        total = sum(q.poly.degree for q in self.moduli)
        if total != self.d - 1:
            raise ValueError(
                f"modulus degrees sum to {total}, need d - 1 = {self.d - 1}"
            )
        for a, b in itertools.combinations(self.moduli, 2):
            if gcd_poly(a.poly, b.poly).degree > 0:
                raise ModuliNotCoprime(f"moduli {a.m} and {b.m} share a factor")

    @property
    def trace_target(self) -> int:
        return 2 * self.d - 3 if self.target_trace is None else self.target_trace


@dataclass
class SearchStats:
    examined: int = 0
    crt_skips: int = 0
    rejections: dict = field(default_factory=dict)
    accepted: int = 0


class _StreamCache:
    def __init__(self, it: Iterator[IntPoly]):
        self._it = it
        self._items: list = []
        self._done = False

    def get(self, idx: int) -> Optional[IntPoly]:
        while not self._done and len(self._items) <= idx:
            try:
                self._items.append(next(self._it))
            except StopIteration:
                self._done = True
        return self._items[idx] if idx < len(self._items) else None

    def known_len(self) -> int:
        return len(self._items) if self._done else -1


def _index_tuples(r: int, caches):
    """Index tuples in graded order (sum, then lex), respecting stream ends."""
    grade = 0
    while True:
        emitted = False
        exhausted_all = all(c.known_len() >= 0 for c in caches)
        if exhausted_all:
            max_grade = sum(max(c.known_len() - 1, 0) for c in caches)
            if grade > max_grade:
                return
        for combo in _compositions(r, grade):
            vals = []
            ok = True
            for j, idx in enumerate(combo):
                v = caches[j].get(idx)
                if v is None:
                    ok = False
                    break
                vals.append(v)
            if ok:
                emitted = True
                yield combo, vals
        if not emitted and exhausted_all:
            return
        grade += 1


def _compositions(r: int, total: int):
    if r == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(r - 1, total - head):
            yield (head,) + rest


def run_search(cfg: SearchConfig, stats: Optional[SearchStats] = None) -> list:
    """Deterministic search: residues -> CRT -> trace lift -> certification.

    Enumerates combinations of per-modulus residues in increasing total
    grade, up to cfg.budget combinations, and returns the accepted
    candidates (deduplicated by the lifted polynomial) in encounter
    order.
    """
    if stats is None:
        stats = SearchStats()
    mods = list(cfg.moduli)
    big_q = mods[0].poly
    for m in mods[1:]:
        big_q = big_q * m.poly
    caches = [
        _StreamCache(
            residue_candidates(
                m,
                unit_bound=cfg.unit_bound,
                strategy=cfg.strategy,
                coeff_bound=cfg.coeff_bound,
            )
        )
        for m in mods
    ]
    accepted = []
    seen = set()
    for combo, residues in _index_tuples(len(mods), caches):
        if stats.examined >= cfg.budget:
            break
        stats.examined += 1
        crt = poly_crt(list(zip(residues, [m.poly for m in mods])))
        if crt is None:
            stats.crt_skips += 1
            continue
        ptilde = lift_trace(big_q, crt, cfg.d, cfg.trace_target)
        if ptilde.coeffs in seen:
            continue
        verdict = check_polynomial(ptilde, cfg.d, cfg.trace_target)
        if verdict.accepted:
            seen.add(ptilde.coeffs)
            stats.accepted += 1
            accepted.append(
                Candidate(
                    poly=ptilde,
                    residues=tuple((m.m, p) for m, p in zip(mods, residues)),
                    exponents=combo,
                    salem_poly=verdict.salem_poly,
                    certificate=verdict.certificate,
                )
            )
        else:
            stats.rejections[verdict.reason] = stats.rejections.get(verdict.reason, 0) + 1
    return accepted

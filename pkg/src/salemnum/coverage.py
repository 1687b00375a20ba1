"""Residue-class coverage of attainable degrees, and minimality checks.

A tuple t = (2, p2, ..., p7) with degree offset s = sum(t) - 5 attains
the even degree D = n + s exactly when n = D - s is >= 2 and coprime to
the tuple product.  Whether a residue class r (mod q) is attained by t
therefore depends only on r mod p for the odd primes p of t:

    r attained by t  <=>  r != s (mod p) for every odd p in t,

and both n and n + q stay admissible, so an attained class is attained
by infinitely many degrees.  The scan below streams all even residue
classes modulo q = product of the distinct tuple primes in fixed-size
blocks, marking the classes each tuple covers with numpy stride tricks;
one pass produces the full coverage verdict and, because a per-tuple
cover mask is kept, every drop-one verdict as well.  Results are exact
and identical regardless of the block size.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Optional

import numpy as np

from .families import SevenTuple

_SMALL_PRIME_POOL = (5, 7, 11, 13, 17, 19, 23)
DEFAULT_BLOCK = 1 << 24


def _validate_scan_tuples(tuples):
    if not tuples:
        raise ValueError("at least one tuple required")
    for t in tuples:
        evens = [p for p in t.primes if p % 2 == 0]
        if evens != [2]:
            raise ValueError(f"{t.primes}: scan needs exactly one even entry equal to 2")
        for p in t.primes:
            if p != 2 and not _is_prime(p):
                raise ValueError(f"{t.primes}: entry {p} is not prime")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def scan_modulus(tuples) -> int:
    """Product of the distinct primes appearing across the tuples."""
    primes = sorted({p for t in tuples for p in t.primes})
    q = 1
    for p in primes:
        q *= p
    return q


def _tuple_marks(t: SevenTuple):
    """(p, forbidden k-residue) pairs: residue r = 2k misses t iff k hits one."""
    s = t.degree_offset
    marks = []
    for p in t.primes:
        if p == 2:
            continue  # r even, s odd: the parity condition always holds
        inv2 = pow(2, -1, p)
        marks.append((p, (s * inv2) % p))
    return marks


def _scan_blocks(tuples, q: int, block_size: int, visit):
    """Stream cover masks over all even residues mod q.

    visit(k0, mask): mask[i] has bit j set iff residue 2*(k0+i) is
    attained by tuples[j].
    """
    if len(tuples) > 32:
        raise ValueError("mask scan supports at most 32 tuples")
    half = q // 2
    marks = [_tuple_marks(t) for t in tuples]
    for k0 in range(0, half, block_size):
        size = min(block_size, half - k0)
        mask = np.zeros(size, np.uint32)
        bad = np.empty(size, bool)
        for j, mk in enumerate(marks):
            bad[:] = False
            for p, c in mk:
                bad[(c - k0) % p :: p] = True
            mask |= (~bad).astype(np.uint32) << np.uint32(j)
        visit(k0, mask)


# ---------------------------------------------------------------------------
# arithmetic-only attainment helpers


def attained_degrees(tuples, bound: int) -> list:
    """Sorted degrees n + sum(t) - 5 <= bound over admissible n per tuple."""
    if bound < 2:
        raise ValueError("bound >= 2 required")
    out = set()
    for t in tuples:
        s = t.degree_offset
        prod = t.product
        for n in range(2, bound - s + 1):
            if gcd(n, prod) == 1:
                out.add(n + s)
    return sorted(out)


def attains_at_level(tuples, degree: int) -> Optional[tuple]:
    """A (tuple_index, n) witness with n = degree - s >= 2, or None."""
    for i, t in enumerate(tuples):
        n = degree - t.degree_offset
        if n >= 2 and gcd(n, t.product) == 1:
            return (i, n)
    return None


def minimal_witness(tuples, q: int, residue: int) -> Optional[tuple]:
    """Minimal-degree witness (tuple_index, n, degree) for a residue mod q."""
    best = None
    for i, t in enumerate(tuples):
        n = (residue - t.degree_offset) % q
        if n < 2:
            n += q
        if gcd(n, t.product) != 1:
            continue
        deg = n + t.degree_offset
        if best is None or deg < best[2]:
            best = (i, n, deg)
    return best


# ---------------------------------------------------------------------------
# full coverage report


@dataclass(frozen=True)
class Witness:
    residue: int
    tuple_index: int
    n: int
    degree: int


@dataclass(frozen=True)
class CoverageReport:
    modulus: int
    tuple_count: int
    even_classes: int
    missed_count: int
    missed_sample: tuple
    threshold: Optional[int]
    exceptional_small: tuple
    witnesses: tuple

    @property
    def complete(self) -> bool:
        return self.missed_count == 0


def coverage_report(tuples, block_size: int = DEFAULT_BLOCK, sample_limit: int = 32) -> CoverageReport:
    """Exact attainment verdict for every even residue class mod q.

    When every class is attained, the finitely many even degrees missed
    overall are exactly the even r below max(s_t)+2 that no tuple
    attains with n = r - s_t >= 2 directly; the threshold is the
    largest of them and the attained degrees below it are the
    exceptional small degrees.
    """
    tuples = list(tuples)
    _validate_scan_tuples(tuples)
    q = scan_modulus(tuples)
    missed_count = 0
    missed_sample: list = []

    def visit(k0, mask):
        nonlocal missed_count
        zero = np.flatnonzero(mask == 0)
        missed_count += int(zero.size)
        if len(missed_sample) < sample_limit and zero.size:
            take = zero[: sample_limit - len(missed_sample)]
            missed_sample.extend(int(2 * (k0 + i)) for i in take)

    _scan_blocks(tuples, q, block_size, visit)

    threshold = None
    exceptional: list = []
    if missed_count == 0:
        level_limit = max(t.degree_offset for t in tuples) + 3
        not_attained = [
            r for r in range(0, level_limit + 1, 2) if attains_at_level(tuples, r) is None
        ]
        threshold = max(not_attained) if not_attained else 0
        exceptional = [
            r
            for r in range(2, threshold, 2)
            if attains_at_level(tuples, r) is not None
        ]

    wit: list = []
    seen = set()
    sample_residues = list(exceptional[:8])
    sample_residues += [2 * k for k in range(1, 4)]
    sample_residues += [(2 * (17 + 101 * i)) % q for i in range(5)]
    for r in sample_residues:
        r %= q
        if r in seen:
            continue
        seen.add(r)
        w = minimal_witness(tuples, q, r)
        if w is not None:
            wit.append(Witness(r, w[0], w[1], w[2]))
    return CoverageReport(
        modulus=q,
        tuple_count=len(tuples),
        even_classes=q // 2,
        missed_count=missed_count,
        missed_sample=tuple(missed_sample),
        threshold=threshold,
        exceptional_small=tuple(exceptional),
        witnesses=tuple(wit),
    )


# ---------------------------------------------------------------------------
# minimality certificates


@dataclass(frozen=True)
class DropOneResult:
    dropped_index: int
    uncovered_count: int
    uncovered_sample: tuple


def minimality_drop_one(tuples, block_size: int = DEFAULT_BLOCK, sample_limit: int = 8) -> list:
    """Uncovered residue sets after omitting each tuple in turn.

    One combined scan keeps the per-tuple cover mask, so the residues
    covered by exactly one tuple fall out of the same pass as the
    baseline; the result for dropped index j collects the classes
    covered by nothing or only by tuple j.
    """
    tuples = list(tuples)
    _validate_scan_tuples(tuples)
    q = scan_modulus(tuples)
    m = len(tuples)
    base_missed = 0
    base_sample: list = []
    only_counts = [0] * m
    only_samples: list = [[] for _ in range(m)]

    def visit(k0, mask):
        nonlocal base_missed
        zero = np.flatnonzero(mask == 0)
        base_missed += int(zero.size)
        if zero.size and len(base_sample) < sample_limit:
            base_sample.extend(int(2 * (k0 + i)) for i in zero[: sample_limit - len(base_sample)])
        singles = (mask & (mask - 1)) == 0
        singles &= mask != 0
        vals = mask[singles]
        if vals.size:
            uniq, cnts = np.unique(vals, return_counts=True)
            for v, c in zip(uniq, cnts):
                j = int(v).bit_length() - 1
                only_counts[j] += int(c)
            for j in range(m):
                if len(only_samples[j]) < sample_limit and only_counts[j]:
                    idx = np.flatnonzero(mask == np.uint32(1 << j))
                    if idx.size:
                        only_samples[j].extend(
                            int(2 * (k0 + i)) for i in idx[: sample_limit - len(only_samples[j])]
                        )

    _scan_blocks(tuples, q, block_size, visit)

    out = []
    for j in range(m):
        cnt = base_missed + only_counts[j]
        if cnt:
            sample = tuple((base_sample + only_samples[j])[:sample_limit])
            out.append(DropOneResult(j, cnt, sample))
    return out


@dataclass(frozen=True)
class SmallPrimeCertificate:
    modulus: int
    tuple_count: int
    missed_count: int
    missed_sample: tuple
    tuples: tuple


def small_prime_tuples() -> list:
    """Every seven-tuple (2, 3, p3..p7) with distinct p_i from primes < 29."""
    return [
        SevenTuple((2, 3) + combo) for combo in combinations(_SMALL_PRIME_POOL, 5)
    ]


def minimality_small_primes(block_size: int = DEFAULT_BLOCK, sample_limit: int = 32) -> SmallPrimeCertificate:
    """Missed even residue classes for the union of all small-prime tuples.

    The union over all candidate tuples is the strongest reading: a
    class missed by the union is missed by every sub-collection, and a
    missed class mod q' = 2*3*...*23 pins infinitely many even degrees
    (n and n + q' are both admissible or both not).
    """
    tuples = small_prime_tuples()
    q = scan_modulus(tuples)
    missed_count = 0
    missed_sample: list = []

    def visit(k0, mask):
        nonlocal missed_count
        zero = np.flatnonzero(mask == 0)
        missed_count += int(zero.size)
        if zero.size and len(missed_sample) < sample_limit:
            missed_sample.extend(int(2 * (k0 + i)) for i in zero[: sample_limit - len(missed_sample)])

    _scan_blocks(tuples, q, block_size, visit)
    return SmallPrimeCertificate(
        modulus=q,
        tuple_count=len(tuples),
        missed_count=missed_count,
        missed_sample=tuple(missed_sample),
        tuples=tuple(t.primes for t in tuples),
    )

"""Contract and property tests for the exact polynomial core."""

import random
from fractions import Fraction
from math import gcd, inf

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import (
    float_count_in,
    random_intpoly,
    random_monic_reciprocal,
    sylvester_resultant,
)
from salemnum.errors import (
    NotDivisible,
    NotMonic,
    NotReciprocal,
    NotSquarefree,
    OddDegree,
)
from salemnum.polycore import (
    IntPoly,
    SturmChain,
    certify_salem,
    count_real_roots,
    cyclotomic,
    cyclotomic_indices,
    div_exact,
    euler_phi,
    format_poly,
    from_trace_form,
    gcd_poly,
    isolate_real_roots,
    parse_poly,
    resultant,
    squarefree_part,
    strip_cyclotomic,
    to_trace_form,
)

intpolys = st.lists(st.integers(-(2**64), 2**64), min_size=1, max_size=41).map(IntPoly)


# ---------------------------------------------------------------------------
# ring operations


@given(a=intpolys, b=intpolys, c=intpolys)
@settings(max_examples=60)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


def test_mul_examples():
    assert IntPoly([1, 1]) * IntPoly([-1, 1]) == IntPoly([-1, 0, 1])
    assert IntPoly([1, 0, 1]) * IntPoly([1, -1, 1]) == IntPoly([1, -1, 2, -1, 1])
    p = IntPoly([3, 1, 4])
    assert p + IntPoly.zero() == p


def test_div_exact():
    assert div_exact(IntPoly([-1, 0, 1]), IntPoly([-1, 1])) == IntPoly([1, 1])
    with pytest.raises(NotDivisible):
        div_exact(IntPoly([1, 0, 1]), IntPoly([-1, 1]))
    prod = cyclotomic(1) * cyclotomic(2) * cyclotomic(4)
    assert div_exact(prod, cyclotomic(4)) == IntPoly([-1, 0, 1])


def test_parse_format_roundtrip():
    assert parse_poly("1,-3,1") == IntPoly([1, -3, 1])
    assert parse_poly(" 1 , -3 , 1 ") == IntPoly([1, -3, 1])
    assert format_poly(IntPoly([1, -3, 1])) == "1,-3,1"
    with pytest.raises(ValueError):
        parse_poly("")


# ---------------------------------------------------------------------------
# resultants


def test_resultant_examples():
    assert resultant(IntPoly([-2, 1]), IntPoly([-3, 1])) == -1
    assert resultant(IntPoly([-2, 0, 1]), IntPoly([-3, 0, 1])) == 1
    a = IntPoly([2, 5, 1, 7])
    assert resultant(a, a) == 0


def test_resultant_against_sylvester_oracle(rng):
    for _ in range(120):
        a = random_intpoly(rng, 6, 20)
        b = random_intpoly(rng, 6, 20)
        assert resultant(a, b) == sylvester_resultant(a, b), (a, b)


def test_resultant_swap_sign(rng):
    for _ in range(60):
        a = random_intpoly(rng, 5, 15)
        b = random_intpoly(rng, 5, 15)
        ra, rb = resultant(a, b), resultant(b, a)
        assert ra == (-1) ** (a.degree * b.degree) * rb


# ---------------------------------------------------------------------------
# cyclotomic machinery


def test_cyclotomic_values():
    assert cyclotomic(1) == IntPoly([-1, 1])
    assert cyclotomic(6) == IntPoly([1, -1, 1])
    assert cyclotomic(12) == IntPoly([1, 0, -1, 0, 1])
    assert cyclotomic(105).degree == euler_phi(105)


@pytest.mark.parametrize("m", list(range(1, 121)))
def test_cyclotomic_product_identity(m):
    prod = IntPoly([1])
    for d in range(1, m + 1):
        if m % d == 0:
            prod = prod * cyclotomic(d)
    assert prod == IntPoly.x_pow_minus_one(m)


def test_cyclotomic_indices_complete():
    idx = cyclotomic_indices(10)
    for m in range(1, 201):
        assert (euler_phi(m) <= 10) == (m in idx)


def test_strip_cyclotomic_examples():
    f = cyclotomic(4) * cyclotomic(6)
    out = strip_cyclotomic(f)
    assert out.cyclotomic_part == {4: 1, 6: 1}
    assert out.residual == IntPoly([1])

    out = strip_cyclotomic(IntPoly([1, -3, 1]))
    assert out.cyclotomic_part == {}
    assert out.residual == IntPoly([1, -3, 1])

    f = IntPoly([-1, 1]) ** 2 * IntPoly([1, -3, 1])
    out = strip_cyclotomic(f)
    assert out.cyclotomic_part == {1: 2}
    assert out.residual == IntPoly([1, -3, 1])


def test_strip_cyclotomic_random_products(rng):
    for _ in range(25):
        ms = [rng.choice([1, 2, 3, 4, 5, 6, 8, 12]) for _ in range(rng.randint(0, 3))]
        residual = IntPoly([rng.choice([1, -2, 3]), rng.randint(-4, 4), 1])
        if strip_cyclotomic(residual).cyclotomic_part:
            continue  # rare: the random quadratic itself was cyclotomic
        f = residual
        for m in ms:
            f = f * cyclotomic(m)
        out = strip_cyclotomic(f)
        assert out.reassemble() == f
        # residual carries no remaining cyclotomic divisor
        for m in cyclotomic_indices(out.residual.degree):
            if euler_phi(m) <= out.residual.degree:
                with pytest.raises(NotDivisible):
                    div_exact(out.residual, cyclotomic(m))


# ---------------------------------------------------------------------------
# Sturm counting


def test_count_examples():
    assert count_real_roots(IntPoly([1, -4, 1]), 0, 4).count == 2
    assert count_real_roots(IntPoly([-5, 1]), 4, inf).count == 1
    with pytest.raises(NotSquarefree):
        count_real_roots(IntPoly([-1, 1]) * IntPoly([-1, 1]), -inf, inf)


def test_count_open_interval_endpoints():
    # roots at the open interval boundary are not counted
    p = IntPoly([-4, 1]) * IntPoly([-2, 1])  # roots 2, 4
    assert count_real_roots(p, 0, 4).count == 1
    assert count_real_roots(p, 2, 4).count == 0
    assert count_real_roots(p, Fraction(3, 2), inf).count == 2


def test_sturm_vs_constructed_roots(rng):
    """Grid-free oracle: polynomials with known distinct integer roots."""
    for _ in range(200):
        k = rng.randint(1, 7)
        roots = rng.sample(range(-30, 31), k)
        p = IntPoly([1])
        for r in roots:
            p = p * IntPoly([-r, 1])
        assert count_real_roots(p, -inf, inf).count == k
        lo = rng.randint(-35, 0)
        hi = rng.randint(1, 36)
        expect = sum(lo < r < hi for r in roots)
        assert count_real_roots(p, lo, hi).count == expect


def test_sturm_vs_bisection_oracle(rng):
    """Sign-change bisection on a fine grid agrees with the Sturm count."""
    for _ in range(40):
        k = rng.randint(2, 6)
        roots = sorted(rng.sample(range(-20, 21), k))
        p = IntPoly([1])
        for r in roots:
            p = p * IntPoly([-r, 1])
        # distinct integer roots: half-integer grid separates them all
        changes = 0
        prev = None
        x = Fraction(-41, 2)
        while x <= Fraction(41, 2):
            v = p.evaluate(x)
            s = 1 if v > 0 else -1
            if prev is not None and s != prev:
                changes += 1
            prev = s
            x += Fraction(1, 2)
        assert changes == count_real_roots(p, -inf, inf).count


def test_isolate_real_roots(rng):
    for _ in range(20):
        k = rng.randint(1, 6)
        roots = sorted(rng.sample(range(-15, 16), k))
        p = IntPoly([1])
        for r in roots:
            p = p * IntPoly([-r, 1])
        iv = isolate_real_roots(p, Fraction(-33, 2), Fraction(33, 2))
        assert len(iv) == k
        for (a, b), r in zip(iv, roots):
            assert a <= r <= b


# ---------------------------------------------------------------------------
# trace forms


def test_trace_form_examples():
    assert to_trace_form(IntPoly([1, -3, 1])) == IntPoly([-5, 1])
    assert to_trace_form(IntPoly([1, 0, -1, 0, 1])) == IntPoly([1, -4, 1])
    assert from_trace_form(IntPoly([-5, 1])) == IntPoly([1, -3, 1])
    assert from_trace_form(IntPoly([-4, 1])) == IntPoly([1, -2, 1])
    with pytest.raises(NotReciprocal):
        to_trace_form(IntPoly([2, -3, 1]))
    with pytest.raises(OddDegree):
        to_trace_form(IntPoly([1, 1]))
    with pytest.raises(NotMonic):
        to_trace_form(IntPoly([2, 3, 2]))


def test_trace_form_roundtrip(rng):
    for _ in range(100):
        p = random_monic_reciprocal(rng, rng.randint(1, 10))
        assert from_trace_form(to_trace_form(p)) == p


def test_trace_relation(rng):
    """trace(from_trace_form(q)) = trace(q) - 2 deg(q)."""
    for _ in range(10):
        d = rng.randint(1, 8)
        q = IntPoly([rng.randint(-9, 9) for _ in range(d)] + [1])
        f = from_trace_form(q)
        assert f.trace() == q.trace() - 2 * d


# ---------------------------------------------------------------------------
# certification


def test_certify_quartic():
    cert = certify_salem(IntPoly([1, -1, -3, -1, 1]))
    assert cert.verdict == "salem"
    assert cert.degree == 4 and cert.trace == 1
    assert cert.cyclotomic_part == {}


def test_certify_cyclotomic_only():
    cert = certify_salem(cyclotomic(5))
    assert cert.verdict == "no-salem-factor"


def test_certify_errors():
    with pytest.raises(NotMonic):
        certify_salem(IntPoly([1, 3, 2]))
    with pytest.raises(NotReciprocal):
        certify_salem(IntPoly([2, 3, 1]))


def test_certified_salem_invariants(rng):
    """Sign pattern at +-1 and totally-real trace form for certified Salems."""
    from salemnum.families import quartic_family, quad_poly, QUADRUPLES

    polys = [quartic_family(n) for n in (1, 2, 7)] + [quad_poly(QUADRUPLES[0])]
    for f in polys:
        cert = certify_salem(f)
        assert cert.verdict == "salem"
        s = cert.salem_poly
        assert s.is_reciprocal()
        assert s.evaluate(1) < 0 and s.evaluate(-1) > 0
        q = to_trace_form(s)
        assert count_real_roots(q, -inf, inf).count == q.degree


def test_gcd_and_squarefree(rng):
    a = IntPoly([1, 2, 1])  # (x+1)^2
    b = IntPoly([-1, 0, 1])  # (x-1)(x+1)
    assert gcd_poly(a, b) == IntPoly([1, 1])
    f = IntPoly([-1, 1]) ** 3 * IntPoly([1, 1])
    assert squarefree_part(f) == IntPoly([-1, 0, 1])


def test_corpus_degree34_root_counts():
    """Sturm counts on the degree-34 corpus trace form, float-checked."""
    from conftest import float_count_in
    from salemnum.cli import corpus_rows

    row = corpus_rows()[0]
    q = to_trace_form(row.poly)
    mid = count_real_roots(q, 0, 4)
    high = count_real_roots(q, 4, inf)
    assert (mid.count, high.count) == (16, 1)
    assert float_count_in(q, 0.0, 4.0) == 16


def test_cyclotomic_memo_thread_safety():
    import threading

    import salemnum.polycore as pc

    pc._cyclotomic_coeffs.cache_clear()
    results = [None] * 8
    def work(k):
        acc = []
        for m in range(1, 121):
            acc.append(cyclotomic(m))
        results[k] = acc
    threads = [threading.Thread(target=work, args=(k,)) for k in range(8)]
    for th in threads:
        th.start()
    for th in threads:
        th.join()
    assert all(r == results[0] for r in results)


def test_trace_form_roundtrip_other_direction(rng):
    """to_trace_form(from_trace_form(q)) recovers monic q up to degree 20."""
    for _ in range(60):
        d = rng.randint(1, 20)
        q = IntPoly([rng.randint(-9, 9) for _ in range(d)] + [1])
        assert to_trace_form(from_trace_form(q)) == q

"""Tests for the CRT/unit search pipeline."""

import pytest

from salemnum.errors import DegenerateIndex, DegreeMismatch, ModuliNotCoprime
from salemnum.polycore import (
    IntPoly,
    certify_salem,
    cyclotomic,
    from_trace_form,
    resultant,
    to_trace_form,
)
from salemnum.search import (
    AuxModulus,
    Candidate,
    SearchConfig,
    SearchStats,
    check_polynomial,
    lift_trace,
    poly_crt,
    real_cyclotomic,
    residue_candidates,
    run_search,
)
from salemnum.tables import load_corpus_rows


def test_real_cyclotomic_values():
    assert real_cyclotomic(3).poly == IntPoly([-1, 1])
    assert real_cyclotomic(4).poly == IntPoly([-2, 1])
    assert real_cyclotomic(12).poly == IntPoly([1, -4, 1])
    with pytest.raises(DegenerateIndex):
        real_cyclotomic(2)
    with pytest.raises(DegenerateIndex):
        real_cyclotomic(1)


def test_real_cyclotomic_selfcheck_and_roots():
    from salemnum.polycore import count_real_roots

    for m in (3, 4, 5, 7, 8, 12, 15, 16):
        aux = real_cyclotomic(m)
        assert from_trace_form(aux.poly) == cyclotomic(m)
        # all roots real, in (0, 4)
        assert count_real_roots(aux.poly, 0, 4).count == aux.poly.degree


def test_brute_stream_linear_modulus():
    """For Q = y - c only the constants +-1 have unit resultant."""
    q3 = real_cyclotomic(3)
    got = [tuple(p.coeffs) for p in residue_candidates(q3, strategy="brute", coeff_bound=4)]
    assert got == [(-1,), (1,)]  # graded order, lexicographic within a grade


def test_brute_stream_quadratic_modulus():
    q12 = real_cyclotomic(12)
    got = [tuple(p.coeffs) for p in residue_candidates(q12, strategy="brute", coeff_bound=4)]
    assert (-4, 1) in got  # Res(y^2 - 4y + 1, y - 4) = 1
    assert (-1, 1) not in got  # Res(y^2 - 4y + 1, y - 1) = -2
    for cs in got:
        assert resultant(q12.poly, IntPoly(cs)) in (1, -1)


def test_unit_stream_verified(rng):
    for m in (5, 12, 15):
        aux = real_cyclotomic(m)
        count = 0
        for p in residue_candidates(aux, strategy="units", unit_bound=3):
            assert p.degree < aux.poly.degree
            assert resultant(aux.poly, p) in (1, -1)
            count += 1
        assert count >= 2  # at least +-1


def test_poly_crt_examples():
    out = poly_crt([(IntPoly([1]), IntPoly([-1, 1])), (IntPoly([-1]), IntPoly([-2, 1]))])
    assert out == IntPoly([3, -2])
    assert out.evaluate(1) == 1 and out.evaluate(2) == -1
    # single modulus: unchanged
    assert poly_crt([(IntPoly([7]), IntPoly([-1, 1]))]) == IntPoly([7])
    # non-integral solution: skip, not error
    assert poly_crt([(IntPoly([0]), IntPoly([-1, 1])), (IntPoly([1]), IntPoly([1, 1]))]) is None
    with pytest.raises(ModuliNotCoprime):
        poly_crt([(IntPoly([0]), IntPoly([-1, 1])), (IntPoly([1]), IntPoly([-1, 1]))])


def test_poly_crt_random_congruences(rng):
    mods = [real_cyclotomic(m).poly for m in (3, 4, 12)]
    for _ in range(20):
        residues = []
        for q in mods:
            residues.append(IntPoly([rng.randint(-9, 9) for _ in range(q.degree)]))
        out = poly_crt(list(zip(residues, mods)))
        if out is None:
            continue
        for p, q in zip(residues, mods):
            diff = out - p
            got = poly_crt([(p, q)])
            # verify out = p mod q by exact division of the difference
            from salemnum.search import _int_mod

            assert _int_mod(list(diff.coeffs), list(q.coeffs)) == []


def test_lift_trace():
    out = lift_trace(IntPoly([-1, 1]), IntPoly([1]), 2)
    assert out == IntPoly([1, -1, 1])
    with pytest.raises(DegreeMismatch):
        lift_trace(IntPoly([-1, 1]), IntPoly([1]), 3)


def test_lift_trace_properties(rng):
    for _ in range(50):
        d = rng.randint(2, 8)
        q = IntPoly([rng.randint(-5, 5) for _ in range(d - 1)] + [1])
        p = IntPoly([rng.randint(-5, 5) for _ in range(rng.randint(0, d - 1))])
        if p.degree >= d - 1:
            continue
        out = lift_trace(q, p, d)
        assert out.degree == d and out.is_monic()
        assert out.trace() == 2 * d - 3


def test_lift_preserves_resultants(rng):
    """Res(Q_i, P~) = +-Res(Q_i, P_i) since P~ = P = P_i mod Q_i."""
    for _ in range(10):
        m1, m2 = rng.choice([(3, 5), (4, 5), (3, 12), (4, 12), (6, 8)])
        a1, a2 = real_cyclotomic(m1), real_cyclotomic(m2)
        p1 = IntPoly([rng.choice([1, -1])])
        p2 = IntPoly([rng.randint(-3, 3) for _ in range(a2.poly.degree)])
        crt = poly_crt([(p1, a1.poly), (p2, a2.poly)])
        if crt is None or p2.is_zero():
            continue
        d = a1.poly.degree + a2.poly.degree + 1
        ptilde = lift_trace(a1.poly * a2.poly, crt, d)
        for aux, res in ((a1, p1), (a2, p2)):
            assert abs(resultant(aux.poly, ptilde)) == abs(resultant(aux.poly, res))


def test_check_polynomial_rejects():
    assert not check_polynomial(IntPoly([1, -1, 1]), 2, 1).accepted  # complex roots
    v = check_polynomial(IntPoly([5, -6, 1]), 2, 1)
    assert not v.accepted and "trace" in v.reason


def test_check_polynomial_accepts_corpus_row():
    rows = dict(load_corpus_rows())
    half = rows[42]
    full = list(half) + list(half[-2::-1])
    salem = IntPoly(full[::-1])
    q = to_trace_form(salem)
    verdict = check_polynomial(q, 21, 2 * 21 - 3)
    assert verdict.accepted
    assert verdict.salem_poly == salem


def test_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(d=4, moduli=(real_cyclotomic(3),))  # degree sum 1 != 3
    with pytest.raises(ModuliNotCoprime):
        SearchConfig(d=3, moduli=(real_cyclotomic(3), real_cyclotomic(3)))
    cfg = SearchConfig(d=4, moduli=(real_cyclotomic(3), real_cyclotomic(5)))
    assert cfg.trace_target == 5


def test_search_quartic_scale():
    cfg = SearchConfig(
        d=2,
        moduli=(real_cyclotomic(3),),
        target_trace=5,
        strategy="brute",
        coeff_bound=1,
        budget=50,
    )
    accepted = run_search(cfg)
    assert accepted
    c = accepted[0]
    assert c.poly == IntPoly([3, -5, 1])
    assert c.salem_poly == IntPoly([1, -1, -1, -1, 1])
    cert = certify_salem(c.salem_poly)
    assert cert.verdict == "salem" and cert.trace == 1


def test_search_degree8_trace_minus1():
    cfg = SearchConfig(
        d=4,
        moduli=(real_cyclotomic(3), real_cyclotomic(5)),
        target_trace=7,
        strategy="units",
        unit_bound=4,
        budget=20000,
    )
    stats = SearchStats()
    accepted = run_search(cfg, stats)
    assert accepted
    for c in accepted:
        cert = certify_salem(c.salem_poly)
        assert cert.verdict == "salem"
        assert cert.degree == 8 and cert.trace == -1
        assert not cert.cyclotomic_part


def test_search_determinism():
    cfg = dict(
        d=4,
        moduli=(real_cyclotomic(3), real_cyclotomic(5)),
        target_trace=7,
        strategy="brute",
        coeff_bound=3,
        budget=5000,
    )
    a = run_search(SearchConfig(**cfg))
    b = run_search(SearchConfig(**cfg))
    assert [c.poly for c in a] == [c.poly for c in b]
    assert [c.residues for c in a] == [c.residues for c in b]

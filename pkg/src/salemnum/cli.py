"""Command-line front end.

Subcommands: gen, verify, appendix-check, coverage, curve-check,
search.  Output is human-readable text by default; --json emits
structured certificates.  Exit codes: 0 all verifications pass,
1 negative mathematical verdict, 2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from math import inf
from typing import Optional

from . import coverage as cov
from . import curvecheck, families, search, tables
from .errors import SalemnumError
from .polycore import (
    IntPoly,
    RootCount,
    SalemCertificate,
    VERDICT_NO_SALEM,
    VERDICT_QUADRATIC,
    VERDICT_SALEM,
    certify_salem,
    format_poly,
    parse_poly,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2


# ---------------------------------------------------------------------------
# embedded corpus


@dataclass(frozen=True)
class CorpusRow:
    """One embedded Salem polynomial, stored as its descending half-row.

    The full coefficient list is recovered through the symmetry
    a_k = a_{2d-k}; every row starts 1, 3, so the expanded polynomial is
    monic with trace -3.
    """

    degree: int
    half: tuple

    @property
    def poly(self) -> IntPoly:
        full_desc = list(self.half) + list(self.half[-2::-1])
        return IntPoly(full_desc[::-1])


def corpus_rows() -> list:
    rows = []
    for degree, half in tables.load_corpus_rows():
        if len(half) != degree // 2 + 1:
            raise SalemnumError(f"corpus row {degree}: bad half-row length")
        if half[0] != 1 or half[1] != 3:
            raise SalemnumError(f"corpus row {degree}: expected leading 1, 3")
        rows.append(CorpusRow(degree, half))
    return rows


# ---------------------------------------------------------------------------
# certificate serialization


def outcome_kind(cert: SalemCertificate) -> str:
    if cert.verdict == VERDICT_SALEM:
        return (
            families.KIND_SALEM_MINIMAL
            if not cert.cyclotomic_part
            else families.KIND_SALEM_TIMES_CYCLOTOMIC
        )
    if cert.verdict == VERDICT_QUADRATIC:
        return families.KIND_QUADRATIC_TIMES_CYCLOTOMIC
    if cert.verdict == VERDICT_NO_SALEM:
        return families.KIND_NO_SALEM_FACTOR
    return cert.verdict


def _endpoint_str(v) -> str:
    if v == inf:
        return "inf"
    if v == -inf:
        return "-inf"
    return str(v)


def _root_count_dict(rc: Optional[RootCount]):
    if rc is None:
        return None
    return {
        "interval": [_endpoint_str(rc.interval[0]), _endpoint_str(rc.interval[1])],
        "count": rc.count,
    }


def certificate_dict(cert: SalemCertificate) -> dict:
    return {
        "polynomial": format_poly(cert.input),
        "verdict": cert.verdict,
        "kind": outcome_kind(cert),
        "degree": cert.degree,
        "trace": cert.trace,
        "cyclotomic_part": {str(k): v for k, v in sorted(cert.cyclotomic_part.items())},
        "root_count_mid": _root_count_dict(cert.count_mid),
        "root_count_high": _root_count_dict(cert.count_high),
        "salem_poly": format_poly(cert.salem_poly) if cert.salem_poly else None,
        "detail": cert.detail,
    }


def _print_certificate(cert: SalemCertificate, as_json: bool):
    if as_json:
        print(json.dumps(certificate_dict(cert), indent=2, sort_keys=True))
        return
    print(f"verdict: {outcome_kind(cert)}")
    if cert.degree is not None:
        print(f"degree: {cert.degree}")
    if cert.trace is not None:
        print(f"trace: {cert.trace}")
    if cert.cyclotomic_part:
        part = " * ".join(
            f"Phi_{m}^{k}" if k > 1 else f"Phi_{m}"
            for m, k in sorted(cert.cyclotomic_part.items())
        )
        print(f"stripped cyclotomic part: {part}")
    if cert.count_mid is not None:
        print(f"trace-form roots in (0,4): {cert.count_mid.count}")
    if cert.count_high is not None:
        print(f"trace-form roots in (4,inf): {cert.count_high.count}")
    if cert.salem_poly is not None and cert.verdict == VERDICT_SALEM:
        print(f"salem polynomial: {format_poly(cert.salem_poly)}")
    if cert.detail:
        print(f"detail: {cert.detail}")


# ---------------------------------------------------------------------------
# subcommands


def cmd_gen(args) -> int:
    if (args.tuple is None) == (args.quad is None):
        print("gen: exactly one of --tuple or --quad is required", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.tuple is not None:
            if not 1 <= args.tuple <= len(families.SEVEN_TUPLES):
                raise SalemnumError(f"tuple index out of range 1..{len(families.SEVEN_TUPLES)}")
            if args.n is None:
                raise SalemnumError("--n is required with --tuple")
            poly = families.seven_tuple_poly(families.SEVEN_TUPLES[args.tuple - 1], args.n)
        else:
            if not 1 <= args.quad <= len(families.QUADRUPLES):
                raise SalemnumError(f"quadruple index out of range 1..{len(families.QUADRUPLES)}")
            poly = families.quad_poly(families.QUADRUPLES[args.quad - 1])
    except SalemnumError as exc:
        print(f"gen: {exc}", file=sys.stderr)
        return EXIT_USAGE
    cert = certify_salem(poly)
    if args.json:
        print(json.dumps(certificate_dict(cert), indent=2, sort_keys=True))
    else:
        print(format_poly(poly))
        _print_certificate(cert, False)
    return EXIT_OK if outcome_kind(cert) == families.KIND_SALEM_MINIMAL else EXIT_NEGATIVE


def cmd_verify(args) -> int:
    try:
        if args.file:
            text = open(args.file).read()
        else:
            text = args.coeffs
        poly = parse_poly(text)
    except (OSError, ValueError) as exc:
        print(f"verify: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        cert = certify_salem(poly)
    except SalemnumError as exc:
        print(f"verify: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _print_certificate(cert, args.json)
    return EXIT_OK if outcome_kind(cert) == families.KIND_SALEM_MINIMAL else EXIT_NEGATIVE


def cmd_appendix_check(args) -> int:
    rows = corpus_rows()
    results = []
    all_ok = True
    for row in rows:
        cert = certify_salem(row.poly)
        d = row.degree // 2
        ok = (
            outcome_kind(cert) == families.KIND_SALEM_MINIMAL
            and cert.degree == row.degree
            and cert.trace == -3
            and cert.count_mid is not None
            and cert.count_mid.count == d - 1
            and cert.count_high is not None
            and cert.count_high.count == 1
        )
        all_ok &= ok
        results.append((row, cert, ok))
    if args.json:
        print(
            json.dumps(
                [
                    {"degree": row.degree, "pass": ok, "certificate": certificate_dict(cert)}
                    for row, cert, ok in results
                ],
                indent=2,
                sort_keys=True,
            )
        )
    else:
        for row, cert, ok in results:
            print(
                f"degree {row.degree:3d}: {'pass' if ok else 'FAIL'} "
                f"({outcome_kind(cert)}, trace {cert.trace}, "
                f"roots (0,4)={cert.count_mid.count if cert.count_mid else '?'}, "
                f"(4,inf)={cert.count_high.count if cert.count_high else '?'})"
            )
        print(f"{sum(ok for _, _, ok in results)}/{len(results)} rows pass")
    return EXIT_OK if all_ok else EXIT_NEGATIVE


def cmd_coverage(args) -> int:
    tuples = families.SEVEN_TUPLES
    if args.tuples:
        try:
            picked = [int(v) for v in args.tuples.split(",")]
            tuples = tuple(families.SEVEN_TUPLES[i - 1] for i in picked)
            if not tuples or any(i < 1 for i in picked):
                raise IndexError
        except (ValueError, IndexError):
            print("coverage: --tuples wants 1-based indices like 1,2,5", file=sys.stderr)
            return EXIT_USAGE
    rep = cov.coverage_report(tuples, block_size=args.block_size)
    payload = {
        "modulus": rep.modulus,
        "tuple_count": rep.tuple_count,
        "even_classes": rep.even_classes,
        "missed_count": rep.missed_count,
        "missed_sample": list(rep.missed_sample),
        "threshold": rep.threshold,
        "exceptional_small": list(rep.exceptional_small),
        "witnesses": [
            {"residue": w.residue, "tuple_index": w.tuple_index, "n": w.n, "degree": w.degree}
            for w in rep.witnesses
        ],
    }
    exit_code = EXIT_OK if rep.complete else EXIT_NEGATIVE
    extras = {}
    if args.drop_one:
        drops = cov.minimality_drop_one(tuples, block_size=args.block_size)
        extras["drop_one"] = [
            {
                "dropped_index": r.dropped_index,
                "uncovered_count": r.uncovered_count,
                "uncovered_sample": list(r.uncovered_sample),
            }
            for r in drops
        ]
        if len(drops) != len(tuples):
            exit_code = EXIT_NEGATIVE
    if args.small_primes:
        cert = cov.minimality_small_primes(block_size=args.block_size)
        extras["small_primes"] = {
            "modulus": cert.modulus,
            "tuple_count": cert.tuple_count,
            "missed_count": cert.missed_count,
            "missed_sample": list(cert.missed_sample),
        }
        if cert.missed_count == 0:
            exit_code = EXIT_NEGATIVE
    if args.json:
        payload.update(extras)
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(f"modulus: {rep.modulus} ({rep.tuple_count} tuples, {rep.even_classes} even classes)")
        print(f"missed residue classes: {rep.missed_count}")
        if rep.missed_sample:
            print(f"  sample: {list(rep.missed_sample)[:8]}")
        print(f"largest non-attained even degree: {rep.threshold}")
        print(f"exceptional small degrees: {list(rep.exceptional_small)}")
        for w in rep.witnesses[:8]:
            print(f"  witness: residue {w.residue} <- tuple {w.tuple_index + 1}, n={w.n}, degree {w.degree}")
        if "drop_one" in extras:
            print("drop-one minimality:")
            for r in extras["drop_one"]:
                print(
                    f"  drop tuple {r['dropped_index'] + 1}: {r['uncovered_count']} uncovered, "
                    f"sample {r['uncovered_sample'][:4]}"
                )
        if "small_primes" in extras:
            sp = extras["small_primes"]
            print(
                f"small-prime tuples (mod {sp['modulus']}): {sp['missed_count']} residues missed "
                f"by all {sp['tuple_count']} candidates, sample {sp['missed_sample'][:4]}"
            )
    return exit_code


def cmd_curve_check(args) -> int:
    if args.tuple is not None:
        if not 1 <= args.tuple <= len(families.SEVEN_TUPLES):
            print("curve-check: tuple index out of range", file=sys.stderr)
            return EXIT_USAGE
        indices = [args.tuple - 1]
    else:
        indices = range(len(families.SEVEN_TUPLES))
    reports = []
    for i in indices:
        reports.append((i, curvecheck.rule_out_cyclotomic_points(families.SEVEN_TUPLES[i])))
    all_pass = all(rep.verdict == "Pass" for _, rep in reports)
    if args.json:
        print(
            json.dumps(
                [
                    {
                        "tuple_index": i,
                        "primes": list(rep.primes),
                        "verdict": rep.verdict,
                        "pairs": [
                            {
                                "pair": p.pair,
                                "case": p.case,
                                "y_elimination_degree": p.y_elimination_degree,
                                "x_elimination_degree": p.x_elimination_degree,
                                "x_side_factors": {str(k): v for k, v in p.x_side_factors.items()},
                                "y_side_factors": {str(k): v for k, v in p.y_side_factors.items()},
                                "unexplained": [list(u) for u in p.unexplained],
                            }
                            for p in rep.pairs
                        ],
                    }
                    for i, rep in reports
                ],
                indent=2,
                sort_keys=True,
            )
        )
    else:
        for i, rep in reports:
            cases = ", ".join(f"{p.pair}:{p.case}" for p in rep.pairs)
            print(f"tuple {i + 1} {rep.primes}: {rep.verdict} [{cases}]")
            for p in rep.pairs:
                if p.unexplained:
                    print(f"    unexplained factors: {p.unexplained}")
    return EXIT_OK if all_pass else EXIT_NEGATIVE


def cmd_search(args) -> int:
    try:
        if args.degree % 2 or args.degree < 4:
            raise SalemnumError("--degree must be an even integer >= 4")
        moduli = tuple(search.real_cyclotomic(int(m)) for m in args.moduli.split(","))
        cfg = search.SearchConfig(
            d=args.degree // 2,
            moduli=moduli,
            target_trace=args.degree + args.trace,
            strategy=args.strategy,
            unit_bound=args.bound,
            coeff_bound=args.coeff_bound,
            budget=int(float(args.budget)),
        )
    except (SalemnumError, ValueError) as exc:
        print(f"search: {exc}", file=sys.stderr)
        return EXIT_USAGE
    stats = search.SearchStats()
    accepted = search.run_search(cfg, stats)
    if args.json:
        print(
            json.dumps(
                {
                    "degree": args.degree,
                    "trace": args.trace,
                    "moduli": [m.m for m in moduli],
                    "strategy": args.strategy,
                    "examined": stats.examined,
                    "crt_skips": stats.crt_skips,
                    "accepted": [
                        {
                            "salem_poly": format_poly(c.salem_poly),
                            "trace_form": format_poly(c.poly),
                            "residues": [[m, format_poly(p)] for m, p in c.residues],
                            "stream_indices": list(c.exponents),
                        }
                        for c in accepted
                    ],
                },
                indent=2,
                sort_keys=True,
            )
        )
    else:
        print(
            f"examined {stats.examined} candidates "
            f"({stats.crt_skips} CRT skips), accepted {len(accepted)}"
        )
        for c in accepted:
            print(f"salem: {format_poly(c.salem_poly)}")
            print(f"  trace form: {format_poly(c.poly)}")
            prov = "; ".join(f"mod {m}: {format_poly(p)}" for m, p in c.residues)
            print(f"  residues: {prov} (stream indices {list(c.exponents)})")
    return EXIT_OK if accepted else EXIT_NEGATIVE


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="salemnum",
        description=(
            "Exact construction, certification and search for Salem polynomials "
            "of trace -3 (and related traces)."
        ),
        epilog=(
            "The embedded corpus covers degrees 34-52 and 58; degrees 54 and 56 "
            "come from the quadruple construction (gen --quad) instead."
        ),
    )
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="construct a family polynomial and certify it")
    g.add_argument("--tuple", type=int, help="seven-tuple index (1-based)")
    g.add_argument("--n", type=int, help="free parameter n (with --tuple)")
    g.add_argument("--quad", type=int, help="quadruple index (1-based)")
    g.add_argument("--json", action="store_true")
    g.set_defaults(func=cmd_gen)

    v = sub.add_parser("verify", help="certify a polynomial (ascending comma-separated coefficients)")
    v.add_argument("coeffs", nargs="?", help="inline coefficients, e.g. 1,-3,1")
    v.add_argument("--file", help="read coefficients from a file")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    a = sub.add_parser("appendix-check", help="verify every embedded corpus row")
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_appendix_check)

    c = sub.add_parser("coverage", help="residue-class coverage certification")
    c.add_argument("--tuples", help="restrict to a comma-separated list of 1-based tuple indices")
    c.add_argument("--drop-one", action="store_true", help="also run the 21 drop-one checks")
    c.add_argument("--small-primes", action="store_true", help="also run the small-prime minimality check")
    c.add_argument("--block-size", type=int, default=cov.DEFAULT_BLOCK)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_coverage)

    k = sub.add_parser("curve-check", help="cyclotomic-point exclusion for the seven-tuples")
    k.add_argument("--tuple", type=int, help="restrict to one tuple (1-based)")
    k.add_argument("--json", action="store_true")
    k.set_defaults(func=cmd_curve_check)

    s = sub.add_parser("search", help="CRT/unit search for Salem polynomials")
    s.add_argument("--degree", type=int, required=True, help="Salem degree 2d (even)")
    s.add_argument("--trace", type=int, default=-3, help="Salem trace target (default -3)")
    s.add_argument("--moduli", required=True, help="comma-separated cyclotomic indices, halved degrees summing to d-1")
    s.add_argument("--strategy", choices=[search.STRATEGY_UNITS, search.STRATEGY_BRUTE], default=search.STRATEGY_UNITS)
    s.add_argument("--bound", type=int, default=3, help="unit exponent bound M (units strategy)")
    s.add_argument("--coeff-bound", type=int, default=3, help="coefficient bound B (brute strategy)")
    s.add_argument("--budget", default="100000", help="max residue combinations to examine")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_search)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SalemnumError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

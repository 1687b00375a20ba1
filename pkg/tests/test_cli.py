"""CLI behavior: exit codes, JSON output, replayability."""

import json

from salemnum.cli import CorpusRow, corpus_rows, main
from salemnum.polycore import certify_salem, format_poly


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_salem_minimal(capsys):
    rows = corpus_rows()
    poly = format_poly(rows[0].poly)
    code, out, _ = run_cli(capsys, "verify", poly)
    assert code == 0
    assert "SalemMinimal" in out
    assert "degree: 34" in out and "trace: -3" in out


def test_verify_negative_and_parse_error(capsys):
    code, out, _ = run_cli(capsys, "verify", "1,0,1")
    assert code == 1
    assert "NoSalemFactor" in out
    code, _, err = run_cli(capsys, "verify", "1,0,banana")
    assert code == 2 and err


def test_verify_json_replayable(capsys):
    code, out, _ = run_cli(capsys, "verify", "--json", "1,-1,-3,-1,1")
    assert code == 0
    cert = json.loads(out)
    code2, out2, _ = run_cli(capsys, "verify", "--json", cert["polynomial"])
    assert code2 == code and out2 == out


def test_gen_tuple(capsys):
    code, out, _ = run_cli(capsys, "gen", "--tuple", "1", "--n", "19")
    assert code == 0
    assert "SalemMinimal" in out and "degree: 72" in out


def test_gen_quad(capsys):
    code, out, _ = run_cli(capsys, "gen", "--quad", "1", "--json")
    assert code == 0
    cert = json.loads(out)
    assert cert["degree"] == 54 and cert["trace"] == -3
    assert cert["kind"] == "SalemMinimal"


def test_gen_inadmissible(capsys):
    code, _, err = run_cli(capsys, "gen", "--tuple", "1", "--n", "4")
    assert code == 2 and "inadmissible" in err


def test_gen_requires_one_mode(capsys):
    code, _, err = run_cli(capsys, "gen")
    assert code == 2


def test_appendix_check(capsys):
    code, out, _ = run_cli(capsys, "appendix-check")
    assert code == 0
    assert "11/11 rows pass" in out


def test_appendix_rows_expand():
    rows = corpus_rows()
    assert [r.degree for r in rows] == [34, 36, 38, 40, 42, 44, 46, 48, 50, 52, 58]
    for r in rows:
        p = r.poly
        assert p.degree == r.degree
        assert p.is_monic() and p.is_reciprocal()
        assert p.trace() == -3


def test_corrupted_corpus_row_fails():
    rows = corpus_rows()
    row = rows[2]
    half = list(row.half)
    half[5] += 1  # perturb one coefficient
    bad = CorpusRow(row.degree, tuple(half))
    cert = certify_salem(bad.poly)
    ok = (
        cert.verdict == "salem"
        and not cert.cyclotomic_part
        and cert.degree == row.degree
        and cert.trace == -3
    )
    assert not ok


def test_search_cli(capsys):
    code, out, _ = run_cli(
        capsys,
        "search",
        "--degree", "8",
        "--trace", "-1",
        "--moduli", "3,5",
        "--strategy", "units",
        "--bound", "4",
        "--budget", "1e4",
        "--json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["accepted"]
    assert payload["degree"] == 8


def test_search_cli_bad_config(capsys):
    code, _, err = run_cli(capsys, "search", "--degree", "8", "--moduli", "3,4")
    assert code == 2 and err


def test_curve_check_single(capsys):
    code, out, _ = run_cli(capsys, "curve-check", "--tuple", "1")
    assert code == 0
    assert "Pass" in out


def test_cli_output_deterministic(capsys):
    a = run_cli(capsys, "gen", "--quad", "2", "--json")
    b = run_cli(capsys, "gen", "--quad", "2", "--json")
    assert a == b


def test_coverage_cli_subset(capsys):
    code, out, _ = run_cli(capsys, "coverage", "--tuples", "1,2,3", "--json")
    assert code == 1  # three tuples cannot cover everything
    payload = json.loads(out)
    assert payload["modulus"] == 223092870
    assert payload["missed_count"] > 0


def test_coverage_cli_bad_subset(capsys):
    code, _, err = run_cli(capsys, "coverage", "--tuples", "0,zebra")
    assert code == 2 and err

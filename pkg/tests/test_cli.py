import csv
import io
import json
from fractions import Fraction

import pytest

from hyperharm import verify
from hyperharm.cli import main
from hyperharm.verify import Check, CheckResult


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_csv(text):
    return list(csv.DictReader(io.StringIO(text)))


# --- compute -------------------------------------------------------------------


def test_compute_hyperharmonic(capsys):
    code, out, _ = run_cli(capsys, "compute", "hyperharmonic", "--r", "2",
                           "--n", "1..3")
    assert code == 0
    rows = parse_csv(out)
    assert [row["value"] for row in rows] == ["1", "5/2", "13/3"]
    assert [row["n"] for row in rows] == ["1", "2", "3"]


def test_compute_hyper_sum(capsys):
    code, out, _ = run_cli(capsys, "compute", "hyper-sum", "--p", "2", "--q", "1",
                           "--n", "3..3")
    assert code == 0
    assert parse_csv(out)[0]["value"] == "20"


def test_compute_poly_bernoulli(capsys):
    code, out, _ = run_cli(capsys, "compute", "poly-bernoulli", "--p", "2",
                           "--n", "2..2")
    assert code == 0
    assert parse_csv(out)[0]["value"] == "-1/36"


def test_compute_stirling_entries(capsys):
    code, out, _ = run_cli(capsys, "compute", "stirling1", "--k", "1", "--r", "1",
                           "--n", "3..3")
    assert code == 0
    assert parse_csv(out)[0]["value"] == "11"

    code, out, _ = run_cli(capsys, "compute", "stirling2", "--k", "2", "--r", "0",
                           "--n", "4..4")
    assert code == 0
    assert parse_csv(out)[0]["value"] == "7"


def test_compute_csv_json_values_identical(capsys):
    args = ("compute", "gen-hyperharmonic", "--p", "-2", "--r", "3", "--n", "0..6")
    code, out_csv, _ = run_cli(capsys, *args)
    assert code == 0
    code, out_json, _ = run_cli(capsys, *args, "--format", "json")
    assert code == 0
    csv_values = [row["value"] for row in parse_csv(out_csv)]
    json_values = [record["value"] for record in json.loads(out_json)]
    assert csv_values == json_values


def test_compute_values_round_trip(capsys):
    code, out, _ = run_cli(capsys, "compute", "harmonic", "--p", "3", "--n", "1..8")
    assert code == 0
    from hyperharm.harmonic import harmonic_generalized

    for row in parse_csv(out):
        assert Fraction(row["value"]) == harmonic_generalized(int(row["n"]), 3)


def test_compute_polynomial_sequences(capsys):
    code, out, _ = run_cli(capsys, "compute", "bernoulli-poly", "--n", "2..2")
    assert code == 0
    assert parse_csv(out)[0]["value"] == "1/6;-1;1"

    code, out, _ = run_cli(capsys, "compute", "poly-bernoulli-poly", "--p", "1",
                           "--n", "2..2", "--at", "0")
    assert code == 0
    row = parse_csv(out)[0]
    assert row["value"] == "1/6"  # B_2^(1)(0) = B_2
    from hyperharm.bernoulli import poly_bernoulli_polynomial

    assert Fraction(row["value"]) == poly_bernoulli_polynomial(2, 1)(0)


def test_compute_usage_errors(capsys):
    code, _, err = run_cli(capsys, "compute", "hyperharmonic", "--n", "1..3")
    assert code == 2 and "requires --r" in err

    code, _, _ = run_cli(capsys, "compute", "nope", "--n", "1..2")
    assert code == 2

    code, _, _ = run_cli(capsys, "compute", "harmonic", "--n", "3..1")
    assert code == 2

    code, _, err = run_cli(capsys, "compute", "hyperharmonic", "--r", "0",
                           "--n", "1..2")
    assert code == 2 and "error" in err

    code, _, err = run_cli(capsys, "compute", "harmonic", "--n", "1..2",
                           "--at", "3")
    assert code == 2 and "--at" in err


# --- table ---------------------------------------------------------------------


def test_table_stirling2(capsys):
    code, out, _ = run_cli(capsys, "table", "stirling2", "--r", "0", "--n", "0..4")
    assert code == 0
    rows = parse_csv(out)
    entries = {(row["n"], row["k"]): row["value"] for row in rows}
    assert entries[("4", "2")] == "7"
    assert len(rows) == 1 + 2 + 3 + 4 + 5


def test_table_stirling1_row(capsys):
    code, out, _ = run_cli(capsys, "table", "stirling1", "--r", "1", "--n", "3")
    assert code == 0
    rows = parse_csv(out)
    assert [row["value"] for row in rows] == ["6", "11", "6", "1"]


def test_table_bernoulli(capsys):
    code, out, _ = run_cli(capsys, "table", "bernoulli", "--n", "0..4")
    assert code == 0
    assert [row["value"] for row in parse_csv(out)] == ["1", "-1/2", "1/6", "0",
                                                        "-1/30"]


def test_table_poly_bernoulli_grid(capsys):
    # ranges starting with '-' need the --flag=value spelling
    code, out, _ = run_cli(capsys, "table", "poly-bernoulli", "--p=-1..1",
                           "--n", "0..2", "--format", "json")
    assert code == 0
    records = json.loads(out)
    assert len(records) == 9
    lookup = {(r["p"], r["n"]): r["value"] for r in records}
    assert lookup[(-1, 1)] == "2"
    assert lookup[(1, 2)] == "1/6"
    assert lookup[(0, 2)] == "1"


def test_table_usage_errors(capsys):
    code, _, err = run_cli(capsys, "table", "stirling1", "--n", "0..3")
    assert code == 2 and "requires --r" in err
    code, _, err = run_cli(capsys, "table", "poly-bernoulli", "--n", "0..3")
    assert code == 2 and "requires --p" in err


# --- verify ----------------------------------------------------------------------


def test_verify_single_check(capsys):
    code, out, _ = run_cli(capsys, "verify", "eq-17")
    assert code == 0
    rows = parse_csv(out)
    assert rows[0]["check"] == "eq-17"
    assert rows[0]["status"] == "pass"
    assert int(rows[0]["total"]) == 99


def test_verify_with_range_override(capsys):
    code, out, _ = run_cli(capsys, "verify", "eq-1.1", "--range", "n=0..5",
                           "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload[0]["total"] == 6
    assert payload[0]["status"] == "pass"
    assert payload[0]["failures"] == []


def test_verify_unknown_check_and_bad_range(capsys):
    code, _, err = run_cli(capsys, "verify", "no-such-check")
    assert code == 2 and "unknown check" in err

    code, _, err = run_cli(capsys, "verify", "eq-1.1", "--range", "n=bogus")
    assert code == 2

    code, _, err = run_cli(capsys, "verify", "eq-1.1", "--range", "zz=0..2")
    assert code == 2


def test_verify_failure_exit_code(capsys):
    name = "always-false-test-only"
    verify._REGISTRY[name] = Check(
        name=name,
        description="intentionally false",
        param_names=("n",),
        defaults={"n": (1, 3)},
        evaluate=lambda n: CheckResult(
            name, {"n": n}, Fraction(n), Fraction(-n), False
        ),
    )
    try:
        code, out, err = run_cli(capsys, "verify", name)
        assert code == 1
        assert parse_csv(out)[0]["status"] == "fail"
        assert "lhs=1 rhs=-1" in err

        code, out, _ = run_cli(capsys, "verify", name, "--format", "json")
        assert code == 1
        payload = json.loads(out)
        assert payload[0]["failures"][0]["params"] == {"n": 1}
    finally:
        del verify._REGISTRY[name]


def test_verify_all_with_tiny_overrides(capsys):
    # keep this fast: shrink every shared range; per-check inapplicable
    # overrides must be ignored when sweeping "all"
    code, out, _ = run_cli(
        capsys, "verify", "all",
        "--range", "n=0..2", "--range", "p=1..2", "--range", "q=1..2",
        "--range", "r=1..2", "--range", "l=0..1",
    )
    assert code == 0
    rows = parse_csv(out)
    assert len(rows) == len(verify.check_names())
    assert all(row["status"] == "pass" for row in rows)

import csv
import io
import json
import subprocess
import sys

import mpmath
import pytest

from softcore import cli
from softcore.exactnum import Polynomial, poly_real_roots


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out=out)
    return code, out.getvalue()


def test_solve_q1_table_entry():
    code, text = run("solve", "--q", "1", "--Z", "1", "--beta", "35", "--l", "2", "--r0", "75")
    assert code == cli.EXIT_OK
    rec = json.loads(text)
    assert abs(mpmath.mpf(rec["energy"]) - mpmath.mpf("-0.0101357167")) < 5e-11
    assert rec["converged"] is True
    assert set(rec) >= {"energy", "iterations", "r0", "converged", "history"}


def test_solve_q2_table_entry():
    code, text = run("solve", "--q", "2", "--Z", "1", "--beta", "20", "--l", "3", "--r0", "3")
    assert code == cli.EXIT_OK
    assert abs(mpmath.mpf(json.loads(text)["energy"]) - mpmath.mpf("-0.0179286118")) < 5e-11


def test_solve_rejects_q3(capsys):
    code, _ = run("solve", "--q", "3", "--beta", "1", "--r0", "1")
    assert code == cli.EXIT_USAGE
    err = capsys.readouterr().err
    assert "q must be 1 or 2 for AIM; use `oracle`" in err
    assert "usage:" in err


def test_unknown_flag_is_usage_error():
    assert run("solve", "--bogus")[0] == cli.EXIT_USAGE


def test_non_convergence_exit_code():
    code, text = run("solve", "--beta", "20", "--r0", "65", "--n-max", "5", "--format", "text")
    assert code == cli.EXIT_NOCONV
    assert "converged=False" in text


def test_text_energy_is_grouped():
    code, text = run("solve", "--beta", "2", "--r0", "8", "--format", "text")
    assert code == cli.EXIT_OK
    assert "energy=-0.125 000 000 0" in text


def test_json_round_trip():
    code, text = run("solve", "--q", "2", "--beta", "10", "--r0", "3")
    rec = json.loads(text)
    again = io.StringIO()
    cli.emit(rec, "json", again)
    assert again.getvalue() == text
    with mpmath.workdps(50):
        res = cli.aim.aim_solve(cli.PotentialSpec(1, 10, 2, 0), 3, point="table")
        assert rec["energy"] == cli.full(res.energy)


def test_exact_records_round_trip():
    code, text = run("exact", "--q", "2", "--N", "2")
    assert code == cli.EXIT_OK
    again = io.StringIO()
    cli.emit(json.loads(text), "json", again)
    assert again.getvalue() == text


def test_digits_environment_override(monkeypatch):
    monkeypatch.setenv(cli.DIGITS_ENV, "25")
    code, text = run("exact", "--q", "2", "--N", "1")
    assert code == cli.EXIT_OK
    psi = json.loads(text)["psi_sample"]["1"]
    assert len(psi.replace("0.", "", 1)) <= 26
    monkeypatch.setenv(cli.DIGITS_ENV, "many")
    assert run("exact", "--q", "2", "--N", "1")[0] == cli.EXIT_USAGE


def test_exact_q2_first():
    rec = json.loads(run("exact", "--q", "2", "--Z", "1", "--l", "0", "--N", "1")[1])
    assert [mpmath.mpf(b) for b in rec["beta_roots"]] == [4]
    assert rec["energy"] == "-1/8"
    assert "note" not in rec


def test_exact_q1_first():
    rec = json.loads(run("exact", "--q", "1", "--Z", "1", "--l", "0", "--N", "1")[1])
    assert [mpmath.mpf(b) for b in rec["beta_roots"]] == [2]
    assert mpmath.mpf(rec["energy_decimal"]) == mpmath.mpf("-0.125")
    assert [mpmath.mpf(c) for c in rec["f_r"]] == [1, mpmath.mpf(1) / 2]


def test_exact_q2_l1_second():
    rec = json.loads(run("exact", "--q", "2", "--l", "1", "--N", "2")[1])
    nu = 2
    row = Polynomial([4 * (2 * nu + 1) * (nu + 2) ** 5, 0, -6 * (nu + 2) ** 3, 0, 1], "beta")
    with mpmath.workdps(50):
        expected = [r.value for r in poly_real_roots(row, 50) if r.value > 0]
        got = [mpmath.mpf(b) for b in rec["beta_roots"]]
        assert len(got) == len(expected) == 2
        assert all(abs(a - b) < 1e-40 for a, b in zip(got, expected))


def test_exact_beyond_table_is_marked():
    rec = json.loads(run("exact", "--q", "2", "--N", "8", "--digits", "20")[1])
    assert rec["note"] == "beyond paper's table"


def test_exact_rejects_bad_input():
    assert run("exact", "--q", "3", "--N", "1")[0] == cli.EXIT_USAGE
    assert run("exact", "--q", "1", "--N", "0")[0] == cli.EXIT_USAGE


def test_table3_first_row():
    code, text = run("table", "--which", "3")
    assert code == cli.EXIT_OK
    rows = list(csv.DictReader(io.StringIO(text)))
    assert rows[0]["condition"].replace(" ", "") == "Z^2*b^2-2*(v+1)^3"
    assert len(rows) == cli.TABLE3_MAX_N


def test_table_row_is_deterministic():
    work = (2, 200, 2, 2, 50)
    a, b = cli._table_row(work), cli._table_row(work)
    assert a == b
    assert a["scaled"] and a["method"].startswith("aim+scaling")


def test_conditions_q1_symbolic():
    code, text = run("conditions", "--q", "1", "--N", "1")
    assert code == cli.EXIT_OK
    assert json.loads(text)["condition"].replace(" ", "") in ("Z*b-(v+1)", "Z*b-v-1")


def test_heun_eval_terminating_series():
    # q = 1 mapping at Z = 1, beta = 2, nu = 1: the series is 1 - t
    code, text = run("heun-eval", "--alpha", "2", "--beta", "1", "--gamma", "-1", "--delta", "-4",
                     "--eta", "1/2", "--t=-1/2", "--terms", "10")
    assert code == cli.EXIT_OK
    rec = json.loads(text)
    assert rec["degree"] == 1
    assert rec["last_coefficient"] == "0"
    assert mpmath.mpf(rec["value"]) == mpmath.mpf("1.5")


def test_heun_eval_logarithmic_case():
    code, _ = run("heun-eval", "--alpha", "1", "--beta", "-1", "--gamma", "0", "--delta", "1",
                  "--eta", "1", "--t", "0")
    assert code == cli.EXIT_USAGE


def test_oracle_general_q():
    code, text = run("oracle", "--q", "1.5", "--beta", "5")
    assert code == cli.EXIT_OK
    assert float(json.loads(text)["energy"]) < 0


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "softcore", "table", "--which", "3"],
                       capture_output=True, text=True, timeout=600)
    assert p.returncode == 0
    assert p.stdout.splitlines()[0] == "N,k,condition"


@pytest.mark.slow
def test_table4_marks_scaled_rows():
    code, text = run("table", "--which", "4")
    rows = list(csv.DictReader(io.StringIO(text)))
    assert list(rows[0]) == cli.CSV_COLUMNS
    scaled = {(r["beta"], r["l"]) for r in rows if r["scaled"] == "yes"}
    assert scaled == {("200", "2"), ("200", "3")}

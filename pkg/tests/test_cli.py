import json
import subprocess
import sys
from fractions import Fraction

import pytest

from recipcircle.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


# -- check -------------------------------------------------------------------------------


def test_check_counterexample(capsys):
    code, data = run_json(capsys, "check", "4", "-16", "23")
    assert code == 0 and data["schema_version"] == 1
    v = data["reports"][0]["verdict"]
    assert (v["kind"], v["step"], v["reason"]) == ("Fails", 2, "NumeratorZero")
    assert data["reports"][0]["steps"][0]["m"]["exact"] == "1/2"


def test_check_simple(capsys):
    code, data = run_json(capsys, "check", "1", "0")
    assert data["reports"][0]["verdict"]["kind"] == "AllOnCircleSimple"


def test_check_omega_double_root(capsys):
    code, data = run_json(capsys, "check", "--mode", "omega", "1", "2")
    rep = data["reports"][0]
    assert rep["verdict"]["kind"] == "AllOnCircle"
    assert all("sturm" in s for s in rep["steps"])


def test_check_both_and_table(capsys):
    code, out, _ = run(capsys, "check", "--mode", "both", "1", "2")
    assert code == 0
    assert "[LogQ]" in out and "[Omega]" in out
    assert "verdict: AllOnCircle" in out and "Fails" in out


def test_check_csv(capsys):
    code, out, _ = run(capsys, "check", "1", "-1", "2", "--format", "csv")
    lines = out.strip().splitlines()
    assert lines[0] == "mode,n,index,status,m_exact,m_decimal"
    assert lines[-1].startswith("LogQ,verdict")


def test_check_sampled(capsys):
    code, out, _ = run(capsys, "check", "--mode", "omega", "--format", "json",
                       "--samples", "3/2", "2", "--", "2", "5")
    rep = json.loads(out)["reports"][0]
    assert rep["verdict"]["kind"] == "Fails" and rep["samples"] == ["3/2"]


def test_negative_rationals_are_positional(capsys):
    code, data = run_json(capsys, "check", "1", "-1/2", "-3")
    assert data["coeffs"] == ["1", "-1/2", "-3"]


# -- rvalues -----------------------------------------------------------------------------


def test_rvalues_examples(capsys):
    code, out, _ = run(capsys, "rvalues", "1", "-1", "2")
    assert [l.split(" = ")[1] for l in out.strip().splitlines()] == ["1", "3/5", "14", "1/3"]
    code, out, _ = run(capsys, "rvalues", "1", "0")
    assert [l.split(" = ")[1] for l in out.strip().splitlines()] == ["1", "1"]


def test_rvalues_lambdas(capsys):
    code, data = run_json(capsys, "rvalues", "--lambdas", "0", "1/2")
    assert data["coeffs"] == ["1", "-1", "2"]
    assert [r["R"] for r in data["rows"]] == ["1", "3/5", "14", "1/3"]
    assert all(r["equal"] for r in data["rows"])


# -- verify ------------------------------------------------------------------------------


def test_verify_all(capsys, tmp_path):
    csv_path = tmp_path / "h.csv"
    code, out, _ = run(capsys, "verify", "--battery", "all", "--hamiltonian-csv", str(csv_path),
                       "1", "-1", "2")
    assert code == 0 and "overall: PASS" in out
    assert csv_path.read_text().splitlines()[0] == "n,a_start,a_end,m"


def test_verify_factorization(capsys):
    code, data = run_json(capsys, "verify", "--battery", "factorization", "1", "0")
    checks = [c for c in data["checks"] if c["name"] == "factorization"]
    assert code == 0 and len(checks) == 20 and all(c["passed"] for c in checks)


def test_verify_singular_instance(capsys):
    code, data = run_json(capsys, "verify", "4", "-16", "23")
    assert code == 0
    assert any(c.get("skipped") for c in data["checks"])
    assert data["oracle"]["all_on_circle"] is False and data["square_free"] is True


def test_verify_omega(capsys):
    code, data = run_json(capsys, "verify", "--battery", "canonical", "--omega", "1/4",
                          "--omega", "3", "1", "2")
    names = {c["name"] for c in data["checks"] if c["passed"] is not None}
    assert "omega[0.25].boundary_a1" in names and "omega[3.0].transfer_product" in names
    assert code == 0


def test_verify_exit_code_on_failed_check(capsys, monkeypatch):
    from recipcircle import canonical, cli

    def failing(*args, **kwargs):
        rep = canonical.BatteryReport()
        rep.add("forced", {}, 1.0, 0.0)
        return rep

    monkeypatch.setattr(cli, "run_battery", failing)
    code, out, _ = run(capsys, "verify", "1", "0")
    assert code == 1 and "FAIL" in out


def test_q_flag_wins_over_environment(capsys, monkeypatch):
    monkeypatch.setenv("RECIPCIRCLE_Q", "3")
    _, data = run_json(capsys, "verify", "--battery", "factorization", "1", "0")
    assert data["q"] == 3.0
    _, data = run_json(capsys, "verify", "--battery", "factorization", "--q", "5/2", "1", "0")
    assert data["q"] == 2.5
    monkeypatch.delenv("RECIPCIRCLE_Q")
    _, data = run_json(capsys, "verify", "--battery", "factorization", "1", "0")
    assert data["q"] == 2.0


# -- experiment ----------------------------------------------------------------------------


def test_experiment_default_agreement(capsys):
    code, data = run_json(capsys, "experiment", "--g-range", "1..3", "--count", "5")
    assert code == 0 and data["disagreement_count"] == 0
    assert data["instances"] == 4 * 3 * 5


def test_experiment_multiple_mode(capsys):
    code, data = run_json(capsys, "experiment", "--modes", "OnCircleMultiple", "--g-range", "1..4",
                          "--count", "5")
    for row in data["rows"]:
        assert row["log_pass"] == 0 and row["omega_pass"] == row["instances"]


def test_experiment_count_zero(capsys):
    code, data = run_json(capsys, "experiment", "--count", "0")
    assert code == 0 and data["rows"] == [] and data["instances"] == 0


def test_experiment_csv_columns(capsys):
    code, out, _ = run(capsys, "experiment", "--g-range", "2", "--count", "2", "--format", "csv")
    assert out.splitlines()[0] == ("mode,g,instances,oracle_on_circle,oracle_simple,log_pass,"
                                   "omega_pass,log_agree,omega_agree")


def test_experiment_timing_goes_to_stderr(capsys):
    code, out, err = run(capsys, "experiment", "--g-range", "1", "--count", "2", "--timing")
    assert "oracle" in json.loads(err.strip())


# -- determinism, round trips, errors -----------------------------------------------------


@pytest.mark.parametrize("argv", [
    ["check", "--mode", "both", "1", "-1", "2", "--format", "json"],
    ["verify", "1", "-1", "2", "--format", "json", "--seed", "4"],
    ["experiment", "--g-range", "1..2", "--count", "3", "--seed", "9", "--format", "csv"],
])
def test_output_is_deterministic(capsys, argv):
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_json_round_trip(capsys):
    from recipcircle.criterion import SelfReciprocalPoly, run_log
    _, data = run_json(capsys, "check", "3/7", "-2", "11/5")
    rep = run_log(SelfReciprocalPoly([Fraction(3, 7), -2, Fraction(11, 5)]))
    for st, m in zip(data["reports"][0]["steps"], rep.m_values):
        assert Fraction(st["m"]["exact"]) == m
    assert [Fraction(c) for c in data["coeffs"]] == [Fraction(3, 7), -2, Fraction(11, 5)]


def test_file_input(capsys, tmp_path):
    f = tmp_path / "p.json"
    f.write_text(json.dumps({"g": 2, "coeffs": ["1", "-1", "2"]}))
    _, data = run_json(capsys, "check", "--file", str(f))
    assert data["reports"][0]["verdict"]["kind"] == "AllOnCircleSimple"
    f.write_text(json.dumps({"g": 2, "coeffs": ["1", "-1", "2", "-1", "1"]}))
    code, _, err = run(capsys, "check", "--file", str(f))
    assert code == 2 and "full coefficient lists" in err


@pytest.mark.parametrize("argv", [
    ["check", "1", "x"],
    ["check", "0", "1"],
    ["check"],
    ["verify", "--q", "1", "1", "0"],
    ["verify", "--omega", "-1", "1", "0"],
    ["experiment", "--modes", "Bogus"],
    ["experiment", "--g-range", "3..1"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "recipcircle", "rvalues", "1", "1"],
                         capture_output=True, text=True, check=True)
    assert out.stdout.splitlines() == ["R_1 = 1", "R_2 = 3"]

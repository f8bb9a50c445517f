import json

import pytest

from expsumlab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_sum_s_json(capsys):
    code, out = run(capsys, "sum-s", "--p", "11", "--a", "1", "--h", "2")
    assert code == 0
    data = json.loads(out)
    assert data["p"] == 11
    assert abs(data["abs"] - 1.0) < 1e-9  # S(1, 2; 11) has |S| = 1


def test_sum_t_direct_agreement(capsys):
    code, out = run(capsys, "sum-t", "--p", "101", "--a", "1,2", "--r", "3,5",
                    "--direct")
    assert code == 0
    data = json.loads(out)
    assert abs(data["re"] - data["direct"]["re"]) < 1e-8
    assert abs(data["im"] - data["direct"]["im"]) < 1e-8


def test_binomial_check(capsys):
    code, out = run(capsys, "binomial", "--p", "101", "--a", "1", "--b", "2",
                    "--e", "3", "--f", "5", "--check")
    assert code == 0
    data = json.loads(out)
    assert data["cochrane_pinner"]["passed"] is True


def test_zeros_certificate(capsys):
    code, out = run(capsys, "zeros", "--p", "7", "--r", "7", "--s", "5")
    assert code == 0
    data = json.loads(out)
    assert data["N"] == 2 and data["zeros"] == [2, 4]
    assert data["R_decimal_string"] == "25"
    assert data["divisibility_ok"] is True


def test_resultant_with_primes(capsys):
    code, out = run(capsys, "resultant", "--r", "7", "--s", "5",
                    "--pmax", "100")
    assert code == 0
    data = json.loads(out)
    assert data["exceptional_primes"] == [5]


def test_moments(capsys):
    code, out = run(capsys, "moments", "--p", "13", "--r", "7", "--s", "5")
    assert code == 0
    data = json.loads(out)
    assert data["identities_ok"] is True
    assert data["Q_exact"] == "24"


def test_scan_primes_csv(capsys):
    code, out = run(capsys, "scan-primes", "--r", "5", "--s", "3",
                    "--pmax", "30", "--csv")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "p,N,divides_R"
    assert lines[1] == "2,0,0"
    assert "3,1,1" in lines  # p=3 divides R_{5,3}=9 and has one common zero


def test_semicircle_csv_schema(capsys, tmp_path):
    target = tmp_path / "semi.csv"
    code, _ = run(capsys, "semicircle", "--p", "101", "--samples", "150",
                  "--csv", "--out", str(target))
    assert code == 0
    lines = target.read_text().strip().split("\n")
    assert lines[0] == "p,a1,a2,value_normalized"
    assert len(lines) == 151
    p, a1, a2, v = lines[1].split(",")
    assert int(p) == 101 and 0 <= int(a1) < 101 and 1 <= int(a2) < 101
    assert abs(float(v)) <= 3


def test_horizontal_csv_schema(capsys):
    code, out = run(capsys, "horizontal", "--h", "2,5", "--a", "1,1",
                    "--pmax", "100", "--csv", "--threads", "2")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "p,re,im,abs"
    assert len(lines) > 10


def test_exp_growth_csv_schema(capsys):
    code, out = run(capsys, "exp-growth", "--h1", "2", "--h2", "3",
                    "--pmax", "100", "--csv")
    assert code == 0
    assert out.startswith("p,r1,r2,alpha\n")


def test_congr_count(capsys):
    code, out = run(capsys, "congr-count", "--p", "101", "--V", "2,3,5",
                    "--H", "10")
    assert code == 0
    assert json.loads(out)["bound_check"]["passed"] is True


def test_usage_errors(capsys):
    assert main(["nope"]) == 2
    assert main([]) == 2
    code, _ = run(capsys, "sum-s", "--p", "10", "--a", "1", "--h", "2")
    assert code == 2  # 10 is not prime


def test_avg_u_ratios_are_json(capsys):
    code, out = run(capsys, "avg-u", "--p", "101", "--a", "1,2", "--H", "10",
                    "--ratios", "2")
    assert code == 0
    data = json.loads(out)  # must be strict JSON even when checks are skipped
    assert len(data["theorem_checks"]) == 3


def test_verify_all_desk(capsys):
    code, out = run(capsys, "verify-all", "--profile", "desk")
    assert code == 0
    assert "0 failures" in out

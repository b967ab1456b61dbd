import json
import subprocess
import sys

from quadeis.cli import main
from quadeis.cusps import CuspRep, canonicalize, to_point


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cusps_json(capsys):
    code, out, _ = run_cli(capsys, "cusps", "--d", "3", "--c", "3", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 4
    assert {"r", "s", "t", "x", "num", "den", "width0", "width1"} == set(rows[0])


def test_cusps_round_trip(capsys):
    code, out, _ = run_cli(capsys, "cusps", "--d", "15", "--c", "3")
    assert code == 0
    for row in json.loads(out):
        rep = CuspRep(row["r"], row["s"], row["t"], row["x"])
        point = to_point(rep, 15, 3)
        assert (point.a, point.c) == (row["num"], row["den"])
        assert canonicalize(point, 15, 3) == rep


def test_triples(capsys):
    code, out, _ = run_cli(capsys, "triples", "--d", "3", "--c", "3")
    assert code == 0
    rows = json.loads(out)
    assert [(r["M"], r["L"], r["f"]) for r in rows] == [(3, 1, 1), (3, 3, 1), (3, 3, 3)]


def test_qexp(capsys):
    code, out, _ = run_cli(
        capsys, "qexp", "--d", "11", "--c", "1", "--m", "11", "--l", "1", "--f", "1",
        "--prec", "6",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["coeffs"] == ["5/12", "1", "3", "4", "7", "6", "12"]


def test_constants(capsys):
    code, out, _ = run_cli(
        capsys, "constants", "--d", "11", "--c", "1", "--m", "11", "--l", "1", "--f", "1"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["unit"] == "n_chi"
    rhos = [e["rho"] for e in payload["entries"]]
    assert rhos == ["-10", "10/11"]


def test_order_row(capsys):
    code, out, _ = run_cli(
        capsys, "order", "--d", "11", "--c", "1", "--m", "11", "--l", "1", "--f", "1"
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "D,C,M,L,f,A,d_chi_num,d_chi_den,order_away_6f,index_prediction"
    assert lines[1] == "11,1,11,1,1,10,1,6,5,5"


def test_order_unknown_triple_exits_2(capsys):
    code, _, err = run_cli(
        capsys, "order", "--d", "11", "--c", "1", "--m", "4", "--l", "1", "--f", "1"
    )
    assert code == 2
    assert "M=4 must divide" in err


def test_table_rows(capsys):
    code, out, _ = run_cli(capsys, "table", "--d-max", "11")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "D,C,M,L,f,A,d_chi_num,d_chi_den,order_away_6f,index_prediction"
    assert "11,1,11,1,1,10,1,6,5,5" in lines
    assert "11,11,11,11,11,1,-20,11,5,5" in lines
    assert "3,3,3,3,3,1,-4,9,1,1" in lines
    # sorted lexicographically
    keys = [tuple(map(int, line.split(",")[:5])) for line in lines[1:]]
    assert keys == sorted(keys)


def test_table_guardrail(capsys):
    code, _, err = run_cli(capsys, "table", "--d-max", "1001")
    assert code == 2
    assert "capped" in err


def test_table_jobs_deterministic(capsys):
    _, out1, _ = run_cli(capsys, "table", "--d-max", "20")
    _, out2, _ = run_cli(capsys, "table", "--d-max", "20", "--jobs", "3")
    assert out1 == out2


def test_verify_small(capsys):
    code, out, _ = run_cli(capsys, "verify", "--dc-max", "30", "--prec", "40")
    assert code == 0
    lines = out.strip().splitlines()
    summary = json.loads(lines[-1])["summary"]
    assert summary["failures"] == 0
    checks = {json.loads(line)["check"] for line in lines[:-1]}
    assert "qexp_two_paths" in checks
    assert "constant_two_paths" in checks
    assert "hecke_eigenvalue" in checks
    assert "l_factorization" in checks


def test_verify_jobs_deterministic(capsys):
    _, out1, _ = run_cli(capsys, "verify", "--dc-max", "20", "--prec", "30")
    _, out2, _ = run_cli(capsys, "verify", "--dc-max", "20", "--prec", "30", "--jobs", "2")
    assert out1 == out2


def test_console_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "quadeis", "cusps", "--d", "11", "--c", "1"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert len(json.loads(result.stdout)) == 2


def test_csv_formats(capsys):
    code, out, _ = run_cli(capsys, "cusps", "--d", "3", "--c", "3", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "r,s,t,x,num,den,width0,width1"
    code, out, _ = run_cli(
        capsys, "qexp", "--d", "3", "--c", "1", "--m", "3", "--l", "1", "--f", "1",
        "--prec", "3", "--format", "csv",
    )
    assert code == 0
    assert out.splitlines()[0] == "n,coeff"

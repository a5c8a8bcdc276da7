import csv
import io
import json
from pathlib import Path

import pytest

from wittpoisson import cli
from wittpoisson.qij import locus

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv, golden", [
    (["bracket", "x1", "x2"], "bracket_x1_x2.json"),
    (["locus", "--case", "general"], "locus_general.json"),
    (["jkl-dims", "--k", "2", "--l", "2", "--n", "10", "--fcounts"], "jkl_dims_2_2_10.json"),
    (["jkl-dims", "--k", "2", "--l", "2", "--n", "10", "--fcounts", "--format", "csv"],
     "jkl_dims_2_2_10.csv"),
])
def test_golden_files(capsys, argv, golden):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == (GOLDEN / golden).read_text()


def test_documented_examples_content(capsys):
    _, out, _ = run(capsys, "bracket", "x1", "x2")
    assert json.loads(out)["result"] == "x3"
    _, out, _ = run(capsys, "locus", "--case", "general")
    assert set(json.loads(out)["result"]["factor_strings"]) == {
        "i", "j - 1", "j + 1", "i + 1", "i - 1", "i - j + 3"}
    _, out, _ = run(capsys, "jkl-dims", "--k", "2", "--l", "2", "--n", "10", "--fcounts")
    assert all(t[2] == 0 for t in json.loads(out)["result"]["fcounts"])


def test_envelope_shape(capsys):
    code, out, _ = run(capsys, "gamma", "x1*x5 - 4*x2*x4 + 3*x3^2", "--seed", "7")
    env = json.loads(out)
    assert code == 0 and set(env) == {"manifest", "result", "checks"}
    assert env["manifest"]["subcommand"] == "gamma"
    assert env["manifest"]["seed"] == 7
    assert "wall_time" not in env["manifest"]
    assert env["result"] == [1, 5]
    _, out, _ = run(capsys, "gamma", "x2*x2", "--timing")
    assert json.loads(out)["manifest"]["wall_time"] >= 0


def test_same_seed_same_bytes(capsys):
    argv = ["crosscheck", "--case", "d3", "--point", "5", "--beta", "2/3", "--trials", "4"]
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    _, c, _ = run(capsys, *argv, "--seed", "99")
    assert a == b and a != c


@pytest.mark.parametrize("argv", [
    ["pgk", "--gens", "x1,x2", "--n", "5"],
    ["pgk", "--gens", "x1,x2", "--n", "12", "--quotient", "all"],
    ["good-growth", "--n", "4"],
    ["jkl-dims", "--k", "3", "--l", "4", "--n", "12", "--fcounts"],
    ["gamma-profile", "x8*x20", "--depth", "8"],
    ["critical", "x5*x9", "--dmax", "25"],
    ["rank-scan", "--case", "d5", "--box=-2,15"],
])
def test_csv_and_json_agree(capsys, argv):
    code, out_json, _ = run(capsys, *argv)
    assert code == 0
    _, out_csv, _ = run(capsys, *argv, "--format", "csv")
    rows = list(csv.reader(io.StringIO(out_csv)))
    header, body = rows[0], [[int(v) for v in r] for r in rows[1:]]
    result = json.loads(out_json)["result"]
    cmd = argv[0]
    if cmd == "pgk":
        want = [[r["n"], r["dim_Vn"], r["pd"]] for r in result["rows"]]
    elif cmd == "good-growth":
        want = [[s["n"], s["dim_F"], s["pd"], int(s["contained"])] for s in result["steps"]]
    elif cmd == "jkl-dims":
        want = [[n, d, *f] for n, (d, f) in enumerate(zip(result["dims"], result["fcounts"]))]
    elif cmd == "gamma-profile":
        want = result["profile"]
    elif cmd == "critical":
        want = [[r[k] for k in header] for r in result["rows"]]
    else:
        want = [d["point"] for d in result["scan_deficiencies"]]
    assert body == want


def test_subcommands_smoke(capsys, tmp_path):
    ideal = tmp_path / "i.txt"
    ideal.write_text("x1*x2\nx2*x3\n")
    other = tmp_path / "j.txt"
    other.write_text("x1\n")
    cases = [
        ["act", "e1*e5", "x10*x30"],
        ["act", "e6 - e1*e5", "x7*x20"],
        ["leading-split", "x1*x5 - 4*x2*x4 + 3*x3^2"],
        ["lie-ideal", "x3", "--cap", "20"],
        ["raise6", "x10*x20"],
        ["ideal", "show", "--input", str(ideal)],
        ["ideal", "radical", "--input", str(ideal)],
        ["ideal", "minimal-primes", "--input", str(ideal)],
        ["ideal", "decompose", "--input", str(ideal), "--b", "x2"],
        ["ideal", "hat-plus", "--input", str(ideal), "--b", "x2"],
        ["ideal", "intersect", "--input", str(ideal), "--other", str(other)],
    ]
    for argv in cases:
        code, out, _ = run(capsys, *argv)
        assert code == 0, argv
        json.loads(out)
    _, out, _ = run(capsys, "act", "e1*e5", "x10*x30")
    assert json.loads(out)["result"]["result"] == "850*x10*x36 + 225*x11*x35 + 145*x15*x31 + 70*x16*x30"
    _, out, _ = run(capsys, "ideal", "minimal-primes", "--input", str(ideal))
    assert json.loads(out)["result"]["result"]["primes"] == [[1, 3], [2]]


def test_quotient_warning(capsys):
    code, _, err = run(capsys, "pgk", "--gens", "x1,x2", "--n", "3", "--quotient", "jkl:2,4")
    assert code == 0 and "not Poisson-stable" in err


@pytest.mark.parametrize("argv", [
    ["bracket", "x1 x2", "x3"],
    ["gamma", "x0*x1"],
    ["act", "e1*", "x1"],
    ["raise6", "x1^-2"],
])
def test_parse_errors_exit_3(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 3 and out == "" and "^" in err


@pytest.mark.parametrize("argv", [
    [],
    ["no-such-command"],
    ["bracket", "x1"],
    ["bracket", "x1", "x2", "--format", "csv"],
    ["locus", "--case", "d9"],
    ["jkl-dims", "--k", "4", "--l", "2", "--n", "5"],
    ["pgk", "--gens", "x1", "--n", "3", "--quotient", "bogus"],
    ["rank-scan", "--case", "d5", "--box", "3"],
    ["crosscheck", "--case", "general", "--point", "5,8", "--beta", "1,2,3"],
    ["ideal", "colon", "--input", "/nonexistent/file"],
    ["gamma", "x1*x2*x3"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 2 and out == ""


def test_failed_check_exit_1(capsys, monkeypatch):
    real = locus.bc_crosscheck

    def broken(*args, **kwargs):
        rep = real(*args, **kwargs)
        rep["pass"] = False
        return rep

    monkeypatch.setattr(locus, "bc_crosscheck", broken)
    code, out, err = run(capsys, "crosscheck", "--case", "d0", "--point", "4", "--trials", "2")
    assert code == 1
    assert json.loads(out)["checks"][0]["pass"] is False
    assert "check failed" in err

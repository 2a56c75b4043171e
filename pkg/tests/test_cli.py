import csv
import io
import json
import subprocess
import sys

import pytest

from toricaps import cli, domains
from toricaps.cli import DomainParseError, DomainSpec, RunConfig, main, parse_domain

OMEGA4 = '{"kind":"example_r","r":"4"}'
SQUARE = '{"kind":"polydisk","a":"1","b":"1"}'
WEAK = '{"kind":"polytope","vertices":[["0","0"],["1","0"],["2","1"],["0","1"]]}'


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def csv_rows(text):
    return list(csv.reader(io.StringIO(text)))


def test_parse_domain_examples():
    assert parse_domain(OMEGA4).to_polytope() == domains.example_region(4)
    tri = parse_domain('{"kind":"polytope","vertices":[["0","0"],["1","0"],["0","1"]]}')
    assert tri.to_polytope() == domains.ball(1)
    assert parse_domain('{"kind":"polydisk","a":"1","b":"2"}').to_polytope() == domains.polydisk(1, 2)
    assert parse_domain('{"kind":"ellipsoid","a":"1","b":"3/2"}').to_polytope() == domains.ellipsoid(1, "3/2")


@pytest.mark.parametrize(
    "text, fragment",
    [
        ('{"kind":"torus"}', "kind"),
        ('{"kind":"ball","capacity":"0"}', "capacity"),
        ('{"kind":"ball","capacity":"1.5"}', "capacity"),
        ('{"kind":"polydisk","a":"1"}', "'b'"),
        ('{"kind":"polytope","vertices":[["0","0"],["1"]]}', "vertices[1]"),
        ('{"kind":"polytope","vertices":[["0","0"],["1","1"],["2","2"]]}', "zero area"),
        ('{"kind":"ball",\n "capacity": }', "line 2"),
        ("[1, 2]", "object"),
    ],
)
def test_parse_domain_errors(text, fragment):
    with pytest.raises(DomainParseError) as err:
        parse_domain(text)
    assert fragment in str(err.value)


def test_domain_round_trip():
    for text in (OMEGA4, SQUARE, WEAK, '{"kind":"ball","capacity":"2/3"}', '{"kind":"example_r","r":"5/2"}'):
        spec = parse_domain(text)
        assert parse_domain(json.dumps(spec.to_json())) == spec


def test_caps_region_r4(capsys):
    code, out, _ = run(capsys, "caps", OMEGA4, "--k-max", "5", "--quantities", "lk,gh", "--format", "csv")
    assert code == 0
    rows = csv_rows(out)
    assert rows[0] == ["k", "lk", "gh"]
    assert [r[1] for r in rows[1:]] == ["1", "7/4", "2", "11/4", "3"]
    assert [r[2] for r in rows[1:]] == ["1", "7/4", "5/2", "13/4", "4"]


def test_caps_ball_and_square(capsys):
    _, out, _ = run(capsys, "caps", '{"kind":"ball","capacity":"1"}', "--k-max", "6", "--quantities", "lk", "--format", "csv")
    assert [r[1] for r in csv_rows(out)[1:]] == ["1", "1", "2", "2", "2", "3"]
    _, out, _ = run(capsys, "caps", SQUARE, "--k-max", "4", "--quantities", "lk,uk", "--format", "json")
    rows = json.loads(out)["rows"]
    assert [r["lk"] for r in rows] == [r["uk"] for r in rows] == ["1", "2", "2", "3"]


def test_caps_table_format(capsys):
    code, out, _ = run(capsys, "caps", OMEGA4, "--k-max", "2", "--quantities", "lk,slope,width")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["k", "lk", "slope_k", "width"]
    assert lines[2].split() == ["2", "7/4", "1", "1"]


def test_exit_code_not_strongly_convex(capsys):
    code, _, err = run(capsys, "caps", WEAK)
    assert code == 2 and "--oracle-only" in err
    code, out, _ = run(capsys, "caps", WEAK, "--oracle-only", "--k-max", "3", "--format", "csv")
    assert code == 0 and [r[1] for r in csv_rows(out)[1:]] == ["1", "2", "2"]


def test_exit_code_parse_error(capsys, tmp_path):
    assert run(capsys, "caps", '{"kind":"ball","capacity":"-1"}')[0] == 1
    assert run(capsys, "caps", str(tmp_path / "missing.json"))[0] == 1
    assert run(capsys, "caps", SQUARE, "--quantities", "lk,ech")[0] == 1
    assert run(capsys, "caps", SQUARE, "--k-max", "0")[0] == 1
    assert run(capsys, "verify")[0] == 1


def test_oracle_check(capsys, monkeypatch):
    code, _, _ = run(capsys, "caps", OMEGA4, "--oracle-check", "--k-max", "6")
    assert code == 0
    monkeypatch.setattr(cli, "l_k_bruteforce", lambda omega, k, restrict_to_U=False: 99)
    code, out, err = run(capsys, "caps", OMEGA4, "--oracle-check", "--k-max", "3")
    assert code == 3 and "mismatch" in out


def test_config_file_and_override(capsys, tmp_path):
    cfg = tmp_path / "run.json"
    cfg.write_text(json.dumps({"k_max": 3, "quantities": ["uk"], "format": "csv"}))
    _, out, _ = run(capsys, "caps", SQUARE, "--config", str(cfg))
    assert csv_rows(out) == [["k", "uk"], ["1", "1"], ["2", "2"], ["3", "2"]]
    _, out, _ = run(capsys, "caps", SQUARE, "--config", str(cfg), "--k-max", "1", "--format", "json")
    assert json.loads(out)["rows"] == [{"k": 1, "uk": "1"}]


def test_run_config_validation():
    assert RunConfig(quantities="lk, gh").quantities == ("lk", "gh")
    with pytest.raises(DomainParseError):
        RunConfig(k_max=0)
    with pytest.raises(DomainParseError):
        RunConfig(format="xml")


def test_out_file_and_domain_file(capsys, tmp_path):
    dom = tmp_path / "d.json"
    dom.write_text(OMEGA4)
    out = tmp_path / "caps.csv"
    code, printed, _ = run(capsys, "caps", str(dom), "--format", "csv", "--out", str(out))
    assert code == 0 and printed == ""
    assert csv_rows(out.read_text())[2] == ["2", "7/4", "7/4", "7/4"]


def test_interval(capsys):
    code, out, _ = run(capsys, "interval", OMEGA4, '{"points":[[0]],"dim":4}')
    assert code == 0 and "interval: [1, 1]" in out and "exact: yes" in out
    _, out, _ = run(capsys, "interval", '{"kind":"polydisk","a":"1","b":"2"}', '{"points":[[0],[0]],"dim":4}', "--format", "json")
    doc = json.loads(out)
    assert (doc["lower"], doc["upper"], doc["exact"]) == ("2", "3", False)
    code, out, _ = run(capsys, "interval", OMEGA4, '{"points":[[0,0]],"dim":4}')
    assert code == 0 and "lower bound: 7/4" in out and "warning" in out
    assert run(capsys, "interval", OMEGA4, '{"points":[[0]],"dim":6}')[0] == 1
    assert run(capsys, "interval", OMEGA4, '{"points":[[-1]]}')[0] == 1


def test_plot(capsys):
    _, out, _ = run(capsys, "plot", SQUARE, "--k-max", "4")
    assert csv_rows(out) == [
        ["k", "lk", "uk", "gh", "slope_k"],
        ["1", "1", "1", "1", "1/2"],
        ["2", "2", "2", "2", "1"],
        ["3", "2", "2", "3", "3/2"],
        ["4", "3", "3", "4", "2"],
    ]
    _, out, _ = run(capsys, "plot", '{"kind":"ball","capacity":"1"}', "--k-max", "3")
    rows = csv_rows(out)[1:]
    assert [r[1] for r in rows] == ["1", "1", "2"] and [r[4] for r in rows] == ["1/3", "2/3", "1"]
    _, out, _ = run(capsys, "plot", OMEGA4, "--k-max", "5")
    assert [r[1] for r in csv_rows(out)[1:]] == ["1", "7/4", "2", "11/4", "3"]


def test_fan(capsys):
    _, out, _ = run(capsys, "fan", OMEGA4, "--resolve", "--format", "csv")
    rows = csv_rows(out)[1:]
    assert [r[0] for r in rows] == ["(0,-1)", "(1,0)*", "(4,1)", "(3,1)*", "(2,1)*", "(1,1)*", "(0,1)", "(-1,0)"]
    _, out, _ = run(capsys, "fan", '{"kind":"ball","capacity":"1"}', "--resolve", "--format", "csv")
    assert not any("*" in r[0] for r in csv_rows(out))
    _, out, _ = run(capsys, "fan", SQUARE, "--format", "csv")
    rows = csv_rows(out)[1:]
    assert len(rows) == 4
    assert {r[0]: (r[1], r[2]) for r in rows}["(1,0)"] == ("1", "2")
    assert {r[0]: r[2] for r in rows}["(-1,0)"] == "-"


def test_verify(capsys, monkeypatch):
    code, out, _ = run(capsys, "verify", "--golden", OMEGA4)
    assert code == 0 and "FAIL" not in out and out.count("PASS") == 12
    monkeypatch.setattr(cli, "gh_capacity", lambda omega, k: 0)
    code, out, _ = run(capsys, "verify", "--golden")
    assert code == 3 and "FAIL  r=4 region gh" in out


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "toricaps", "caps", SQUARE, "--k-max", "2", "--format", "csv"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and res.stdout.splitlines()[-1] == "2,2,2,2"


def test_stdin_domain(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO(SQUARE))
    code, out, _ = run(capsys, "caps", "-", "--k-max", "1", "--format", "csv")
    assert code == 0 and csv_rows(out)[1] == ["1", "1", "1", "1"]


def test_spec_dataclass_param():
    spec = DomainSpec("ball", (("capacity", 2),))
    assert spec.param("capacity") == 2 and spec.to_json() == {"kind": "ball", "capacity": "2"}

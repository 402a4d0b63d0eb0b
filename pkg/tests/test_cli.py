"""Command-line interface: formats, exit codes, determinism, fault injection."""

import json
import math

import pytest

import airylocus.cli
import airylocus.zeros
from airylocus import BranchLost
from airylocus.cli import main
from airylocus.verify import _check_cross_consistency, _check_identities

KNOT = 1.0 / math.sqrt(3.0)
CRITICAL_ROW_1 = ("1,1.9863527074304728,2.6663526904069377,"
                  "5.0905064853074737,12.312455672260523,0.57735026918962584")


def test_critical_csv(capsys):
    assert main(["critical", "--count", "2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "k,beta_abs,alpha_abs,delta_k,eps_k,knot"
    assert lines[1] == CRITICAL_ROW_1
    assert len(lines) == 3
    # 17 significant digits survive a parse round trip
    cells = lines[1].split(",")
    assert float(cells[4]) == 12.312455672260523


def test_critical_count_validation(capsys):
    assert main(["critical", "--count", "0"]) == 2
    assert main(["critical", "--count", "11"]) == 2
    err = capsys.readouterr().err
    assert "--count" in err


def test_critical_json_envelope(capsys):
    assert main(["--format", "json", "critical", "--count", "2"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["schema_version"] == 1
    assert doc["produced_by"] == "critical --count 2"
    assert [row["k"] for row in doc["payload"]] == [1, 2]
    row = doc["payload"][0]
    assert row["eps_k"] == pytest.approx(12.312455672260523, rel=1e-15)
    assert row["knot"] == pytest.approx(KNOT, rel=1e-15)


def test_eigenvalues_stdout(capsys):
    assert main(["eigenvalues", "--eps", "20", "--max", "6"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "re_lambda,im_lambda,multiplicity,residual"
    rows = [line.split(",") for line in lines[1:]]
    assert len(rows) >= 4
    # the conjugate pair leads, lower half plane first
    assert float(rows[0][1]) < 0.0 < float(rows[1][1])
    assert abs(float(rows[0][0]) - float(rows[1][0])) < 1e-14
    assert abs(float(rows[0][1]) + float(rows[1][1])) < 1e-14
    assert all(r[2] == "1" for r in rows)
    for r in rows[2:]:
        assert abs(float(r[1])) < 1e-10


def test_eigenvalues_validation(capsys):
    assert main(["eigenvalues", "--eps", "-1"]) == 2
    assert "--eps" in capsys.readouterr().err


def test_trace_file_with_event(tmp_path):
    out = tmp_path / "trace.csv"
    assert main(["trace", "--branch", "1", "--from", "4", "--to", "6",
                 "--out", str(out)]) == 0
    data = out.read_bytes()
    assert b"\r" not in data
    lines = data.decode().splitlines()
    assert lines[0] == "eps,re_lambda,im_lambda,branch,event"
    rows = [line.split(",") for line in lines[1:]]
    eps = [float(r[0]) for r in rows]
    assert eps == sorted(eps)
    assert eps[0] == 4.0 and eps[-1] == 6.0
    events = [r for r in rows if r[4]]
    assert len(events) == 1
    assert events[0][4] == "KnotCrossing"
    assert abs(float(events[0][0]) - 5.0905064853074737) < 1e-8
    assert abs(float(events[0][1]) - KNOT) < 1e-9
    assert all(r[3] == "1" for r in rows)


def test_trace_degenerate_range_header_only(tmp_path):
    out = tmp_path / "empty.csv"
    assert main(["trace", "--branch", "1", "--from", "5", "--to", "5",
                 "--out", str(out)]) == 0
    assert out.read_text() == "eps,re_lambda,im_lambda,branch,event\n"


def test_trace_exit_codes(tmp_path, monkeypatch, capsys):
    out = str(tmp_path / "x.csv")
    assert main(["trace", "--branch", "0", "--from", "1", "--to", "2",
                 "--out", out]) == 2
    assert main(["trace", "--branch", "1", "--from", "3", "--to", "2",
                 "--out", out]) == 2

    def boom(n, e0, e1):
        raise BranchLost("continuation failed")

    monkeypatch.setattr(airylocus.cli, "trace_lambda", boom)
    assert main(["trace", "--branch", "1", "--from", "1", "--to", "2",
                 "--out", out]) == 3
    assert "numerical failure" in capsys.readouterr().err


def test_gamma_markers(tmp_path):
    out = tmp_path / "gamma.csv"
    s3 = math.sqrt(3.0)
    assert main(["gamma", "--k", "1", "--from", f"{-s3:.17g}",
                 "--to", f"{s3:.17g}", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "a,re_xi,im_xi,marker"
    rows = [line.split(",") for line in lines[1:]]
    assert rows[0][3] == "alpha" and rows[-1][3] == "beta"
    marks = [r[3] for r in rows if r[3]]
    assert marks == ["alpha", "z", "beta"]
    z_row = next(r for r in rows if r[3] == "z")
    assert float(z_row[0]) == 0.0
    assert abs(float(z_row[1]) - 0.97754488673162065) < 1e-9
    assert abs(float(z_row[2]) - 2.1412907060387445) < 1e-9


def test_gamma_degenerate_window_file(tmp_path):
    out = tmp_path / "point.csv"
    assert main(["gamma", "--k", "1", "--from", "0.5", "--to", "0.5",
                 "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 2
    a, re_xi, im_xi, marker = lines[1].split(",")
    assert float(a) == 0.5 and marker == ""
    assert float(re_xi) > 0.0 and float(im_xi) > 0.0


def test_gamma_validation(tmp_path):
    out = str(tmp_path / "x.csv")
    assert main(["gamma", "--k", "0", "--from", "0", "--to", "1",
                 "--out", out]) == 2
    assert main(["gamma", "--k", "1", "--from", "1", "--to", "0",
                 "--out", out]) == 2


def test_byte_determinism(tmp_path):
    outs = []
    for name in ("a.csv", "b.csv"):
        out = tmp_path / name
        assert main(["critical", "--count", "3", "--out", str(out)]) == 0
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]
    outs = []
    for name in ("ga.csv", "gb.csv"):
        out = tmp_path / name
        assert main(["gamma", "--k", "1", "--from", "-1", "--to", "1",
                     "--out", str(out)]) == 0
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]


def test_usage_errors_from_argparse():
    with pytest.raises(SystemExit) as exc:
        main(["--format", "yaml", "critical", "--count", "1"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_verify_fast_cli(capsys):
    assert main(["--jobs", "4", "verify", "--level", "fast"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["schema_version"] == 1
    assert doc["level"] == "fast"
    assert doc["overall"] is True
    assert doc["checks"]
    for chk in doc["checks"]:
        assert set(chk) >= {"name", "expected", "observed", "tolerance",
                            "passed", "runtime_ms", "provenance"}
        assert chk["passed"] is True


def test_verify_failure_exit_code(monkeypatch, capsys):
    class FakeReport:
        overall = False

        def to_json(self):
            return "{}"

    monkeypatch.setattr(airylocus.cli, "run_verification",
                        lambda level, jobs=None: FakeReport())
    assert main(["verify", "--level", "fast"]) == 1


def test_verify_detects_planted_constant_fault(monkeypatch):
    # corrupting the knot constant must trip the cross-consistency check
    # while leaving the function-identity checks untouched
    monkeypatch.setattr(airylocus.zeros, "KNOT", 0.6)
    idents = _check_identities("fast")
    assert all(c.passed for c in idents)
    cross = _check_cross_consistency("fast")
    failed = [c.name for c in cross if not c.passed]
    assert "cross-collision-lambda" in failed

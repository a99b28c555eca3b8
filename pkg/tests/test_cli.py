import csv
import io
import json

import pytest

from k3scroll.cli import main, parse_range


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_invariants_json(capsys):
    code, out, _ = run(capsys, "invariants", "--g", "8", "--r", "1", "--d", "5", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert list(data) == ["params", "bundle_E", "bundle_F", "scroll", "ruled", "flags"]
    assert data["scroll"]["R"] == 33
    assert data["scroll"]["delta_symbolic"] == 93
    assert data["scroll"]["delta_printed"] == 107
    assert data["scroll"]["hilb_dim"] == 1174
    assert data["ruled"]["n"] == 42 and data["ruled"]["h"] == 27
    assert data["bundle_E"]["mukai"] == [2, 1, 4]
    assert data["bundle_F"] == {"rank": 2, "c1_mult": 3, "c2": 33, "h0": 34, "mukai": [2, 3, 32]}
    assert data["flags"] == {"admissible": True, "forced": False}


def test_json_round_trip(capsys):
    _, out, _ = run(capsys, "invariants", "--g", "11", "--r", "2", "--d", "10")
    assert json.dumps(json.loads(out), indent=2, ensure_ascii=False) + "\n" == out


def test_invariants_inadmissible(capsys):
    code, out, err = run(capsys, "invariants", "--g", "8", "--r", "1", "--d", "33")
    assert code == 2
    assert out == ""
    assert "d exceeds g+r-1" in err


def test_invariants_forced(capsys):
    code, out, _ = run(capsys, "invariants", "--g", "8", "--r", "1", "--d", "4", "--force")
    assert code == 0
    flags = json.loads(out)["flags"]
    assert flags["forced"] and not flags["admissible"]
    assert flags["note"] == "numerically inadmissible: rho = -2"


def test_invariants_csv(capsys):
    _, out, _ = run(capsys, "invariants", "--g", "8", "--r", "1", "--d", "5", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert len(rows) == 2
    header = rows[0]
    assert header[:3] == ["params.g", "params.r", "params.d"]
    assert "bundle_E.mukai.2" in header
    assert dict(zip(header, rows[1]))["scroll.hilb_dim"] == "1174"


@pytest.mark.parametrize(
    "argv",
    [
        ["invariants", "--g", "x", "--r", "1", "--d", "5"],
        ["invariants", "--g", "8"],
        ["bogus"],
        ["table", "foo", "--g", "3..5"],
        ["audit", "--g", "5..3"],
        ["audit", "--g", "2..4"],
        ["enumerate", "--g", "2"],
    ],
)
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as info:
        code = main(argv)
        raise SystemExit(code)
    assert info.value.code == 1


def test_enumerate(capsys):
    _, out, _ = run(capsys, "enumerate", "--g", "8", "--r-max", "1", "--format", "json")
    rows = json.loads(out)["rows"]
    assert [r["d"] for r in rows] == [5, 6, 7, 8]
    assert list(rows[0]) == ["r", "d", "rho", "R", "delta_symbolic", "delta_printed", "dim_Mv", "hilb_dim"]

    _, out, _ = run(capsys, "enumerate", "--g", "3", "--format", "json")
    assert len(json.loads(out)["rows"]) == 1

    _, out, _ = run(capsys, "enumerate", "--g", "8", "--r-max", "3", "--format", "json")
    assert any(r["r"] == 2 and r["d"] == 8 for r in json.loads(out)["rows"])


def test_audit_findings(capsys):
    code, out, _ = run(capsys, "audit", "--g", "3..12", "--r", "1")
    assert code == 0
    recs = json.loads(out)["records"]
    degree = [r for r in recs if r["id"] == "DEGREE"]
    assert degree and all(r["status"] == "MISMATCH" for r in degree)
    kd = {(r["g"], r["d"]) for r in recs if r["id"] == "KD-STRICT" and r["status"] == "MISMATCH"}
    assert kd == {(3, 3), (4, 3), (4, 4), (5, 5)}


def test_audit_csv(capsys):
    _, out, _ = run(capsys, "audit", "--g", "8..8", "--r", "1", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    # 4 triples, 8 claims each
    assert len(rows) == 32
    assert rows[0]["id"] == "DEGREE"


def test_audit_higher_rank(capsys):
    _, out, _ = run(capsys, "audit", "--g", "8..8", "--r", "5")
    recs = json.loads(out)["records"]
    assert {r["r"] for r in recs} == {1, 2, 3, 4, 5}


def test_audit_markdown_escapes_pipes(capsys):
    _, out, _ = run(capsys, "audit", "--g", "8..8", "--format", "markdown")
    sigma = next(line for line in out.splitlines() if line.startswith("| SIGMA"))
    assert r"\|_C" in sigma


def test_tables(capsys):
    _, out, _ = run(capsys, "table", "gonality", "--g", "3..8", "--format", "json")
    rows = json.loads(out)["rows"]
    assert [r["gonality"] for r in rows] == [3, 3, 4, 4, 5, 5]
    assert [r["rho"] for r in rows] == [1, 0, 1, 0, 1, 0]

    _, out, _ = run(capsys, "table", "mukai", "--g", "10", "--format", "json")
    (row,) = json.loads(out)["rows"]
    assert row["dominant"] is False and "hypersurface" in row["note"]

    _, out, _ = run(capsys, "table", "ruled", "--g", "8", "--format", "json")
    assert json.loads(out)["rows"] == [{"g": 8, "n": 42, "h": 27, "hilb_dim_ruled": 833}]


def test_markdown_is_aligned(capsys):
    _, out, _ = run(capsys, "table", "gonality", "--g", "3..12")
    lines = out.strip().splitlines()
    assert len({len(line) for line in lines}) == 1


def test_parse_range():
    assert parse_range("3..12") == (3, 12)
    assert parse_range("8") == (8, 8)


def test_audit_self_check_exit(capsys, monkeypatch):
    from k3scroll import audit

    broken = audit.make_record
    monkeypatch.setitem(
        audit._EVALUATORS,
        "SIGMA",
        lambda g, r, d: broken(audit.CLAIMS["SIGMA"], g, r, d, 1, 0),
    )
    code, out, err = run(capsys, "audit", "--g", "8..8")
    assert code == 3
    assert out and "self-check" in err

from __future__ import annotations

import json

import pytest

from corpus import FIXTURES, q7
from mclusters.cli import main, parse_config
from mclusters.formats import parse_angulation, parse_quiver
from mclusters.quiver import quivers_isomorphic

KRONECKER = str(FIXTURES / "ej-kronecker.ang")
Q7 = str(FIXTURES / "q7.quiver")
Q7_CUT = str(FIXTURES / "q7-cut.quiver")


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_validate_and_faces(capsys):
    status, out, _ = run(capsys, "validate", KRONECKER)
    assert status == 0 and out == "valid strip m=1 p=1 q=1: 2 arcs, 2 faces\n"
    status, out, _ = run(capsys, "faces", KRONECKER)
    assert out == "face 0: bp0 a0 a1\nface 1: bq0 a0 a1\n"


def test_quiver_formats(capsys):
    status, out, _ = run(capsys, "quiver", KRONECKER, "--format", "dot")
    assert status == 0 and out.startswith("digraph Q {")
    assert out.count("-> v0;") == 2
    status, out, _ = run(capsys, "quiver", KRONECKER, "--format", "json")
    assert json.loads(out)["arrows"] == [{"id": 0, "source": 1, "target": 0}, {"id": 1, "source": 1, "target": 0}]
    status, out, _ = run(capsys, "quiver", KRONECKER)
    assert out == "vertices: 2\narrow 0 1 0\narrow 1 1 0\n"


def test_classify(capsys):
    status, out, _ = run(capsys, "classify", Q7)
    report = json.loads(out)
    assert status == 0 and report["rep_type"] == "Infinite"
    assert list(report) == sorted(report)
    status, out, _ = run(capsys, "classify", Q7, "--m", "3")
    assert json.loads(out)["mcta_Atilde_infinite"] is True
    status, out, _ = run(capsys, "classify", KRONECKER)
    assert json.loads(out)["census"] == [0]


def test_enumerate(capsys):
    status, out, _ = run(capsys, "enumerate", "polygon", "m=1", "n=3")
    assert status == 0 and out.startswith("# 5 angulations\n")
    status, out, _ = run(capsys, "enumerate", "strip", "m=1", "p=1", "q=1", "--format", "json")
    assert len(json.loads(out)) == 4


def test_iso(capsys, tmp_path):
    status, out, _ = run(capsys, "iso", Q7, Q7)
    assert status == 0 and "vertex 1 -> 1" in out
    status, out, _ = run(capsys, "iso", Q7, Q7_CUT)
    assert status == 1 and out == "not isomorphic\n"
    opposite = tmp_path / "opp.quiver"
    from mclusters.formats import serialize_quiver
    opposite.write_text(serialize_quiver(q7().opposite()))
    assert run(capsys, "iso", Q7, str(opposite))[0] == 1
    assert run(capsys, "iso", Q7, str(opposite), "--up-to-opposite")[0] == 0


def test_cut_extend(capsys):
    status, out, _ = run(capsys, "cut", Q7, "--arrows", "4")
    assert status == 0 and parse_quiver(out) == parse_quiver(open(Q7_CUT).read())
    status, out, _ = run(capsys, "cut", Q7)
    assert parse_quiver(out) == parse_quiver(open(Q7_CUT).read())
    status, out, _ = run(capsys, "extend", Q7_CUT, "--m", "3")
    assert quivers_isomorphic(parse_quiver(out), q7()) is not None
    status, _, err = run(capsys, "cut", Q7, "--arrows", "5")
    assert status == 1 and err.startswith("BadCutSet")
    status, _, err = run(capsys, "extend", Q7, "--m", "3")
    assert status == 1 and err.startswith("SaturatedCyclePresent")


def test_unroll(capsys, tmp_path):
    status, _, err = run(capsys, "unroll", KRONECKER)
    assert status == 1 and err.startswith("RootCyclePresent")
    path = tmp_path / "fan.ang"
    path.write_text("strip m=2 p=1 q=1\nt 0 0\nt 1 1\n")
    status, out, _ = run(capsys, "unroll", str(path))
    assert status == 0
    assert parse_angulation(out).surface.npoints == 8


def test_verify(capsys):
    status, out, _ = run(capsys, "verify", "strip", "m=1", "p=1", "q=1", "--winding", "2")
    assert status == 0 and out.endswith("OK 4 instances\n")
    status, out, _ = run(capsys, "verify", "polygon", "m=1", "n=4")
    assert status == 0 and "OK 14 instances" in out
    status, out, _ = run(capsys, "verify", "strip", "m=2", "p=2", "q=1", "--winding", "2")
    assert status == 0 and "unrolled: 31" in out


def test_verify_extension(capsys):
    status, out, _ = run(capsys, "verify-extension", Q7, "--m", "3")
    assert status == 0 and out.endswith("OK 1 instances\n")
    assert '"case": "ii"' in out
    status, out, _ = run(capsys, "verify-extension", Q7, "--m", "2")
    assert status == 1 and "PredicateFails" in out
    status, out, _ = run(capsys, "verify-extension", "strip", "m=1", "p=3", "q=1", "--all-cuts")
    assert status == 0 and out.endswith("OK 30 instances\n")


def test_usage_errors(capsys):
    for argv in (["bogus"], ["verify"], ["verify", "strip", "m=1"], ["quiver", KRONECKER, "--nope"],
                 ["verify", "strip", "m=1", "p=1", "q=1", "--winding", "0"], ["verify-extension", Q7]):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2
    capsys.readouterr()


def test_domain_errors(capsys, tmp_path):
    status, _, err = run(capsys, "validate", str(tmp_path / "missing.ang"))
    assert status == 1 and "FileNotFoundError" in err
    bad = tmp_path / "bad.ang"
    bad.write_text("polygon m=1 n=3\nd 0 2\nd 1 3\n")
    status, _, err = run(capsys, "validate", str(bad))
    assert status == 1 and err.startswith("CrossingArcs")


def test_outputs_are_byte_stable(capsys):
    first = run(capsys, "classify", Q7, "--m", "3")[1]
    assert run(capsys, "classify", Q7, "--m", "3")[1] == first


def test_run_config():
    cfg = parse_config(["verify", "strip", "m=2", "p=2", "q=1", "--all-cuts"])
    assert cfg.command == "verify" and cfg.all_cuts and cfg.winding_bound == 2
    assert cfg.surface.header() == "strip m=2 p=2 q=1"

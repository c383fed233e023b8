import pytest

import trkr


def test_unknot_homology_report():
    rep = trkr.homology("b=1;", N=2, kmax=9)
    assert rep["braid"] == "b=1;"
    assert rep["N"] == 2
    assert rep["sl"] == -1
    assert all(rep["audits"].values())
    free = [g for c in rep["components"] for g in c["free"]]
    assert sorted(g["k"] for g in free) == [-1, 1]
    assert {(e["eps"], e["k"]) for e in rep["sln"]} == {(1, -1), (1, 1)}


def test_positive_stabilization_invariance():
    assert trkr.compare("b=1;", "b=2; 1", N=1)
    assert not trkr.compare("b=1;", "b=2; -1", N=1)


def test_oracle_torsion_tail():
    gens = trkr.oracle("b=1;", N=1, kmax=6)
    parts = {(part, eps, j, k): m for part, eps, j, k, m in gens}
    assert parts[("free", 1, -1, 0)] == 1
    assert parts[("torsion", 1, -1, 2)] == 1


def test_checks_and_moves():
    ok, failures = trkr.stab_check("b=1;", N=1, kmax=7)
    assert ok, failures
    ok, failures = trkr.cone_check("b=1;", N=1, kmax=7)
    assert ok, failures
    assert trkr.apply_move("b=2; 1", "stab-neg") == "b=3; 1 -2"
    assert trkr.self_linking("b=2; 1 1 1") == 1


def test_errors_are_typed():
    with pytest.raises(trkr.TrkrError):
        trkr.homology("b=2; 5", N=1)

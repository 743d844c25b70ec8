import json

import pytest

import anomcheck


def test_registry():
    ids = anomcheck.identity_ids()
    assert len(ids) == 27
    assert ids == sorted(ids)


def test_verify():
    r = anomcheck.verify("cor1.5-dim4-xi", dim=4, l=3)
    assert r["status"] == "pass"
    assert r["residual"] == ""
    assert anomcheck.verify("agw-0.1", dim=12, xi=False, w_eq_tx=True)["l"] == 6


def test_inadmissible_geometry_raises():
    with pytest.raises(ValueError):
        anomcheck.verify("agw-0.1", dim=8, l=4)


def test_expand():
    assert anomcheck.expand("E2", 4) == "1 - 24*q - 72*q^2 - 96*q^3"
    with pytest.raises(anomcheck.PreconditionError):
        anomcheck.expand("E3", 2)


def test_decompose():
    d = anomcheck.decompose(12, l=3)
    assert d["case"] == 1
    assert d["b"][0] == "-1"
    assert d["b"][1].startswith("72 + p1(W)")
    assert d["closed_forms"]
    assert "zeta" in anomcheck.decompose(8, l=2)


def test_numeric():
    for law in anomcheck.transformation_laws():
        r = anomcheck.check_law(law)
        assert r["status"] == "pass", law
        assert r["max_deviation"] < 1e-9
    r = anomcheck.check_proposition("P", 12, l=3, tau=complex(0.1, 2.0))
    assert r["status"] == "pass"
    with pytest.raises(ValueError):
        anomcheck.check_proposition("P", 12, l=3, tau=1j)


def test_cli_json():
    code, out, _ = anomcheck.run_cli(["verify", "--id", "thm1.1-case1", "--dim", "12", "--w-rank", "2",
                                      "--format", "json", "--no-timing"])
    assert code == 0
    doc = json.loads(out)
    assert doc["summary"] == {"fail": 0, "pass": 1, "total": 1}
    assert anomcheck.run_cli(["verify", "--dim", "6"])[0] == 2

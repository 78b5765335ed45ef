"""Smoke test for the qheis extension module.

Build and install first:
    pip install --no-build-isolation ./crates/py
Then run with pytest or as a script.
"""

import json
import pathlib

import jsonschema
import pytest

import qheis

ROOT = pathlib.Path(__file__).resolve().parents[1]


def test_classical_normal_form():
    a = qheis.Algebra("classical", dim=1)
    assert a.normalize("p_1*x_1") == "x_1*p_1 - i*hbar"
    assert a.commutator("x_1", "p_1") == "i*hbar"
    assert a.generators == ["x_1", "p_1"]


def test_poly_arithmetic_and_quotient_equality():
    a = qheis.Algebra("wess")
    x, p = a.parse("x"), a.parse("p")
    lhs = x * p
    assert str(a.reduce(lhs - p * x)) == a.normalize("x*p - p*x")
    assert a.equal(p * x, a.parse("q*x*p - i*hbar*q^(1/2)*Lambda"))
    assert (x ** 2) == x * x
    assert "\\hat" in a.parse("Lambda*x").latex()


def test_gaddis_overlap_is_reported():
    a = qheis.Algebra("gaddis")
    assert a.normalize("y*x*x") == "q^2*x^2*y + hbar*(q + q^-1)*x*z"
    rep = a.confluence()
    assert not rep["confluent"]
    assert [u[0] for u in rep["unresolved"]] == ["y*z*x"]
    assert len(a.trace("y*x*x")) == 3


def test_ore_tower():
    a = qheis.Algebra("wess")
    rows = {(r[0], r[1]): r[2:] for r in a.ore(["Lambda", "p", "x"])}
    assert rows[("x", "p")] == ("q^-1*p", "i*q^(-1/2)*hbar*Lambda")


def test_presentation_files_round_trip(tmp_path):
    for path in sorted((ROOT / "docs" / "examples").glob("*.qh")):
        a = qheis.Algebra.from_file(str(path))
        assert a.confluence()["confluent"], path.name
        b = qheis.Algebra.from_text(a.to_text())
        assert b.to_text() == a.to_text()
    for fid, _summary, _params in qheis.families():
        if fid == "unified":
            continue
        a = qheis.Algebra(fid)
        assert qheis.Algebra.from_text(a.to_text()).to_text() == a.to_text()


def test_errors_map_to_categories():
    with pytest.raises(qheis.UsageError):
        qheis.Algebra("nope")
    a = qheis.Algebra("wess")
    with pytest.raises(qheis.ParseError):
        a.normalize("x*")
    with pytest.raises(qheis.EngineError):
        qheis.Algebra("wess_schwenk").ore(["p", "x"])
    assert issubclass(qheis.ParseError, qheis.QheisError)


def test_report_matches_schema():
    schema = json.loads((ROOT / "docs" / "report.schema.json").read_text())
    for selection in ["gaddis", "all"]:
        report = json.loads(qheis.run_verification(selection, 10))
        jsonschema.validate(report, schema)
        assert report["summary"]["unexpected"] == 0
        assert report["summary"]["total"] == len(report["cases"])


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))

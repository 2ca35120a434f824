import json
from pathlib import Path

import pytest

import monideal as mi

ROOT = Path(__file__).resolve().parents[2]
TRIANGLE = "(x*y, y*z, x*z)"


def test_parse_formats_agree():
    a = mi.Ideal(TRIANGLE)
    b = mi.Ideal("x y\ny z\nx z\n")
    assert a == b
    assert a.variables == ["x", "y", "z"]
    assert len(a) == 3 and a.is_square_free
    assert str(a) == "(x*y, x*z, y*z)"


def test_parse_error_position():
    with pytest.raises(mi.ParseError) as info:
        mi.Ideal("(x*y, y*")
    assert "1:" in str(info.value)
    assert isinstance(info.value, ValueError)


def test_triangle_square_and_primes():
    i2 = mi.power(mi.Ideal(TRIANGLE), 2)
    assert str(i2) == "(x^2*y^2, x^2*y*z, x^2*z^2, x*y^2*z, x*y*z^2, y^2*z^2)"
    assert mi.associated_primes(i2) == [["x", "y"], ["x", "z"], ["y", "z"], ["x", "y", "z"]]
    assert mi.associated_primes(i2, oracle=True) == mi.associated_primes(i2)
    assert mi.minimal_primes(i2) == [["x", "y"], ["x", "z"], ["y", "z"]]


def test_colon_and_symbolic():
    i = mi.Ideal(TRIANGLE)
    assert str(mi.colon(mi.power(i, 2), "x*y")) == "(x*y, x*z, y*z, z^2)"
    s2 = mi.symbolic_power(i, 2)
    assert s2.contains("x*y*z") and not mi.power(i, 2).contains("x*y*z")


def test_graph_predicates():
    assert not mi.konig(mi.Ideal(TRIANGLE))
    assert not mi.packing(mi.Ideal(TRIANGLE))
    assert mi.packing(mi.Ideal((ROOT / "golden" / "six_var.ideal").read_text()))
    with pytest.raises(mi.UsageError):
        mi.konig(mi.Ideal("(x^2*y)"))


def test_polarize_triangle_square():
    rep = mi.polarize(mi.Ideal(TRIANGLE), 2)
    assert rep["into"] and rep["onto"]
    assert len(rep["polarized_primes"]) == 10


def test_ntf_and_budget():
    v = mi.ntf(mi.Ideal("x1 x2\nx2 x3\nx3 x4\nx4 x1\n"), bound=3)
    assert v["onset"] is None and v["certified_ntf_up_to"] == 3
    b = mi.Budget()
    b.max_power = 2
    v = mi.ntf(mi.Ideal(TRIANGLE), bound=4, budget=b)
    assert v["resource_error"] is not None and v["onset"] == 2
    with pytest.raises(mi.ResourceError):
        mi.polarize(mi.Ideal(TRIANGLE), 3, budget=b)


@pytest.mark.parametrize("name", ["triangle", "five_cycle_deg3", "six_var"])
def test_analyze_matches_golden_and_schema(name):
    jsonschema = pytest.importorskip("jsonschema")
    ideal = mi.Ideal((ROOT / "golden" / f"{name}.ideal").read_text())
    doc = mi.envelope("analyze", ideal, mi.analyze(ideal))
    assert doc == json.loads((ROOT / "golden" / f"{name}.json").read_text())
    schema = json.loads((ROOT / "schema" / "monideal.schema.json").read_text())
    jsonschema.validate(doc, schema, cls=jsonschema.Draft202012Validator)
    assert doc["schema_version"] == mi.SCHEMA_VERSION

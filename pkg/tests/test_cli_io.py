import json
from fractions import Fraction

import pytest

from dghom.catalog import (
    Quiver,
    a2,
    dual_numbers,
    exterior_generator,
    ground_field,
    path_category,
    random_category,
)
from dghom.cli_io import (
    SchemaError,
    bimodule_from_document,
    bimodule_to_document,
    category_from_document,
    category_to_document,
    dump_report,
    format_rational,
    parse_field,
    parse_rational,
    report_document,
)
from dghom.constructions import one_dimensional_module
from dghom.dgcore import ComputationParams, validate


def test_parse_rational_accepts_canonical():
    assert parse_rational("3") == 3
    assert parse_rational("-3") == -3
    assert parse_rational("1/2") == Fraction(1, 2)
    assert parse_rational("-7/3") == Fraction(-7, 3)
    assert parse_rational("0") == 0


@pytest.mark.parametrize("bad", ["2/4", "3/1", "+3", "1/-2", "-0", "03", "1.5", ""])
def test_parse_rational_rejects_noncanonical(bad):
    with pytest.raises(SchemaError):
        parse_rational(bad)


def test_format_rational_roundtrip():
    for v in [Fraction(0), Fraction(5), Fraction(-2, 3), Fraction(22, 7)]:
        assert parse_rational(format_rational(v)) == v


def test_parse_field():
    assert parse_field("q").char == 0
    assert parse_field("fp:7").char == 7
    with pytest.raises(SchemaError):
        parse_field("fp:6")
    with pytest.raises(SchemaError):
        parse_field("float")


def roundtrip(cat):
    doc = category_to_document(cat)
    # documents must survive JSON text serialization
    doc2 = json.loads(json.dumps(doc))
    back = category_from_document(doc2)
    assert back.objects == cat.objects
    assert set(back.hom) == set(cat.hom)
    for key in cat.hom:
        assert back.hom[key].labels == cat.hom[key].labels
        assert back.hom[key].degree == cat.hom[key].degree
    assert back.ids == cat.ids
    assert back.d == cat.d
    for key, table in cat.compose.items():
        got = {k: v for k, v in back.compose.get(key, {}).items() if v}
        want = {k: v for k, v in table.items() if v}
        assert got == want, key
    return back


def test_roundtrip_catalog_entries():
    for e in [ground_field(), a2(), dual_numbers(), exterior_generator(-1)]:
        roundtrip(e.category)


def test_roundtrip_hundred_random_categories():
    for seed in range(100):
        roundtrip(random_category(seed).category)


def test_noncanonical_rational_rejected_in_document():
    doc = category_to_document(dual_numbers().category)
    doc["compose"][0]["table"][0]["result"][0]["coeff"] = "2/4"
    with pytest.raises(SchemaError):
        category_from_document(doc)


def test_schema_error_locates_bad_key():
    doc = category_to_document(a2().category)
    doc["hom"][0]["basis"][0]["degree"] = "zero"
    with pytest.raises(SchemaError) as err:
        category_from_document(doc)
    assert "hom[0]" in str(err.value)


def test_d_squared_axiom_error_names_hom_pair():
    # a degree chain u -> v -> w with d(u) = v, d(v) = w: well-formed tables
    # but d^2 != 0, an axiom error naming the offending hom space
    doc = {
        "format": "dg-category/1",
        "name": "bad",
        "objects": ["pt"],
        "id": {"pt": "e"},
        "hom": [{"src": "pt", "tgt": "pt",
                 "basis": [{"label": "e", "degree": 0},
                           {"label": "u", "degree": 0},
                           {"label": "v", "degree": 1},
                           {"label": "w", "degree": 2}]}],
        "d": [{"src": "pt", "tgt": "pt",
               "matrix": [["0", "0", "0", "0"],
                          ["0", "0", "0", "0"],
                          ["0", "1", "0", "0"],
                          ["0", "0", "1", "0"]]}],
        "compose": [{"x": "pt", "y": "pt", "z": "pt", "table": [
            {"g": "e", "f": lab, "result": [{"label": lab, "coeff": "1"}]}
            for lab in ["e", "u", "v", "w"]
        ] + [
            {"g": lab, "f": "e", "result": [{"label": lab, "coeff": "1"}]}
            for lab in ["u", "v", "w"]
        ]}],
    }
    cat = category_from_document(doc)
    rep = validate(cat)
    assert not rep.ok
    msgs = [p for p in rep.problems if p["code"] == "d-squared"]
    assert msgs and "hom(pt,pt)" in msgs[0]["message"]


def test_bimodule_roundtrip():
    b = a2().category
    k = path_category(Quiver(["p"], []), name="kp")
    m = one_dimensional_module(b, k, ("y", "p"))
    doc = json.loads(json.dumps(bimodule_to_document(m)))
    back = bimodule_from_document(doc, b, k)
    assert set(back.spaces) == set(m.spaces)
    assert back.a_act == m.a_act
    assert back.b_act == m.b_act


def test_report_documents_are_deterministic():
    params = ComputationParams()
    r1 = dump_report(report_document("hh", "catalog:a2", params, {"dims": {0: 2}}))
    r2 = dump_report(report_document("hh", "catalog:a2", params, {"dims": {0: 2}}))
    assert r1 == r2
    assert "version" in r1


def test_report_serializes_fractions_and_matrices():
    from dghom.exactla import SparseMatrix

    params = ComputationParams()
    mat = SparseMatrix.from_dense([[1, 0], [0, Fraction(-1, 2)]])
    text = dump_report(report_document("t", "s", params, {"m": mat, "v": Fraction(1, 3)}))
    doc = json.loads(text)
    assert doc["results"]["v"] == "1/3"
    assert doc["results"]["m"]["entries"] == [[0, 0, "1"], [1, 1, "-1/2"]]

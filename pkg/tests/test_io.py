import json
from fractions import Fraction

import pytest

from liegeom import (DocumentSyntaxError, KForm, LieAlgebra, Metric,
                     ComplexStructure, Connection, ValidationError,
                     document_from, get_example, parse, serialize)

Q = Fraction


def su2_document():
    entry = get_example("su2")
    omega = KForm.from_components(3, 2, {(0, 1): Q(1), (1, 2): Q(-1, 2)})
    return document_from(entry.algebra, connection=entry.connection,
                         metric=entry.metric, forms=[("omega", omega)],
                         parameters={"c": Q(1)})


def minimal_text():
    return """{
  "basis": ["v"],
  "dim": 1,
  "format_version": 1
}"""


# -- round trips -----------------------------------------------------------

def test_serialize_parse_round_trip():
    doc = su2_document()
    text = serialize(doc)
    assert text.endswith("\n")
    assert parse(text) == doc
    assert serialize(parse(text)) == text
    json.loads(text)


def test_minimal_document_is_abelian():
    doc = parse(minimal_text())
    assert doc.brackets == ()
    algebra = doc.to_algebra()
    assert algebra.dim == 1
    assert algebra.c.is_zero()
    assert doc.to_connection(algebra) is None
    assert doc.to_metric(algebra) is None
    assert doc.to_form("omega") is None
    assert doc.parameter("c") is None


def test_su2_document_shape():
    doc = su2_document()
    assert len(doc.brackets) == 3
    assert doc.brackets[0] == ((0, 1, 2), Q(2))
    text = serialize(doc)
    # one compact row per coefficient entry
    assert '    [0, 1, 2, "2"]' in text
    assert '"parameters": {"c": "1"}' in text


def test_materializers_reproduce_structures():
    entry = get_example("su2")
    doc = su2_document()
    algebra = doc.to_algebra()
    assert algebra == entry.algebra
    assert doc.to_connection(algebra) == entry.connection
    assert doc.to_metric(algebra) == entry.metric
    omega = doc.to_form("omega")
    assert list(omega.components()) == [
        ((0, 1), Q(1)), ((1, 2), Q(-1, 2))]
    assert doc.parameter("c") == Q(1)


def test_complex_structure_round_trip():
    A = LieAlgebra.abelian(("x", "y"))
    J = ComplexStructure.from_rows(A, [[0, -1], [1, 0]])
    doc = document_from(A, complex_structure=J)
    back = parse(serialize(doc))
    assert back.to_complex_structure(back.to_algebra()) == J


def test_parse_normalises_coefficients():
    text = """{
  "format_version": 1,
  "dim": 2,
  "basis": ["u", "v"],
  "brackets": [[0, 1, 1, "2/4"]],
  "metric": [[0, 0, "1"], [0, 1, "0"], [1, 1, "1"]]
}"""
    doc = parse(text)
    assert doc.brackets == (((0, 1, 1), Q(1, 2)),)
    # the explicit zero is dropped
    assert doc.metric == (((0, 0), Q(1)), ((1, 1), Q(1)))


def test_parse_accepts_negative_and_improper_rationals():
    text = """{
  "format_version": 1,
  "dim": 2,
  "basis": ["u", "v"],
  "brackets": [[0, 1, 0, "-4/2"]]
}"""
    assert parse(text).brackets == (((0, 1, 0), Q(-2)),)


# -- syntax errors ---------------------------------------------------------

def test_malformed_json_reports_position():
    with pytest.raises(DocumentSyntaxError) as info:
        parse('{\n  "dim": oops\n}')
    assert info.value.line == 2
    assert info.value.column >= 1


# -- schema errors ---------------------------------------------------------

def field_of(text):
    with pytest.raises(ValidationError) as info:
        parse(text)
    return info.value.field


def wrap(**overrides):
    base = {"format_version": 1, "dim": 2, "basis": ["u", "v"]}
    base.update(overrides)
    return json.dumps(base)


def test_top_level_schema_errors():
    assert field_of("[]") == "document"
    assert field_of(wrap(extra=1)) == "document"
    assert field_of(wrap(format_version=2)) == "format_version"
    assert field_of('{"dim": 2, "basis": ["u", "v"]}') == "format_version"


def test_dim_errors():
    assert field_of(wrap(dim=0, basis=[])) == "dim"
    assert field_of(wrap(dim=65, basis=["x"] * 65)) == "dim"
    assert field_of(wrap(dim="2")) == "dim"
    assert field_of(wrap(dim=True, basis=["x"])) == "dim"


def test_basis_errors():
    assert field_of(wrap(basis=["u"])) == "basis"
    assert field_of(wrap(basis=["u", "2v"])) == "basis"
    assert field_of(wrap(basis=["u", "u"])) == "basis"
    assert field_of(wrap(basis="uv")) == "basis"


def test_bracket_entry_errors():
    assert field_of(wrap(brackets={})) == "brackets"
    assert field_of(wrap(brackets=[[0, 1, 1]])) == "brackets[0]"
    assert field_of(wrap(brackets=[[0, 1, 2, "1"]])) == "brackets[0]"
    assert field_of(wrap(brackets=[[1, 0, 1, "1"]])) == "brackets[0]"
    assert field_of(wrap(brackets=[[0, 0, 1, "1"]])) == "brackets[0]"
    assert field_of(wrap(
        brackets=[[0, 1, 1, "1"], [0, 1, 0, "2"],
                  [0, 1, 1, "3"]])) == "brackets[2]"
    assert field_of(wrap(brackets=[[0, 1, 1, "x"]])) == "brackets[0]"
    assert field_of(wrap(brackets=[[0, 1, 1, "1/0"]])) == "brackets[0]"
    assert field_of(wrap(brackets=[[0, 1, 1, 1]])) == "brackets[0]"


def test_metric_entry_errors():
    assert field_of(wrap(metric=[[1, 0, "1"]])) == "metric[0]"
    ok = wrap(metric=[[0, 0, "1"], [1, 1, "2"]])
    assert parse(ok).metric == (((0, 0), Q(1)), ((1, 1), Q(2)))


def test_form_block_errors():
    assert field_of(wrap(forms={})) == "forms"
    assert field_of(wrap(forms=[[1]])) == "forms[0]"
    assert field_of(wrap(forms=[{"name": "w", "degree": 2}])) == "forms[0]"
    assert field_of(wrap(forms=[
        {"name": "2w", "degree": 2, "entries": []}])) == "forms[0]"
    assert field_of(wrap(forms=[
        {"name": "w", "degree": 4, "entries": []}])) == "forms[0]"
    assert field_of(wrap(forms=[
        {"name": "w", "degree": 2,
         "entries": [[1, 0, "1"]]}])) == "forms[0].entries[0]"
    assert field_of(wrap(forms=[
        {"name": "w", "degree": 2,
         "entries": [[0, 5, "1"]]}])) == "forms[0].entries[0]"
    assert field_of(wrap(forms=[
        {"name": "w", "degree": 1, "entries": []},
        {"name": "w", "degree": 2, "entries": []}])) == "forms"


def test_parameter_errors():
    assert field_of(wrap(parameters=[])) == "parameters"
    assert field_of(wrap(parameters={"2x": "1"})) == "parameters"
    assert field_of(wrap(parameters={"c": "1/0"})) == "parameters.c"


def test_form_zero_coefficients_are_dropped():
    text = wrap(forms=[{"name": "w", "degree": 2,
                        "entries": [[0, 1, "0"]]}])
    doc = parse(text)
    assert doc.form_block("w").entries == ()
    assert list(doc.to_form("w").components()) == []


def test_document_from_filters_redundant_entries():
    entry = get_example("su2")
    doc = document_from(entry.algebra)
    # only the i < j half of the bracket table is stored
    assert all(i < j for (i, j, _), _ in doc.brackets)
    assert len(doc.brackets) == 3
    rebuilt = doc.to_algebra()
    assert rebuilt == entry.algebra

"""Smoke tests of the Python bindings."""

import json

import pytest

import gbihom


def test_catalog_round_trip():
    assert "pauli_f5" in gbihom.catalog_names()
    a = gbihom.catalog("pauli_f5")
    assert (a.n, a.dim, a.field) == (2, 4, "F_5")
    b, warnings = gbihom.load(json.dumps(gbihom.document(a)))
    assert warnings == []
    assert gbihom.document(b) == gbihom.document(a)


def test_pipeline():
    a = gbihom.catalog("pauli_f5")
    assert gbihom.validate(a)["all_passed"] is True
    assert len(gbihom.support(a)["sigma"]) == 3
    assert len(gbihom.classes(a, verify_witnesses=True)["classes"]) == 1
    assert gbihom.decompose(a)["direct"] is True
    rep = gbihom.simplicity(a, oracle=True)
    assert rep["graded_simple"] == "Yes"
    assert rep["oracle"]["only_trivial"] is True


def test_corner_resolved_by_oracle():
    rep = gbihom.simplicity(gbihom.catalog("corner_with_annihilator_f5"), oracle=True)
    assert rep["graded_simple"] == "CriterionInapplicable"
    assert rep["resolved_by"] == "oracle"


def test_errors():
    with pytest.raises(gbihom.SchemaError):
        gbihom.load("{}")
    with pytest.raises(gbihom.Error):
        gbihom.catalog("no_such_entry")
    with pytest.raises(gbihom.Error):
        gbihom.primitive_root_of_unity(5, 3)


def test_helpers():
    assert gbihom.primitive_root_of_unity(13, 4) == 5
    assert gbihom.sha256_hex("abc").startswith("ba7816bf")

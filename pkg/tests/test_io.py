import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bihomsuper import generators
from bihomsuper.algebra import classify_structure
from bihomsuper.constructions import supercommutator
from bihomsuper.io import (
    FRACTION_RE,
    ParseError,
    ValidationError,
    algebra_document,
    dumps_algebra,
    loads_algebra,
    parse_algebra,
    serialize_algebra,
)

import corpus


def test_fixture_documents_load_and_classify():
    assert classify_structure(corpus.load("zero_bracket")).is_lie
    assert classify_structure(corpus.load("three_dim")).is_lie
    assert classify_structure(corpus.load("assoc_gl11")).is_associative


def test_parity_violation_names_the_entry(fixture_dir):
    with pytest.raises(ValidationError, match=r"product\[0\]: c\[0\]\[0\]\[2\]"):
        parse_algebra(fixture_dir / "bad_parity.json")


def test_malformed_json_reports_line(fixture_dir):
    with pytest.raises(ParseError, match=r"malformed\.json:3:"):
        parse_algebra(fixture_dir / "malformed.json")


def _doc(**overrides):
    doc = algebra_document(corpus.load("three_dim"))
    doc.update(overrides)
    return json.dumps(doc)


@pytest.mark.parametrize("overrides,error,pattern", [
    ({"alpha": [["3", "0", "0"], ["0", "1", "0"], ["0", "0", 0.5]]}, ParseError, r"alpha\[2\]\[2\]"),
    ({"alpha": [["3", "0", "0"], ["0", "1", "0"], ["0", "0", "1/0"]]}, ParseError, r"alpha\[2\]\[2\]"),
    ({"beta": [["3", "0", "1"], ["0", "1", "0"], ["0", "0", "1"]]}, ValidationError, r"beta\[0\]\[2\]"),
    ({"product": [{"i": 0, "j": 5, "k": 0, "value": "1"}]}, ValidationError, r"product\[0\]\.j"),
    ({"product": [{"i": 0, "j": 1, "k": 0, "value": "1"}, {"i": 0, "j": 1, "k": 0, "value": "2"}]},
     ValidationError, "duplicates"),
    ({"parities": [0, 2, 1]}, ValidationError, "parities"),
    ({"dim": 4}, ValidationError, "list of 4 values"),
    ({"kind_hint": "group"}, ValidationError, "kind_hint"),
    ({"color": "red"}, ValidationError, "unknown field"),
])
def test_validation_errors(overrides, error, pattern):
    with pytest.raises(error, match=pattern):
        loads_algebra(_doc(**overrides))


def test_fraction_format():
    for good in ("0", "-3/2", "17", "-1/9"):
        assert FRACTION_RE.fullmatch(good)
    for bad in ("1.5", "3/-2", "+1", "1/0", " 1", "1/01"):
        assert not FRACTION_RE.fullmatch(bad)


def test_round_trip_is_exact_on_the_corpus():
    for A in corpus.corpus():
        text = dumps_algebra(A)
        B = loads_algebra(text)
        assert B == A
        assert dumps_algebra(B) == text
        for entry in json.loads(text)["product"]:
            assert FRACTION_RE.fullmatch(entry["value"])


def test_round_trip_through_a_file(tmp_path):
    A = supercommutator(corpus.associative()[0])
    serialize_algebra(A, tmp_path / "a.json")
    assert parse_algebra(tmp_path / "a.json") == A


def test_hand_edit_changes_exactly_one_entry():
    A = corpus.load("three_dim")
    doc = algebra_document(A)
    doc["product"][0]["value"] = "7/3"
    B = loads_algebra(json.dumps(doc))
    diff = [(i, j, k) for i in range(3) for j in range(3) for k in range(3) if A.product.c[i][j][k] != B.product.c[i][j][k]]
    assert diff == [(0, 1, 0)]


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 4))
def test_round_trip_random_instances(seed, dim):
    A = generators.random_bihom_superalgebra(dim, random.Random(seed))
    assert loads_algebra(dumps_algebra(A)) == A

import random

import pytest
from hypothesis import given, settings, strategies as st

from enrslice.bicat import BOOL_AND, from_monoidal
from enrslice.cli import fixture_text
from enrslice.connect import standard_weights, power_weight
from enrslice.document import DocumentError, document_of, emit, parse
from enrslice.enriched import BFunctor, BCategory, encode_category, encode_functor, enumerate_bcategories
from enrslice.fincat import PAR, TWO, FinCategory, codomain_functor, iso_check, random_category

seeds = st.integers(0, 10**6)


def test_two_fixture():
    doc = parse(fixture_text("two.cat"))
    C = doc.get("category", "Two")
    assert isinstance(C, FinCategory)
    assert iso_check(C, TWO) is not None


def test_cod_fixture_round_trip():
    text = fixture_text("cod-over-two.encat")
    doc = parse(text)
    F = doc.get("functor", "cod")
    assert isinstance(F, BFunctor)
    assert F == encode_functor(codomain_functor(TWO))
    assert emit(doc) == text
    assert emit(parse(emit(doc))) == text


def test_dangling_reference():
    text = "enriched:\n  A:\n    base: nope\n    objects: [0]\n"
    with pytest.raises(DocumentError) as e:
        parse(text)
    assert e.value.kind == "reference" and e.value.line == 2
    assert "nope" in str(e.value)


def test_syntax_error_has_position():
    with pytest.raises(DocumentError) as e:
        parse("category:\n  Two: [unclosed\n")
    assert e.value.kind == "syntax" and e.value.line is not None and e.value.column is not None


def test_failed_validator_names_instance():
    text = fixture_text("two.cat").replace("- [id_1, f, f]", "- [id_1, f, id_0]")
    with pytest.raises(DocumentError) as e:
        parse(text)
    assert e.value.kind == "validation"
    assert "Two" in str(e.value)


def test_unknown_kind_rejected():
    with pytest.raises(DocumentError):
        parse("gadget:\n  x: {}\n")


def test_weights_and_monoidal_round_trip():
    ws = standard_weights()
    for name in ("equalizer", "pullback", "inserter", "comma", "equifier"):
        doc = document_of(("weight", name, ws[name]()))
        text = emit(doc)
        assert emit(parse(text)) == text
    doc = document_of(("weight", "power", power_weight(PAR)))
    assert emit(parse(emit(doc))) == emit(doc)
    B = from_monoidal(BOOL_AND)
    for i, X in enumerate(enumerate_bcategories(B, 2)):
        doc = document_of(("enriched", f"X{i}", X))
        text = emit(doc)
        back = parse(text).get("enriched", f"X{i}")
        assert back == X


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_random_categories_round_trip(seed):
    C = random_category(random.Random(seed), 3, 2)
    text = emit(document_of(("category", "C", C)))
    D = parse(text).get("category", "C")
    assert D.objects == C.objects and D.morphisms == C.morphisms and D.composition == C.composition
    X = encode_category(C)
    text = emit(document_of(("enriched", "X", X)))
    assert parse(text).get("enriched", "X") == X
    assert emit(parse(text)) == text

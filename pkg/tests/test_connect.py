import random

import pytest
from hypothesis import given, settings, strategies as st

from enrslice.connect import (COSPAN, ConnectError, check_collapse_proof, colimit_presentation, comma_weight,
                              cylinder_category, decide_terminal, delta1, delta1_connected, discrete_weight,
                              equalizer_weight, equifier_weight, inserter_weight, is_cat_connected,
                              is_connected_setvalued, locally_chaotic, locally_discrete, power_weight,
                              probe_refutes, pullback_weight, random_set_diagram, random_two_category,
                              standard_weights, strict_two_category, validate_weight, weight)
from enrslice.fincat import (DISC2, colimit_of_sets, IDEMMON, ONE, PAR, TWO, build_category, connected_components, iso_check,
                             set_diagram)
from oracles import graph_components, set_colimit_size

seeds = st.integers(0, 10**6)


def test_presentations():
    P = colimit_presentation(delta1(locally_discrete(COSPAN)))
    assert len(P.classes) == 1
    assert all(m.startswith("id") for _, m in P.generators)
    P = colimit_presentation(pullback_weight())
    assert len(P.classes) == 1
    P = colimit_presentation(power_weight(TWO))
    assert len(P.classes) == 2 and len(P.generators) == 3


def test_decide_terminal():
    for W in (delta1(locally_discrete(COSPAN)), pullback_weight()):
        P = colimit_presentation(W)
        v = decide_terminal(P)
        assert v.kind == "yes" and v.bound == 1
        assert check_collapse_proof(P, v.proof, v.bound)
    v = decide_terminal(colimit_presentation(power_weight(TWO)))
    assert v.kind == "no" and v.witness == {"object_classes": 2}
    v = decide_terminal(colimit_presentation(inserter_weight()))
    assert v.kind == "unknown"


def test_tampered_proof_is_rejected():
    P = colimit_presentation(equifier_weight())
    v = decide_terminal(P)
    g = next(g for g in P.generators if v.proof[g])
    bad = dict(v.proof)
    bad[g] = v.proof[g][:-1] if len(v.proof[g]) > 1 else []
    assert not check_collapse_proof(P, bad, v.bound)


def test_cylinders():
    D1 = delta1(locally_discrete(ONE))
    for X in (TWO, PAR, IDEMMON):
        assert iso_check(cylinder_category(D1, X), X) is not None
    assert iso_check(cylinder_category(inserter_weight(), IDEMMON), IDEMMON) is None
    assert iso_check(cylinder_category(pullback_weight(), TWO), TWO) is not None


def test_standard_verdicts():
    expected = {"equalizer": "yes", "pullback": "yes", "equifier": "yes", "inserter": "no", "comma": "no"}
    ws = standard_weights()
    for name, kind in expected.items():
        v = is_cat_connected(ws[name]())
        assert v.kind == kind, name
        if kind == "no":
            assert v.witness["probe"] in {"Two", "IdemMon", "Par"}
    assert is_cat_connected(power_weight(ONE)).kind == "yes"
    v = is_cat_connected(power_weight(TWO))
    assert v.kind == "no" and v.witness["probe"] == "Two"
    v = is_cat_connected(comma_weight(), probes=[IDEMMON])
    assert v.kind == "no" and v.witness["probe"] == "IdemMon"
    v = is_cat_connected(inserter_weight(), probes=[IDEMMON])
    assert v.kind == "no"


def test_verdicts_are_stable_in_depth():
    ws = standard_weights()
    for W in [ws[n]() for n in ("equalizer", "pullback", "equifier", "inserter", "comma")] + [power_weight(TWO)]:
        kinds = [is_cat_connected(W, depth=k).kind for k in range(1, 5)]
        for a, b in zip(kinds, kinds[1:]):
            assert not (a != "unknown" and b == "unknown")
            assert a == "unknown" or a == b


def test_setvalued_examples():
    shape = build_category([0, 1, 2], {"a": (0, 1), "b": (2, 1)})
    G = set_diagram(shape, {c: ["*"] for c in shape.objects}, {"a": {"*": "*"}, "b": {"*": "*"}})
    assert is_connected_setvalued(G)
    G = set_diagram(DISC2, {0: ["x"], 1: ["y"]}, {})
    assert not is_connected_setvalued(G)
    G = set_diagram(PAR, {0: ["p"], 1: ["x", "y"]}, {"u": {"p": "x"}, "v": {"p": "y"}})
    assert is_connected_setvalued(G)


def test_delta1_examples():
    assert delta1_connected(locally_discrete(ONE))
    assert not delta1_connected(locally_discrete(DISC2))
    assert delta1_connected(locally_discrete(COSPAN))


def test_invalid_weights_rejected():
    D = locally_discrete(TWO)
    with pytest.raises(ConnectError):
        weight(D, {0: TWO, 1: ONE}, {"f": {0: "*"}})
    with pytest.raises(ConnectError):
        weight(D, {0: ONE, 1: TWO}, {"f": {"*": 5}})
    assert validate_weight(pullback_weight()) == []


def test_strictness():
    for D in (locally_discrete(PAR), locally_chaotic(PAR), equifier_weight().domain):
        assert D.strictness_problems() == []


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_random_set_diagrams(seed):
    G = random_set_diagram(random.Random(seed))
    C, E = G.source, G.target
    sets = {c: E.elements[G.ob(c)] for c in C.objects}
    arrows = []
    for m, (a, b) in C.morphisms.items():
        _, _, images = G.morphism_map[m]
        arrows.append((a, b, dict(zip(sets[a], images))))
    assert len(colimit_of_sets(G)) == set_colimit_size(C.objects, sets, arrows)
    v = is_cat_connected(discrete_weight(G))
    if v.decisive:
        assert bool(v) == is_connected_setvalued(G)


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_random_two_categories(seed):
    D = random_two_category(random.Random(seed))
    v = is_cat_connected(delta1(D))
    assert v.decisive
    assert bool(v) == delta1_connected(D)
    U = D.underlying
    edges = [U.morphisms[m] for m in U.morphisms]
    assert delta1_connected(D) == (graph_components(U.objects, edges) == 1)

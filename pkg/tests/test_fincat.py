import random

import pytest
from hypothesis import given, settings, strategies as st

from enrslice.fincat import (DISC2, ONE, PAR, TWO, CategoryError, Cone, FinCategory, Functor, build_category,
                             colimit_of_sets, compose_functors, connected_components, enumerate_categories,
                             factor_through, finset_fragment, free_category, functors, identity_functor,
                             iso_check, natural_transformations, product_category, pullback_in,
                             pullback_of_categories, random_category, random_functor, set_diagram,
                             slice_category, validate_category, validate_functor)
from oracles import brute_force_category_count, category_axioms_hold, graph_components, set_colimit_size

seeds = st.integers(min_value=0, max_value=10**6)


def test_standard_categories_are_valid():
    for C in (ONE, TWO, DISC2, PAR):
        assert validate_category(C) == []


def test_broken_identity_law_is_named():
    comp = dict(TWO.composition)
    comp[("id_1", "f")] = "id_0"
    bad = FinCategory(TWO.objects, TWO.morphisms, TWO.identity, comp, "bad")
    problems = validate_category(bad)
    assert problems and any("identity" in p or "id_1" in p for p in problems)


def test_slice_category_examples():
    S = slice_category(ONE, "*")
    assert len(S.objects) == 1 and len(S.morphisms) == 1
    S = slice_category(TWO, 1)
    assert set(S.objects) == {"id_1", "f"}
    assert sum(1 for m in S.morphisms if not S.is_identity(m)) == 1
    S = slice_category(DISC2, 0)
    assert len(S.objects) == 1 and len(S.morphisms) == 1
    with pytest.raises(CategoryError):
        slice_category(TWO, 7)


def test_pullback_examples():
    cone = pullback_in(ONE, "id_*", "id_*")
    assert cone.apex == "*" and cone.legs == ("id_*", "id_*")
    S = finset_fragment({"A": ["a"], "B": ["b"], "C": ["c"], "AB": ["ab"]},
                        {"f": ("A", "C", {"a": "c"}), "g": ("B", "C", {"b": "c"}),
                         "p": ("AB", "A", {"ab": "a"}), "q": ("AB", "B", {"ab": "b"})})
    f = ("A", "C", ("c",))
    g = ("B", "C", ("c",))
    cone = pullback_in(S, f, g)
    assert cone is not None and len(S.elements[cone.apex]) == 1
    with pytest.raises(CategoryError):
        pullback_in(DISC2, "id_0", "id_1")


def test_pullback_factorizations_are_unique():
    # every competing cone factors through the returned one exactly once
    for C in enumerate_categories(2, 2):
        for f in C.morphisms:
            for g in C.morphisms:
                if C.tgt(f) != C.tgt(g):
                    continue
                cone = pullback_in(C, f, g)
                if cone is None:
                    continue
                for q in C.objects:
                    for q1 in C.hom(q, C.src(f)):
                        for q2 in C.hom(q, C.src(g)):
                            if C.compose(f, q1) == C.compose(g, q2):
                                assert len(factor_through(C, cone, (q1, q2))) == 1


def test_products():
    assert iso_check(product_category(ONE, TWO), TWO) is not None
    P = product_category(TWO, TWO)
    assert len(P.objects) == 4 and len(P.morphisms) == 9
    P = product_category(DISC2, DISC2)
    assert len(P.objects) == 4 and len(P.morphisms) == 4


def test_pullback_of_categories():
    I = identity_functor(TWO)
    assert iso_check(pullback_of_categories(I, I), TWO) is not None
    F = Functor(DISC2, TWO, {0: 0, 1: 1}, {"id_0": "id_0", "id_1": "id_1"})
    G = Functor(ONE, TWO, {"*": 1}, {"id_*": "id_1"})
    P = pullback_of_categories(F, G)
    assert P.objects == ((1, "*"),)
    to_one = lambda C: Functor(C, ONE, {a: "*" for a in C.objects}, {m: "id_*" for m in C.morphisms})
    P = pullback_of_categories(to_one(TWO), to_one(DISC2))
    assert iso_check(P, product_category(TWO, DISC2)) is not None


def test_iso_check():
    pair = iso_check(ONE, ONE)
    assert pair is not None
    assert iso_check(TWO, DISC2) is None
    F, G = iso_check(slice_category(TWO, 1), TWO)
    assert compose_functors(G, F) == identity_functor(F.source)


def test_components():
    assert len(connected_components(ONE)) == 1
    assert len(connected_components(DISC2)) == 2
    assert len(connected_components(TWO)) == 1


def test_colimits_of_sets():
    shape = TWO
    G = set_diagram(shape, {0: ["a"], 1: ["a"]}, {"f": {"a": "a"}})
    assert len(colimit_of_sets(G)) == 1
    G = set_diagram(DISC2, {0: ["a"], 1: ["b"]}, {})
    assert len(colimit_of_sets(G)) == 2
    G = set_diagram(PAR, {0: ["a", "b"], 1: ["c", "d"]}, {"u": {"a": "c", "b": "c"}, "v": {"a": "d", "b": "c"}})
    assert len(colimit_of_sets(G)) == 1


def test_free_category_paths():
    C = free_category([0, 1, 2], {"a": (0, 1), "b": (1, 2)})
    assert validate_category(C) == []
    assert C.compose(("b",), ("a",)) == ("a", "b")
    with pytest.raises(CategoryError):
        free_category([0, 1], {"a": (0, 1), "b": (1, 0)})


def test_enumeration_matches_brute_force():
    assert sum(1 for _ in enumerate_categories(1, 2)) == brute_force_category_count(1, 2) == 3
    assert sum(1 for _ in enumerate_categories(2, 2, min_objects=2)) == brute_force_category_count(2, 2) == 45


def test_enumeration_without_iso_reduction_is_valid():
    cats = list(enumerate_categories(2, 2, up_to_iso=False))
    assert len(cats) == 108
    for C in cats:
        assert validate_category(C) == []


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_random_categories_satisfy_the_axioms(seed):
    C = random_category(random.Random(seed), 3, 2)
    assert validate_category(C) == []
    assert category_axioms_hold(C.objects, dict(C.morphisms), dict(C.identity), dict(C.composition))


@settings(max_examples=40, deadline=None)
@given(seeds, seeds)
def test_components_of_products_multiply(s1, s2):
    C = random_category(random.Random(s1), 3, 1)
    D = random_category(random.Random(s2), 3, 1)
    n = len(connected_components(product_category(C, D)))
    assert n == len(connected_components(C)) * len(connected_components(D))
    edges = [C.morphisms[m] for m in C.morphisms]
    assert len(connected_components(C)) == graph_components(C.objects, edges)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_random_functors_are_functors(seed):
    rng = random.Random(seed)
    C, D = random_category(rng, 3, 2), random_category(rng, 3, 2)
    F = random_functor(rng, C, D)
    if F is not None:
        assert validate_functor(F) == []
        for a in natural_transformations(F, F):
            assert all(D.is_identity(a.components[x]) or True for x in C.objects)


@settings(max_examples=50, deadline=None)
@given(seeds)
def test_set_colimits_match_graph_search(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 4)
    edges = {}
    for k in range(rng.randint(0, 4)):
        if n > 1:
            a, b = sorted(rng.sample(range(n), 2))
            edges[f"e{k}"] = (a, b)
    shape = free_category(range(n), edges)
    sets = {c: tuple(range(rng.randint(1, 3))) for c in shape.objects}
    maps = {}
    for m in sorted((m for m in shape.morphisms if not shape.is_identity(m)), key=len):
        a, b = shape.morphisms[m]
        if len(m) == 1:
            maps[m] = {x: rng.choice(sets[b]) for x in sets[a]}
        else:
            maps[m] = {x: maps[m[1:]][maps[m[:1]][x]] for x in sets[a]}
    G = set_diagram(shape, sets, maps)
    arrows = [(shape.morphisms[m][0], shape.morphisms[m][1], maps[m]) for m in maps]
    assert len(colimit_of_sets(G)) == set_colimit_size(shape.objects, sets, arrows)


def test_constant_singleton_diagram_on_connected_shape():
    shape = free_category([0, 1, 2], {"a": (0, 1), "b": (2, 1)})
    G = set_diagram(shape, {c: ["*"] for c in shape.objects}, {("a",): {"*": "*"}, ("b",): {"*": "*"}})
    assert len(colimit_of_sets(G)) == 1


def test_functors_between_two_and_itself():
    assert sum(1 for _ in functors(TWO, TWO)) == 3

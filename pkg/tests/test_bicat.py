import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from enrslice.bicat import (BOOL_AND, BicategoryError, ExplicitBicategory, Fn, MonoidalError, SigmaFinSet,
                            chaotic, coherence, em_bicategory, em_category, free_quantaloid, from_monoidal,
                            identity_comonad, is_chaotic, lax_slice, monoidal_from_commutative_monoid,
                            monoidal_poset, posetal_comonad, product_bicategory, right_lifting,
                            terminal_bicategory, validate_bicat_comonad, validate_bicategory,
                            validate_comonad, Comonad)
from enrslice.fincat import DISC2, ONE, TWO, PAR, Functor, identity_functor, iso_check, poset_category
from enrslice.harness import chain_with_interior

BOOL = from_monoidal(BOOL_AND)


def z2():
    V = monoidal_from_commutative_monoid(["1", "s"], lambda a, b: "1" if a == b else "s", "1", name="Z2")
    return from_monoidal(V)


def with_assoc(B, value):
    return ExplicitBicategory(B.objects, B.homs, B.unit, B.comp1_table, B.comp2_table,
                              {k: value for k in B.assoc_table}, B.lunit_table, B.runit_table)


def test_valid_bicategories():
    for B in (chaotic(["x", "y"]), BOOL, terminal_bicategory(), z2(), free_quantaloid(TWO), free_quantaloid(PAR)):
        assert validate_bicategory(B) == []


def test_wrong_associator_names_pentagon():
    problems = validate_bicategory(with_assoc(z2(), "s"))
    assert any(p.startswith("pentagon fails") for p in problems)


def test_non_invertible_associator_reported():
    V = monoidal_from_commutative_monoid(["1", "e"], lambda a, b: "1" if a == b == "1" else "e", "1")
    problems = validate_bicategory(with_assoc(from_monoidal(V), "e"))
    assert problems == ["associator at ('I', 'I', 'I') not invertible"]


def test_from_monoidal():
    assert BOOL.objects == ("*",)
    assert len(BOOL.hom("*", "*").objects) == 2
    one = from_monoidal(monoidal_poset(["u"], lambda a, b: True, lambda a, b: "u", "u"))
    assert len(one.hom("*", "*").objects) == 1 and len(one.hom("*", "*").morphisms) == 1
    with pytest.raises(MonoidalError):
        monoidal_poset([0, 1, 2, 3], lambda a, b: a <= b, lambda a, b: a + b, 0)


def test_chaotic():
    assert chaotic([]).objects == ()
    assert is_chaotic(chaotic(["x"]))
    B = chaotic(["x", "y"])
    assert len(B.homs) == 4
    assert all(len(H.objects) == 1 and len(H.morphisms) == 1 for H in B.homs.values())


def test_sigma_finset():
    S = SigmaFinSet()
    assert len(S.comp1(("a", "b"), ("x", "y", "z"))) == 6
    one = Fn.from_map(("*",), ("*",), {"*": "*"})
    p1, p2 = S.pullback(one, one)
    assert len(p1.dom) == 1
    s, t, u = ("a", "b"), ("x",), ("p", "q", "r")
    a = S.assoc(s, t, u)
    assert S.vcomp(S.assoc_inv(s, t, u), a) == S.id2(S.src2(a))
    assert S.vcomp(a, S.assoc_inv(s, t, u)) == S.id2(S.tgt2(a))


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=3, max_size=4))
def test_sigma_finset_coherence_on_traced_cells(sizes):
    S = SigmaFinSet()
    cells = [tuple(f"e{i}{j}" for j in range(n)) for i, n in enumerate(sizes)]
    assert validate_bicategory(S, cells + [S.id1("*")]) == []


def test_products():
    P = product_bicategory(BOOL, BOOL)
    assert len(P.objects) == 1
    assert len(list(P.onecells(*P.objects * 2))) == 4
    assert validate_bicategory(P) == []
    T = product_bicategory(terminal_bicategory(), BOOL)
    assert len(list(T.onecells(*T.objects * 2))) == 2
    C = product_bicategory(chaotic(["x"]), chaotic(["y"]))
    assert is_chaotic(C)


def test_free_quantaloid():
    Q = free_quantaloid(ONE)
    assert len(Q.hom("*", "*").objects) == 2
    assert [len(c[3]) for c in Q.hom("*", "*").objects] == [0, 1]
    Q = free_quantaloid(DISC2)
    assert len(Q.hom(0, 1).objects) == 1
    Q = free_quantaloid(TWO)
    f, id0 = ("P", 0, 1, ("f",)), ("P", 0, 0, ("id_0",))
    assert Q.comp1(f, id0) == f


def test_lax_slice():
    T = lax_slice(terminal_bicategory(), "*")
    assert len(T.objects) == 1 and validate_bicategory(T) == []
    L = lax_slice(BOOL, "*")
    assert [o[1] for o in L.objects] == ["bot", "top"]
    assert validate_bicategory(L) == []
    # a 1-cell bot → top is u with top∧u ≤ bot, forcing u = bot
    top, bot = ("*", "top"), ("*", "bot")
    assert [h[1] for h in L.onecells(bot, top)] == ["bot"]
    assert [h[1] for h in L.onecells(top, bot)] == ["bot", "top"]
    with pytest.raises(BicategoryError):
        lax_slice(BOOL, "nope")


def test_right_lifting_along_identity():
    for B in (BOOL, free_quantaloid(TWO)):
        for b in B.objects:
            for x in B.objects:
                for f in B.onecells(x, b):
                    l, eps = right_lifting(B, f, B.id1(b))
                    assert l == f


def test_right_lifting_in_quantaloid_is_maximal():
    Q = free_quantaloid(TWO)
    f = ("P", 0, 1, ("f",))
    l, _ = right_lifting(Q, f, f)
    assert l == ("P", 0, 0, ("id_0",))
    # brute force: the lifting is the largest subset h with f.h ⊆ f
    fits = [h for h in Q.onecells(0, 0) if set(Q.comp1(f, h)[3]) <= set(f[3])]
    assert all(set(h[3]) <= set(l[3]) for h in fits)


def test_right_lifting_in_chaotic():
    B = chaotic(["x", "y"])
    assert right_lifting(B, ("!", "x", "y"), ("!", "y", "y"))[0] == ("!", "x", "y")
    with pytest.raises(BicategoryError):
        right_lifting(B, ("!", "x", "y"), ("!", "x", "x"))


def test_em_category():
    for C in (TWO, DISC2, PAR):
        K = Comonad(identity_functor(C), {a: C.id(a) for a in C.objects}, {a: C.id(a) for a in C.objects})
        assert iso_check(em_category(C, K), C) is not None
    # constant at the terminal object of the chain 0 ≤ 1 ≤ 2 is not a comonad,
    # but "meet with 1" is one, and its coalgebras are the elements below 1
    C = poset_category([0, 1, 2], lambda a, b: a <= b)
    G = Functor(C, C, {a: min(a, 1) for a in C.objects}, {(a, b): (min(a, 1), min(b, 1)) for (a, b) in C.morphisms})
    K = Comonad(G, {a: (min(a, 1), a) for a in C.objects}, {a: (min(a, 1), min(a, 1)) for a in C.objects})
    assert validate_comonad(K) == []
    assert [c for c, _ in em_category(C, K).objects] == [0, 1]


def test_em_bicategory_identity_and_chain():
    for B in (BOOL, chaotic(["x", "y"])):
        E = em_bicategory(B, identity_comonad(B))
        assert validate_bicategory(E) == []
        for a, b in itertools.product(B.objects, repeat=2):
            assert iso_check(E.hom(a, b), B.hom(a, b)) is not None
    B, K = chain_with_interior()
    assert validate_bicat_comonad(K) == []
    E = em_bicategory(B, K)
    assert validate_bicategory(E) == []
    assert [c for c, _ in E.hom("*", "*").objects] == [0, 2]
    assert E.hom("*", "*").objects == em_category(B.hom("*", "*"), K.local("*", "*")).objects


def test_posetal_comonad_needs_a_coreflection():
    B, _ = chain_with_interior()
    with pytest.raises(BicategoryError):
        posetal_comonad(B, {0: 0, 1: 1, 2: 1})


def test_coherence_between_bracketings():
    S = SigmaFinSet()
    from enrslice.bicat import Comp, Leaf
    f, g, h = ("a",), ("b", "c"), ("d",)
    left = Comp(Comp(Leaf(h), Leaf(g)), Leaf(f))
    right = Comp(Leaf(h), Comp(Leaf(g), Leaf(f)))
    assert coherence(S, left, right) == S.assoc(h, g, f)

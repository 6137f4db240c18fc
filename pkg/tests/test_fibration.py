import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from enrslice.bicat import SigmaFinSet
from enrslice.enriched import encode_category, encode_functor, identity_bfunctor, underlying_morphisms
from enrslice.fibration import (all_powers, cartesian_lift, cross_check, has_singleton_powers, image,
                                is_cartesian, is_fibration, is_fibration_morphism, morphisms_of,
                                power_by_singleton, singleton_onecells)
from enrslice.fincat import (DISC2, Functor, PAR, TWO, build_category, codomain_functor, compose_functors,
                             enumerate_categories, functors, identity_functor, random_category,
                             random_functor)
from enrslice.harness import arrow_two, disc2_into_two
from enrslice.slice import SliceBicategory, enumerate_over_functors, to_sliced
from oracles import classical_cartesian, classical_fibration

S = SigmaFinSet()
TWO_E = encode_category(TWO)
seeds = st.integers(0, 10**6)


def over_two(F):
    return encode_functor(F, target=TWO_E)


def morphism(F, name):
    """The underlying morphism of the encoded source named after an ordinary morphism."""
    C = F.source
    return next(h for h in morphisms_of(C) if h[1].images == (name,))


def collapsing_fixture():
    """A fibration G over Two and a section H sending f to a non-cartesian arrow."""
    Z = build_category(["a", "b"], {"e": ("a", "a"), "p": ("a", "b"), "q": ("a", "b")},
                       {("e", "e"): "e", ("p", "e"): "p", ("q", "e"): "p"}, name="Z")
    G = Functor(Z, TWO, {"a": 0, "b": 1}, {"id_a": "id_0", "id_b": "id_1", "e": "id_0", "p": "f", "q": "f"})
    H = Functor(TWO, Z, {0: "a", 1: "b"}, {"id_0": "id_a", "id_1": "id_b", "f": "p"})
    return Z, G, H


def test_identities_are_cartesian():
    for C in (TWO, PAR):
        F = encode_functor(identity_functor(C))
        for x in F.source.objects:
            assert is_cartesian(F, (x, F.source.unit[x], x))[0]


def test_cod_square_over_f_is_cartesian():
    F = over_two(arrow_two())
    over_f = [h for h in morphisms_of(F.source) if image(F, h)[1].images == ("f",)]
    assert over_f and all(is_cartesian(F, h)[0] for h in over_f)
    ok, cert = is_cartesian(F, over_f[0])
    assert len(cert.squares) == len(F.source.objects)


def test_disc2_only_identities():
    F = over_two(disc2_into_two())
    hs = morphisms_of(F.source)
    assert len(hs) == 2 and all(is_cartesian(F, h)[0] for h in hs)


def test_lifts():
    F = over_two(arrow_two())
    for y in F.source.objects:
        fy = F.ob(y)
        assert cartesian_lift(F, y, (fy, TWO_E.unit[fy], fy)) == (y, F.source.unit[y], y)
    f = next(c for c in underlying_morphisms(TWO_E, 0, 1))
    top = next(y for y in F.source.objects if y[1] == "id_1")
    assert cartesian_lift(F, top, (0, f, 1)) is not None
    D = over_two(disc2_into_two())
    assert cartesian_lift(D, 1, (0, f, 1)) is None


def test_fibration_verdicts():
    assert is_fibration(identity_bfunctor(TWO_E))
    assert is_fibration(over_two(arrow_two()))
    assert not is_fibration(over_two(disc2_into_two()))


def test_fibration_morphisms():
    cod = over_two(arrow_two())
    assert is_fibration_morphism(identity_bfunctor(cod.source), cod, cod)
    Z, G, H = collapsing_fixture()
    assert classical_fibration(G)
    assert classical_cartesian(TWO, identity_functor(TWO), "f")
    assert not classical_cartesian(Z, G, "p")
    Ge = over_two(G)
    He = encode_functor(H, TWO_E, Ge.source)
    I = identity_bfunctor(TWO_E)
    assert is_fibration(Ge)
    assert not is_fibration_morphism(He, I, Ge)
    assert not is_cartesian(Ge, image(He, morphism(I, "f")))[0]
    with pytest.raises(ValueError):
        is_fibration_morphism(He, Ge, Ge)


def test_fibration_morphisms_match_the_classical_definition():
    E = arrow_two()
    cod = over_two(E)
    for H in enumerate_over_functors(cod, cod):
        def ordinary(phi):
            a, b = E.source.morphisms[phi]
            cell = H.functor.hom_cells[(a, b)]
            return cell.images[cell.dom.index(phi)]
        classical = all(classical_cartesian(E.source, E, ordinary(phi))
                        for phi in E.source.morphisms if classical_cartesian(E.source, E, phi))
        assert is_fibration_morphism(H.functor, cod, cod) == classical


def test_singleton_onecells():
    from enrslice.bicat import terminal_bicategory
    from enrslice.enriched import enumerate_bcategories
    T = terminal_bicategory()
    X = next(enumerate_bcategories(T, 2, min_objects=2))
    W = SliceBicategory(T, X)
    assert all(len(singleton_onecells(W, x, y)) == 1 for x in X.objects for y in X.objects)
    W = SliceBicategory(S, TWO_E)
    ws = singleton_onecells(W, 0, 1)
    assert len(ws) == 1 and ws[0].leg.images == ("f",)
    assert singleton_onecells(SliceBicategory(S, encode_category(DISC2)), 0, 1) == []


def test_powers():
    W = SliceBicategory(S, TWO_E)
    Z = to_sliced(over_two(arrow_two()), W)
    for y in Z.objects:
        x = Z.extent[y]
        wit = power_by_singleton(Z, y, W.id1(x))
        assert wit is not None
    top = next(y for y in Z.objects if y[1] == "id_1")
    w = singleton_onecells(W, 0, 1)[0]
    wit = power_by_singleton(Z, top, w)
    assert wit is not None
    lift = cartesian_lift(over_two(arrow_two()), top, (0, w.leg, 1))
    assert wit.power == lift[0]
    D = to_sliced(over_two(disc2_into_two()), W)
    assert power_by_singleton(D, 1, w) is None
    with pytest.raises(ValueError):
        power_by_singleton(Z, top, W.fibred_onecells(0, 1, 2)[-1])


def test_has_singleton_powers():
    W = SliceBicategory(S, TWO_E)
    assert has_singleton_powers(to_sliced(identity_bfunctor(TWO_E), W))
    assert has_singleton_powers(to_sliced(over_two(arrow_two()), W))
    assert not has_singleton_powers(to_sliced(over_two(disc2_into_two()), W))


def test_power_witnesses_unique_up_to_iso():
    for C in enumerate_categories(2, 2):
        for F in functors(C, TWO):
            Fe = over_two(F)
            W = SliceBicategory(S, TWO_E)
            Z = to_sliced(Fe, W)
            U = Fe.source
            for y in Z.objects:
                for x in TWO_E.objects:
                    for w in singleton_onecells(W, x, Z.extent[y]):
                        ps = {wit.power for wit in all_powers(Z, y, w)}
                        for p, q in itertools.permutations(ps, 2):
                            iso = any(any(_compose(U, q, p, q, b, a) == U.unit[q] for b in underlying_morphisms(U, p, q))
                                      for a in underlying_morphisms(U, q, p))
                            assert iso


def _compose(X, x, y, z, g, f):
    from enrslice.enriched import compose_underlying
    return compose_underlying(X, x, y, z, g, f)


def test_cross_check():
    for F, expected in ((identity_bfunctor(TWO_E), True), (over_two(arrow_two()), True),
                        (over_two(disc2_into_two()), False)):
        rep = cross_check(F)
        assert rep["fibration"] is expected and rep["singleton_powers"] is expected and rep["agree"]
    Z, G, H = collapsing_fixture()
    Ge = over_two(G)
    He = encode_functor(H, TWO_E, Ge.source)
    rep = cross_check(identity_bfunctor(TWO_E), [(He, Ge)])
    assert rep["maps"] == [{"cartesian_preserved": False, "powers_preserved": False, "agree": True}]
    cod = over_two(arrow_two())
    rep = cross_check(cod, [(H.functor, cod) for H in enumerate_over_functors(cod, cod)])
    assert rep["agree"] and len(rep["maps"]) > 0


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_random_functors_agree_with_oracle_and_powers(seed):
    rng = random.Random(seed)
    C, D = random_category(rng, 3, 2), random_category(rng, 3, 2)
    F = random_functor(rng, C, D)
    if F is None:
        return
    Fe = encode_functor(F)
    fib = is_fibration(Fe)
    assert fib == classical_fibration(F)
    assert fib == has_singleton_powers(to_sliced(Fe))
    for phi in C.morphisms:
        a, b = C.morphisms[phi]
        h = (a, next(c for c in underlying_morphisms(Fe.source, a, b) if c.images == (phi,)), b)
        assert is_cartesian(Fe, h)[0] == classical_cartesian(C, F, phi)

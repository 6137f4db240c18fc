"""Acceptance suite: one recorded status line per criterion, printed at the end of the run."""
import itertools
import random
import time

import pytest

from enrslice.bicat import (BOOL_AND, SigmaFinSet, chaotic, em_bicategory, em_category, free_quantaloid,
                            from_monoidal, identity_comonad, posetal_comonad, product_bicategory,
                            validate_bicategory)
from enrslice.connect import (check_collapse_proof, colimit_presentation, delta1, delta1_connected,
                              discrete_weight, is_cat_connected, is_connected_setvalued, power_weight,
                              random_set_diagram, random_two_category, standard_weights)
from enrslice.enriched import (chaotic_category_over, chaotic_functor_over, decode_category, encode_category,
                               encode_functor, enumerate_bcategories, enumerate_bfunctors, enumerate_bnats,
                               fully_faithful_check, is_cartesian_over_objects, validate_bcategory)
from enrslice.fibration import has_singleton_powers, is_fibration
from enrslice.fincat import (ONE, TWO, PAR, comma_category, enumerate_categories, functors, identity_functor,
                             iso_check, random_category, random_functor)
from enrslice.harness import arrow_two, chain_with_interior, disc2_into_two, lemma_translation_ok, \
    named_over, roundtrip_suite
from enrslice.slice import (SliceBicategory, faithful_to_powerset_enriched, from_sliced, oplax_limit,
                            oplax_universal_check, pair_categories, powerset_enriched_to_faithful, to_sliced,
                            unpair, validate_oplax_cone)
from oracles import classical_fibration, set_colimit_size

SEED = 20240901
S = SigmaFinSet()
BOOL = from_monoidal(BOOL_AND)


def is_faithful(F):
    C = F.source
    return all(len({F(m) for m in C.hom(a, b)}) == len(C.hom(a, b)) for a in C.objects for b in C.objects)


def test_criterion_1_slice_round_trips(acceptance):
    start = time.perf_counter()
    reports = [roundtrip_suite(S, encode_category(TWO), max_objects=2, fibre_bound=2),
               roundtrip_suite(BOOL, named_over("top-monoid", BOOL), max_objects=2)]
    elapsed = time.perf_counter() - start
    mismatches = sum(len(r.mismatches) for r in reports)
    ok = mismatches == 0 and all(r.sliced_instances and r.map_instances and r.nat_instances for r in reports)
    ok = ok and elapsed < 60
    detail = "; ".join(f"{r.base}/{r.over}: {r.instances} instances" for r in reports)
    acceptance(1, "PASS" if ok else "FAIL", f"{detail}; {mismatches} mismatches; {elapsed:.1f} s")
    assert mismatches == 0, reports[0].mismatches[:3] + reports[1].mismatches[:3]
    assert ok


def _three_way(F):
    """Fibration verdict, singleton-powers verdict and classical verdict agree."""
    Fe = encode_functor(F)
    fib = is_fibration(Fe)
    return fib, fib == has_singleton_powers(to_sliced(Fe)) and fib == classical_fibration(F)


def test_criterion_2_fibrations_as_powers(acceptance):
    start = time.perf_counter()
    checked = fibrations = disagreements = 0
    # every functor between representatives with at most two objects
    small = list(enumerate_categories(2, 2))
    for C, D in itertools.product(small, repeat=2):
        for F in functors(C, D):
            fib, agree = _three_way(F)
            checked += 1
            fibrations += fib
            disagreements += not agree
    exhaustive_two = checked
    # every functor between seeded random pairs with at most three objects
    rng = random.Random(SEED)
    pairs = 0
    while pairs < 60:
        C, D = random_category(rng, 3, 2), random_category(rng, 3, 2)
        pairs += 1
        for F in functors(C, D):
            fib, agree = _three_way(F)
            checked += 1
            fibrations += fib
            disagreements += not agree
    # random functors with at most four objects
    drawn = 0
    while drawn < 500:
        C, D = random_category(rng, 4, 2), random_category(rng, 4, 2)
        F = random_functor(rng, C, D)
        if F is None:
            continue
        drawn += 1
        fib, agree = _three_way(F)
        checked += 1
        fibrations += fib
        disagreements += not agree
    elapsed = time.perf_counter() - start
    # The literal clause asks for every functor between all categories with
    # at most three objects; that is roughly 4e8 functors and out of reach.
    detail = (f"exhaustive <=3-object clause out of reach (~4e8 functors); bounded substitute: "
              f"{exhaustive_two} functors exhaustive <=2 objects, {pairs} random <=3-object pairs complete, "
              f"{drawn} random <=4 objects; {checked} total, {fibrations} fibrations, "
              f"{disagreements} disagreements; {elapsed:.1f} s")
    acceptance(2, "NOT MET", detail)
    assert disagreements == 0
    assert elapsed < 300


@pytest.mark.xfail(run=False, strict=True,
                   reason="exhaustive check over all categories with <=3 objects needs ~4e8 functors")
def test_criterion_2_literal_exhaustive_bound():
    for C, D in itertools.product(enumerate_categories(3, 2), repeat=2):
        for F in functors(C, D):
            assert _three_way(F)[1]


def test_criterion_3_named_fibrations(acceptance):
    cod, inc = encode_functor(arrow_two()), encode_functor(disc2_into_two())
    got = (is_fibration(cod), has_singleton_powers(to_sliced(cod)),
           is_fibration(inc), has_singleton_powers(to_sliced(inc)))
    ok = got == (True, True, False, False)
    acceptance(3, "PASS" if ok else "FAIL",
               f"cod: fibration={got[0]} powers={got[1]}; Disc2->Two: fibration={got[2]} powers={got[3]}")
    assert ok


def test_criterion_4_connectedness_table(acceptance):
    start = time.perf_counter()
    ws = standard_weights()
    cases = {"equalizer": (ws["equalizer"](), "yes"), "pullback": (ws["pullback"](), "yes"),
             "equifier": (ws["equifier"](), "yes"), "power(One)": (power_weight(ONE), "yes"),
             "power(Two)": (power_weight(TWO), "no"), "inserter": (ws["inserter"](), "no"),
             "comma": (ws["comma"](), "no")}
    ok, parts = True, []
    for name, (W, expected) in cases.items():
        v = is_cat_connected(W)
        good = v.kind == expected
        if v.kind == "yes":
            good = good and v.bound <= 4 and check_collapse_proof(colimit_presentation(W), v.proof, v.bound)
            parts.append(f"{name} yes (depth {v.bound})")
        else:
            good = good and v.witness["probe"] in {"Two", "IdemMon", "Par"}
            parts.append(f"{name} {v.kind} ({v.witness and v.witness.get('probe')})")
        ok = ok and good
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 30
    acceptance(4, "PASS" if ok else "FAIL", ", ".join(parts) + f"; {elapsed:.1f} s")
    assert ok


def test_criterion_5_random_coherence(acceptance):
    rng = random.Random(SEED)
    sets_decisive = sets_bad = 0
    for _ in range(200):
        G = random_set_diagram(rng)
        C, E = G.source, G.target
        sets = {c: E.elements[G.ob(c)] for c in C.objects}
        arrows = [(a, b, dict(zip(sets[a], G.morphism_map[m][2]))) for m, (a, b) in C.morphisms.items()]
        expected = set_colimit_size(C.objects, sets, arrows) == 1
        assert is_connected_setvalued(G) == expected
        v = is_cat_connected(discrete_weight(G))
        if v.decisive:
            sets_decisive += 1
            sets_bad += bool(v) != expected
    two_decisive = two_bad = 0
    for _ in range(50):
        D = random_two_category(rng)
        v = is_cat_connected(delta1(D))
        if v.decisive:
            two_decisive += 1
            two_bad += bool(v) != delta1_connected(D)
    ok = sets_bad == 0 and two_bad == 0
    acceptance(5, "PASS" if ok else "FAIL",
               f"set-valued: {sets_decisive}/200 decisive, {sets_bad} disagreements; "
               f"2-categories: {two_decisive}/50 decisive, {two_bad} disagreements")
    assert ok


def test_criterion_6_chaotic_bases(acceptance):
    cats = funs = nats = 0
    ok = True
    for k in (1, 2, 3):
        X = [f"x{i}" for i in range(k)]
        B = chaotic(X)
        enum = list(enumerate_bcategories(B, 3))
        ok &= len(enum) == sum(k ** n for n in (1, 2, 3))
        for Y in enum:
            cats += 1
            ok &= chaotic_category_over(B, Y.objects, Y.extent) == Y
        small = [Y for Y in enum if len(Y.objects) <= 2]
        for Y, Z in itertools.product(small, repeat=2):
            fs = list(enumerate_bfunctors(Y, Z))
            maps = [dict(zip(Y.objects, im)) for im in itertools.product(Z.objects, repeat=len(Y.objects))
                    if all(Y.extent[y] == Z.extent[z] for y, z in zip(Y.objects, im))]
            ok &= sorted(map(repr, (F.object_map for F in fs))) == sorted(map(repr, maps))
            ok &= all(chaotic_functor_over(Y, Z, F.object_map) == F for F in fs)
            for F, G in itertools.product(fs, repeat=2):
                funs += 1
                ns = list(enumerate_bnats(F, G))
                nats += len(ns)
                ok &= len(ns) == 1 and all(lemma_translation_ok(a) for a in ns)
    acceptance(6, "PASS" if ok else "FAIL",
               f"|X|<=3: {cats} categories, {funs} functor pairs, {nats} transformations; round trips exact")
    assert ok


def test_criterion_7_free_quantaloid(acceptance):
    parts, ok = [], True
    for X in (TWO, PAR):
        PX = free_quantaloid(X)
        enum = list(enumerate_bcategories(PX, 2))
        images = []
        for C in enumerate_categories(2, 2, up_to_iso=False):
            for F in functors(C, X):
                if not is_faithful(F):
                    continue
                Z = faithful_to_powerset_enriched(F, PX)
                images.append(Z)
                G = powerset_enriched_to_faithful(Z, X)
                # F and its canonical form are isomorphic over X
                ok &= any(iso_check(C, G.source) is not None and
                          all(G(K(m)) == F(m) for m in C.morphisms)
                          for K in functors(C, G.source))
        ok &= all(Z in enum for Z in images) and all(Z in images for Z in enum)
        ok &= all(faithful_to_powerset_enriched(powerset_enriched_to_faithful(Z, X), PX) == Z for Z in enum)
        checked = bad = ff = 0
        for A, B in itertools.product(enum, repeat=2):
            for T in enumerate_bfunctors(A, B):
                checked += 1
                f = fully_faithful_check(T)
                ff += f
                bad += is_cartesian_over_objects(T, enum) != f
        ok &= bad == 0 and 0 < ff < checked
        parts.append(f"{X.name}: {len(enum)} categories = faithful images, {checked} functors "
                     f"({ff} fully faithful), {bad} disagreements")
    acceptance(7, "PASS" if ok else "FAIL", "; ".join(parts))
    assert ok


def test_criterion_8_translations_and_pairing(acceptance):
    ok = True
    rep1 = roundtrip_suite(BOOL, named_over("top-monoid", BOOL), max_objects=2)
    rep2 = roundtrip_suite(S, encode_category(TWO), max_objects=1, fibre_bound=2)
    ok &= not rep1.mismatches and not rep2.mismatches
    nats = rep1.nat_instances + rep2.nat_instances
    B = chaotic(["x", "y"])
    for Y, Z in itertools.product(list(enumerate_bcategories(B, 2)), repeat=2):
        for F in enumerate_bfunctors(Y, Z):
            for a in enumerate_bnats(F, F):
                nats += 1
                ok &= lemma_translation_ok(a)
    pairs = 0
    for L, R in ((BOOL, BOOL), (BOOL, chaotic(["x", "y"])), (chaotic(["x"]), BOOL)):
        P = product_bicategory(L, R)
        for A, C in itertools.product(list(enumerate_bcategories(L, 2)), list(enumerate_bcategories(R, 2))):
            if A.objects != C.objects:
                continue
            pairs += 1
            Q = pair_categories(A, C, P)
            ok &= validate_bcategory(Q) == [] and unpair(Q, L, R) == (A, C)
    acceptance(8, "PASS" if ok else "FAIL",
               f"{nats} transformations translated both ways; {pairs} pairings round-tripped")
    assert ok


def test_criterion_9_eilenberg_moore(acceptance):
    chain, K = chain_with_interior()
    cases = [("BoolAnd identity", BOOL, identity_comonad(BOOL)),
             ("BoolAnd u->u", BOOL, posetal_comonad(BOOL, {"bot": "bot", "top": "top"})),
             ("Chain3 interior", chain, K)]
    ok, parts = True, []
    for name, B, G in cases:
        E = em_bicategory(B, G)
        good = validate_bicategory(E) == []
        for a, b in itertools.product(B.objects, repeat=2):
            good &= E.hom(a, b).objects == em_category(B.hom(a, b), G.local(a, b)).objects
        parts.append(f"{name}: {len(E.hom(*B.objects * 2).objects)} coalgebras")
        ok &= good
    acceptance(9, "PASS" if ok else "FAIL", "; ".join(parts))
    assert ok


def test_criterion_10_oplax_limit(acceptance):
    I = identity_functor(TWO)
    cone = oplax_limit(encode_functor(I))
    iso = iso_check(decode_category(cone.apex), comma_category(I, I)) is not None
    tests = [encode_category(C) for C in enumerate_categories(2, 2)]
    out = oplax_universal_check(cone, tests)
    ok = iso and validate_oplax_cone(cone) == [] and out["failures"] == []
    acceptance(10, "PASS" if ok else "FAIL",
               f"apex iso to comma: {iso}; {len(tests)} test categories (<=2 objects, homs <=2), "
               f"{out['checked']} cones, {len(out['failures'])} failures")
    assert ok

"""Named bases and fixtures plus the exhaustive round-trip harness behind the CLI."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .bicat import (BOOL_AND, Bicategory, BicatComonad, ExplicitBicategory, SigmaFinSet, from_monoidal,
                    monoidal_poset, posetal_comonad, terminal_bicategory)
from .enriched import (BCategory, BNatTrans, EnrichmentError, compose_bfunctors, encode_category,
                       enumerate_bcategories, enumerate_bfunctors, finset_carriers, identity_bfunctor,
                       identity_bnat, nat_hom_to_unit, nat_unit_to_hom, validate_bcategory, validate_bnat,
                       validate_bnat_hom, vcompose_bnats)
from .fincat import ONE, TWO, build_category, codomain_functor
from .slice import (OverNat, SliceBicategory, compose_over, correspondence_on_maps, enumerate_over_functors,
                    enumerate_over_nats, from_sliced, identity_over, to_sliced)


def named_base(name: str) -> Bicategory:
    key = name.lower().replace("_", "-")
    if key in ("set", "sigma-finset", "finset"):
        return SigmaFinSet()
    if key in ("booland", "bool-and"):
        return from_monoidal(BOOL_AND)
    if key in ("terminal", "one", "1"):
        return terminal_bicategory()
    raise KeyError(f"unknown base {name!r}")


def named_over(name: str, B: Bicategory) -> BCategory:
    """The enriched category to slice over, by name."""
    key = name.lower().replace("_", "-")
    if isinstance(B, SigmaFinSet):
        cats = {"two": TWO, "one": ONE}
        if key in cats:
            return encode_category(cats[key], B)
    else:
        for Z in enumerate_bcategories(B, 1):
            hom = Z.hom[(0, 0)]
            if key in (f"{hom}-monoid", str(hom)):
                return BCategory(B, Z.objects, Z.extent, Z.hom, Z.unit, Z.comp, key)
    raise KeyError(f"unknown category {name!r} over {B.name}")


def arrow_two():
    """``cod: Arr(Two) → Two`` as an ordinary functor."""
    return codomain_functor(TWO)


def disc2_into_two():
    from .fincat import DISC2, Functor
    return Functor(DISC2, TWO, {0: 0, 1: 1}, {"id_0": "id_0", "id_1": "id_1"})


def chain_with_interior() -> tuple[ExplicitBicategory, BicatComonad]:
    """The chain 0 ≤ 1 ≤ 2 under min, with the comonad that drops 1 to 0 and fixes 0 and 2."""
    V = monoidal_poset((0, 1, 2), lambda a, b: a <= b, min, 2, name="Chain3")
    B = from_monoidal(V)
    return B, posetal_comonad(B, {0: 0, 1: 0, 2: 2})


@dataclass
class RoundTripReport:
    base: str
    over: str
    max_objects: int
    sliced_instances: int = 0
    functor_instances: int = 0
    map_instances: int = 0
    nat_instances: int = 0
    mismatches: list = field(default_factory=list)

    @property
    def instances(self) -> int:
        return self.sliced_instances + self.functor_instances + self.map_instances + self.nat_instances

    def as_dict(self) -> dict:
        return {"base": self.base, "over": self.over, "max_objects": self.max_objects,
                "sliced_instances": self.sliced_instances, "functor_instances": self.functor_instances,
                "map_instances": self.map_instances, "nat_instances": self.nat_instances,
                "instances": self.instances, "mismatches": len(self.mismatches),
                "mismatch_detail": list(self.mismatches[:10])}


def candidate_cells(W: SliceBicategory, fibre_bound: int):
    if W.B.finite:
        return None
    return lambda a, b: W.fibred_onecells(a, b, fibre_bound)


def enumerate_sliced(W: SliceBicategory, max_objects: int, fibre_bound: int = 2):
    return enumerate_bcategories(W, max_objects, onecells=candidate_cells(W, fibre_bound))


def enumerate_over(X: BCategory, max_objects: int, fibre_bound: int = 2):
    """Every B-functor into ``X`` whose domain has at most ``max_objects`` objects."""
    B = X.base
    cells = None
    if not B.finite:
        biggest = max(len(h) for h in X.hom.values())
        cells = finset_carriers(fibre_bound * biggest)
    for Y in enumerate_bcategories(B, max_objects, onecells=cells):
        for F in enumerate_bfunctors(Y, X):
            if _fibres_within(F, fibre_bound):
                yield F


def _fibres_within(F, bound: int) -> bool:
    if not isinstance(F.source.base, SigmaFinSet):
        return True
    for c in F.hom_cells.values():
        if any(c.images.count(v) > bound for v in c.cod):
            return False
    return True


def lemma_translation_ok(a: BNatTrans) -> bool:
    """Unit-form and hom-form descriptions of a transformation determine each other."""
    hom = nat_unit_to_hom(a)
    if validate_bnat_hom(a.source, a.target, hom):
        return False
    return nat_hom_to_unit(a.source, hom) == dict(a.components)


def roundtrip_suite(B: Bicategory, X: BCategory, max_objects: int = 2, fibre_bound: int = 2,
                    map_objects: int | None = None, base_name: str = "", over_name: str = "") -> RoundTripReport:
    """Exhaustive check that slicing and unslicing are mutually inverse at every level.

    Objects: every ``B/X``-category and every functor into ``X`` within the
    bounds. Maps: functors and transformations over ``X`` between instances
    with at most ``map_objects`` objects (default: all of them for finite
    bases, one object otherwise), including identities and composites.
    """
    if map_objects is None:
        map_objects = max_objects if B.finite else 1
    W = SliceBicategory(B, X)
    rep = RoundTripReport(base_name or B.name, over_name or X.name or "X", max_objects)
    bad = rep.mismatches.append
    for Z in enumerate_sliced(W, max_objects, fibre_bound):
        rep.sliced_instances += 1
        if to_sliced(from_sliced(Z), W) != Z:
            bad(f"sliced category {rep.sliced_instances} does not survive the round trip")
    pool = []
    for F in enumerate_over(X, max_objects, fibre_bound):
        rep.functor_instances += 1
        Z = to_sliced(F, W)
        if validate_bcategory(Z):
            bad(f"sliced image of functor {rep.functor_instances} is invalid")
        if from_sliced(Z) != F:
            bad(f"functor {rep.functor_instances} does not survive the round trip")
        if correspondence_on_maps(identity_over(F), W) != identity_bfunctor(Z):
            bad(f"identity over functor {rep.functor_instances} not preserved")
        if len(F.source.objects) <= map_objects:
            pool.append(F)
    over = {}
    for F, G in itertools.product(pool, repeat=2):
        hs = list(enumerate_over_functors(F, G))
        over[(id(F), id(G))] = hs
        for H in hs:
            rep.map_instances += 1
            Hbar = correspondence_on_maps(H, W)
            if correspondence_on_maps(Hbar) != H:
                bad("functor over X does not survive the round trip")
        for H, K in itertools.product(hs, repeat=2):
            nats = list(enumerate_over_nats(H, K))
            for a in nats:
                rep.nat_instances += 1
                abar = correspondence_on_maps(a, W)
                if validate_bnat(abar) or correspondence_on_maps(abar) != a:
                    bad("transformation over X does not survive the round trip")
                if not (lemma_translation_ok(a.nat) and lemma_translation_ok(abar)):
                    bad("unit and hom forms of a transformation disagree")
            if H is K:
                ident = OverNat(H, H, identity_bnat(H.functor))
                if correspondence_on_maps(ident, W) != identity_bnat(correspondence_on_maps(H, W)):
                    bad("identity transformation not preserved")
        # vertical composites among transformations between the same pair
        for H, K, L in itertools.product(hs, repeat=3):
            for a in enumerate_over_nats(H, K):
                for b in enumerate_over_nats(K, L):
                    ba = OverNat(H, L, vcompose_bnats(b.nat, a.nat))
                    lhs = correspondence_on_maps(ba, W)
                    rhs = vcompose_bnats(correspondence_on_maps(b, W), correspondence_on_maps(a, W))
                    if lhs != rhs:
                        bad("vertical composite not preserved")
    for F, G, E in itertools.product(pool, repeat=3):
        for H in over.get((id(F), id(G)), ()):
            for K in over.get((id(G), id(E)), ()):
                lhs = correspondence_on_maps(compose_over(K, H), W)
                rhs = compose_bfunctors(correspondence_on_maps(K, W), correspondence_on_maps(H, W))
                if lhs != rhs:
                    bad("composite of functors over X not preserved")
    return rep


def enumerate_report(B: Bicategory, X: BCategory | None, max_objects: int, fibre_bound: int = 2) -> dict:
    """Counts of enumerated enriched categories, sliced or not."""
    if X is None:
        cells = None if B.finite else finset_carriers(fibre_bound)
        cats = list(enumerate_bcategories(B, max_objects, onecells=cells))
        return {"base": B.name, "categories": len(cats), "items": cats}
    W = SliceBicategory(B, X)
    cats = list(enumerate_sliced(W, max_objects, fibre_bound))
    return {"base": W.name, "categories": len(cats), "items": cats}

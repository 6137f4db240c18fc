"""Slicing a bicategory over an enriched category, and what it classifies.

For a B-category ``X`` the bicategory ``B/X`` has the objects of ``X`` and
hom-categories ``B(|x|,|y|)/X(x,y)``. Categories enriched in ``B/X`` are the
same thing as B-functors into ``X``; this module builds both directions of
that correspondence, on functors and transformations as well, plus oplax
limits of B-functors and the pairing of categories over a product base.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Iterable, Iterator, Mapping

from .bicat import (Bicategory, BicategoryError, ComputableBicategory, ExplicitBicategory, NotEnumerable,
                    SigmaFinSet, product_bicategory)
from .enriched import (BCategory, BFunctor, BNatTrans, EnrichmentError, compose_bfunctors, enumerate_bfunctors,
                       enumerate_bnats, identity_bfunctor, underlying_morphisms, validate_bcategory,
                       validate_bfunctor, validate_bnat)
from .fincat import FinCategory, Functor


class UnsupportedBase(BicategoryError):
    """The base bicategory lacks a local limit the construction needs."""


@dataclass(frozen=True)
class SliceCell:
    """A 1-cell ``src → tgt`` of ``B/X``: a 1-cell ``onecell`` of B with ``leg: onecell ⇒ X(src, tgt)``."""

    src: Any
    tgt: Any
    onecell: Any
    leg: Any


@dataclass(frozen=True)
class SliceArrow:
    """A 2-cell of ``B/X``: a 2-cell ``cell`` of B commuting with the legs."""

    src: SliceCell
    tgt: SliceCell
    cell: Any


class SliceBicategory(ComputableBicategory):
    """``B/X`` for a B-category ``X``."""

    def __init__(self, B: Bicategory, X: BCategory):
        super().__init__()
        if not (X.base is B or X.base == B):
            raise EnrichmentError("the enriched category is not over this base")
        self.B, self.X = B, X
        self.objects = tuple(X.objects)
        self.finite = B.finite
        self.name = f"{B.name}/{X.name or 'X'}"

    def __eq__(self, other):
        return isinstance(other, SliceBicategory) and (self is other or (self.X == other.X and self.B == other.B))

    def __hash__(self):
        return hash(("slice", self.objects))

    def __repr__(self):
        return f"<SliceBicategory {self.name}>"

    def onecell_src(self, f):
        return f.src

    def onecell_tgt(self, f):
        return f.tgt

    def over(self, x, y, onecell, leg) -> SliceCell:
        return SliceCell(x, y, onecell, leg)

    def onecells(self, x, y):
        B, X = self.B, self.X
        if not B.finite:
            raise NotEnumerable("slices of a base with infinite homs cannot be listed")
        return [SliceCell(x, y, S, s) for S in B.onecells(X.extent[x], X.extent[y])
                for s in B.two_cells(S, X.hom[(x, y)])]

    def test_onecells(self, x, y):
        B, X = self.B, self.X
        return [SliceCell(x, y, S, s) for S in B.test_onecells(X.extent[x], X.extent[y])
                for s in B.two_cells(S, X.hom[(x, y)])]

    def fibred_onecells(self, x, y, fibre_bound: int) -> list:
        """Slice 1-cells over finite sets with canonical carriers and fibres of size at most ``fibre_bound``.

        The carrier is ``0..n-1`` and the leg is non-decreasing along the
        order of ``X(x, y)``, so each isomorphism class appears once.
        """
        if not isinstance(self.B, SigmaFinSet):
            raise BicategoryError("fibred enumeration needs a base of finite sets")
        from .bicat import Fn
        H = self.X.hom[(x, y)]
        out = []
        for sizes in itertools.product(range(fibre_bound + 1), repeat=len(H)):
            images = tuple(m for m, k in zip(H, sizes) for _ in range(k))
            S = tuple(range(len(images)))
            out.append(SliceCell(x, y, S, Fn(S, H, images)))
        return out

    def id1(self, x):
        return SliceCell(x, x, self.B.id1(self.X.extent[x]), self.X.unit[x])

    def comp1(self, g, f):
        if f.tgt != g.src:
            raise BicategoryError("slice 1-cells not composable")
        B, X = self.B, self.X
        leg = B.vcomp(X.comp[(f.src, f.tgt, g.tgt)], B.hcomp(g.leg, f.leg))
        out = SliceCell(f.src, g.tgt, B.comp1(g.onecell, f.onecell), leg)
        if len(self.trace) < self.trace_limit:
            self.record(f, g)
        return out

    def src2(self, a):
        return a.src

    def tgt2(self, a):
        return a.tgt

    def two_cells(self, f, g):
        B = self.B
        return [SliceArrow(f, g, c) for c in B.two_cells(f.onecell, g.onecell) if B.vcomp(g.leg, c) == f.leg]

    def arrow(self, f, g, cell) -> SliceArrow:
        if self.B.vcomp(g.leg, cell) != f.leg:
            raise BicategoryError("2-cell does not commute with the legs")
        return SliceArrow(f, g, cell)

    def id2(self, f):
        return SliceArrow(f, f, self.B.id2(f.onecell))

    def vcomp(self, b, a):
        if a.tgt != b.src:
            raise BicategoryError("slice 2-cells not composable")
        return SliceArrow(a.src, b.tgt, self.B.vcomp(b.cell, a.cell))

    def hcomp(self, b, a):
        return SliceArrow(self.comp1(b.src, a.src), self.comp1(b.tgt, a.tgt), self.B.hcomp(b.cell, a.cell))

    def assoc(self, h, g, f):
        return SliceArrow(self.comp1(self.comp1(h, g), f), self.comp1(h, self.comp1(g, f)),
                          self.B.assoc(h.onecell, g.onecell, f.onecell))

    def assoc_inv(self, h, g, f):
        return SliceArrow(self.comp1(h, self.comp1(g, f)), self.comp1(self.comp1(h, g), f),
                          self.B.assoc_inv(h.onecell, g.onecell, f.onecell))

    def lunit(self, f):
        return SliceArrow(self.comp1(self.id1(f.tgt), f), f, self.B.lunit(f.onecell))

    def lunit_inv(self, f):
        return SliceArrow(f, self.comp1(self.id1(f.tgt), f), self.B.lunit_inv(f.onecell))

    def runit(self, f):
        return SliceArrow(self.comp1(f, self.id1(f.src)), f, self.B.runit(f.onecell))

    def runit_inv(self, f):
        return SliceArrow(f, self.comp1(f, self.id1(f.src)), self.B.runit_inv(f.onecell))

    def inverse(self, a):
        c = self.B.inverse(a.cell)
        return None if c is None else SliceArrow(a.tgt, a.src, c)

    # pullbacks in a slice are computed in the base
    def is_pullback(self, p1, p2, f, g):
        return self.B.is_pullback(p1.cell, p2.cell, f.cell, g.cell)

    def pullback(self, f, g):
        legs = self.B.pullback(f.cell, g.cell)
        if legs is None:
            return None
        q1, q2 = legs
        apex_cell = self.B.src2(q1)
        P = SliceCell(f.src.src, f.src.tgt, apex_cell, self.B.vcomp(f.src.leg, q1))
        return SliceArrow(P, f.src, q1), SliceArrow(P, g.src, q2)

    def factor(self, p1, p2, q1, q2):
        return [SliceArrow(q1.src, p1.src, u) for u in self.B.factor(p1.cell, p2.cell, q1.cell, q2.cell)]


def slice_bicategory(B: Bicategory, X: BCategory) -> SliceBicategory:
    return SliceBicategory(B, X)


# -- functors into X as categories over B/X ---------------------------------------------------------

def to_sliced(F: BFunctor, W: SliceBicategory | None = None) -> BCategory:
    """The ``B/X``-category of a B-functor ``F: Y → X``."""
    Y, X = F.source, F.target
    W = W or SliceBicategory(X.base, X)
    hom = {(y, z): SliceCell(F.ob(y), F.ob(z), Y.hom[(y, z)], F[(y, z)]) for y in Y.objects for z in Y.objects}
    unit = {y: SliceArrow(W.id1(F.ob(y)), hom[(y, y)], Y.unit[y]) for y in Y.objects}
    comp = {}
    for y, z, w in itertools.product(Y.objects, repeat=3):
        comp[(y, z, w)] = SliceArrow(W.comp1(hom[(z, w)], hom[(y, z)]), hom[(y, w)], Y.comp[(y, z, w)])
    return BCategory(W, tuple(Y.objects), {y: F.ob(y) for y in Y.objects}, hom, unit, comp, Y.name)


def from_sliced(Z: BCategory) -> BFunctor:
    """The B-functor into ``X`` encoded by a ``B/X``-category."""
    W = Z.base
    if not isinstance(W, SliceBicategory):
        raise EnrichmentError("not enriched in a slice bicategory")
    X = W.X
    obs = tuple(Z.objects)
    extent = {z: X.extent[Z.extent[z]] for z in obs}
    hom = {k: c.onecell for k, c in Z.hom.items()}
    unit = {z: a.cell for z, a in Z.unit.items()}
    comp = {k: a.cell for k, a in Z.comp.items()}
    Y = BCategory(W.B, obs, extent, hom, unit, comp, Z.name)
    return BFunctor(Y, X, dict(Z.extent), {k: c.leg for k, c in Z.hom.items()})


# -- maps: functors and transformations over X --------------------------------------------------------

@dataclass(frozen=True, eq=False)
class OverFunctor:
    """A 1-cell ``(Y, F) → (Z, G)`` of the slice of enriched categories: ``H`` with ``G H = F``."""

    source: BFunctor
    target: BFunctor
    functor: BFunctor

    def __eq__(self, other):
        return (isinstance(other, OverFunctor) and self.functor == other.functor
                and self.source == other.source and self.target == other.target)

    def __hash__(self):
        return hash(self.functor)


@dataclass(frozen=True, eq=False)
class OverNat:
    """A 2-cell ``H ⇒ H'`` over ``X``: ``G alpha`` is the identity on ``F``."""

    source: OverFunctor
    target: OverFunctor
    nat: BNatTrans

    def __eq__(self, other):
        return (isinstance(other, OverNat) and self.nat == other.nat
                and self.source == other.source and self.target == other.target)

    def __hash__(self):
        return hash(self.nat)


def validate_over_functor(H: OverFunctor) -> list[str]:
    problems = validate_bfunctor(H.functor)
    if problems:
        return problems
    if compose_bfunctors(H.target, H.functor) != H.source:
        return ["triangle over the base category does not commute"]
    return []


def validate_over_nat(a: OverNat) -> list[str]:
    problems = validate_bnat(a.nat)
    if problems:
        return problems
    G = a.source.target
    F = a.source.source
    B = G.source.base
    for y in F.source.objects:
        c = B.vcomp(G[(a.nat.source.ob(y), a.nat.target.ob(y))], a.nat.components[y])
        if c != F.target.unit[F.ob(y)]:
            problems.append(f"transformation is not over the identity at {y!r}")
    return problems


def compose_over(K: OverFunctor, H: OverFunctor) -> OverFunctor:
    if H.target != K.source:
        raise EnrichmentError("functors over the base are not composable")
    return OverFunctor(H.source, K.target, compose_bfunctors(K.functor, H.functor))


def identity_over(F: BFunctor) -> OverFunctor:
    return OverFunctor(F, F, identity_bfunctor(F.source))


def sliced_functor(H: OverFunctor, W: SliceBicategory | None = None) -> BFunctor:
    """The ``B/X``-functor of a functor over ``X``."""
    F, G, Hf = H.source, H.target, H.functor
    if Hf.source != F.source or Hf.target != G.source:
        raise EnrichmentError("domain or codomain mismatch")
    W = W or SliceBicategory(F.target.base, F.target)
    Ybar, Zbar = to_sliced(F, W), to_sliced(G, W)
    cells = {k: SliceArrow(Ybar.hom[k], Zbar.hom[(Hf.ob(k[0]), Hf.ob(k[1]))], c) for k, c in Hf.hom_cells.items()}
    return BFunctor(Ybar, Zbar, dict(Hf.object_map), cells)


def unsliced_functor(Hbar: BFunctor) -> OverFunctor:
    F, G = from_sliced(Hbar.source), from_sliced(Hbar.target)
    H = BFunctor(F.source, G.source, dict(Hbar.object_map), {k: a.cell for k, a in Hbar.hom_cells.items()})
    return OverFunctor(F, G, H)


def sliced_nat(a: OverNat, W: SliceBicategory | None = None) -> BNatTrans:
    F = a.source.source
    W = W or SliceBicategory(F.target.base, F.target)
    Hs, Ks = sliced_functor(a.source, W), sliced_functor(a.target, W)
    Zbar = Hs.target
    comps = {y: SliceArrow(W.id1(Zbar.extent[Hs.ob(y)]), Zbar.hom[(Hs.ob(y), Ks.ob(y))], c)
             for y, c in a.nat.components.items()}
    return BNatTrans(Hs, Ks, comps)


def unsliced_nat(abar: BNatTrans) -> OverNat:
    H, K = unsliced_functor(abar.source), unsliced_functor(abar.target)
    return OverNat(H, K, BNatTrans(H.functor, K.functor, {y: c.cell for y, c in abar.components.items()}))


def correspondence_on_maps(phi, W: SliceBicategory | None = None):
    """Translate a functor or transformation across the slice correspondence, in either direction."""
    if isinstance(phi, OverFunctor):
        return sliced_functor(phi, W)
    if isinstance(phi, OverNat):
        return sliced_nat(phi, W)
    if isinstance(phi, BFunctor) and isinstance(phi.source.base, SliceBicategory):
        return unsliced_functor(phi)
    if isinstance(phi, BNatTrans) and isinstance(phi.source.source.base, SliceBicategory):
        return unsliced_nat(phi)
    raise EnrichmentError(f"nothing to translate: {phi!r}")


def enumerate_over_functors(F: BFunctor, G: BFunctor) -> Iterator[OverFunctor]:
    for H in enumerate_bfunctors(F.source, G.source):
        if compose_bfunctors(G, H) == F:
            yield OverFunctor(F, G, H)


def enumerate_over_nats(H: OverFunctor, K: OverFunctor) -> Iterator[OverNat]:
    for a in enumerate_bnats(H.functor, K.functor):
        n = OverNat(H, K, a)
        if not validate_over_nat(n):
            yield n


# -- oplax limits ------------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class OplaxLimitCone:
    """``X/F`` with projections ``U`` (to Y) and ``V`` (to X), ``lam: V ⇒ F U`` and diagonal ``D``.

    ``squares[(l, l')]`` keeps each pullback cospan and its legs.
    """

    apex: BCategory
    U: BFunctor
    V: BFunctor
    lam: BNatTrans
    D: BFunctor
    F: BFunctor
    squares: Mapping = field(default_factory=dict)


def _post(X: BCategory, a, b, c, g):
    """``X(a, g): X(a, b) ⇒ X(a, c)`` for ``g: b → c`` in the underlying category."""
    B = X.base
    h = X.hom[(a, b)]
    return B.vpath(X.comp[(a, b, c)], B.rwhisker(g, h), B.lunit_inv(h))


def _pre(X: BCategory, a, b, c, g):
    """``X(g, c): X(b, c) ⇒ X(a, c)`` for ``g: a → b`` in the underlying category."""
    B = X.base
    h = X.hom[(b, c)]
    return B.vpath(X.comp[(a, b, c)], B.lwhisker(h, g), B.runit_inv(h))


def _factor_one(B, p1, p2, q1, q2, what):
    us = B.factor(p1, p2, q1, q2)
    if len(us) != 1:
        raise BicategoryError(f"{what}: {len(us)} factorizations through the pullback")
    return us[0]


def oplax_limit(F: BFunctor) -> OplaxLimitCone:
    """The oplax limit ``X/F`` of ``F: Y → X``, with homs built from local pullbacks.

    Objects are triples ``(x, g, y)`` with ``g: x → Fy`` in the underlying
    category of ``X``.
    """
    Y, X = F.source, F.target
    B = X.base
    obs = []
    for y in Y.objects:
        for x in X.objects:
            for g in underlying_morphisms(X, x, F.ob(y)):
                obs.append((x, g, y))
    obs = tuple(obs)
    hom, legs, squares = {}, {}, {}
    for l2 in obs:
        x2, g2, y2 = l2
        for l in obs:
            x, g, y = l
            f1 = B.vcomp(_pre(X, x2, F.ob(y2), F.ob(y), g2), F[(y2, y)])
            f2 = _post(X, x2, x, F.ob(y), g)
            pb = B.pullback(f1, f2)
            if pb is None:
                raise UnsupportedBase(f"no local pullback of {f1!r} and {f2!r}")
            hom[(l2, l)] = B.src2(pb[0])
            legs[(l2, l)] = pb
            squares[(l2, l)] = (f1, f2, pb)
    unit, comp = {}, {}
    for l in obs:
        x, g, y = l
        p1, p2 = legs[(l, l)]
        f1, f2, _ = squares[(l, l)]
        unit[l] = _factor_one(B, p1, p2, Y.unit[y], X.unit[x], f"unit at {l!r}")
    for a, b, c in itertools.product(obs, repeat=3):
        p1, p2 = legs[(a, c)]
        pa, pb_ = legs[(a, b)], legs[(b, c)]
        q1 = B.vcomp(Y.comp[(a[2], b[2], c[2])], B.hcomp(pb_[0], pa[0]))
        q2 = B.vcomp(X.comp[(a[0], b[0], c[0])], B.hcomp(pb_[1], pa[1]))
        comp[(a, b, c)] = _factor_one(B, p1, p2, q1, q2, f"composition at {(a, b, c)!r}")
    L = BCategory(B, obs, {l: Y.extent[l[2]] for l in obs}, hom, unit, comp, f"{X.name}/F")
    U = BFunctor(L, Y, {l: l[2] for l in obs}, {k: v[0] for k, v in legs.items()})
    V = BFunctor(L, X, {l: l[0] for l in obs}, {k: v[1] for k, v in legs.items()})
    FU = compose_bfunctors(F, U)
    lam = BNatTrans(V, FU, {l: l[1] for l in obs})
    dz = {z: (F.ob(z), X.unit[F.ob(z)], z) for z in Y.objects}
    dcells = {}
    for z in Y.objects:
        for w in Y.objects:
            p1, p2 = legs[(dz[z], dz[w])]
            dcells[(z, w)] = _factor_one(B, p1, p2, B.id2(Y.hom[(z, w)]), F[(z, w)], f"diagonal at {(z, w)!r}")
    D = BFunctor(Y, L, dz, dcells)
    return OplaxLimitCone(L, U, V, lam, D, F, squares)


def validate_oplax_cone(cone: OplaxLimitCone) -> list[str]:
    problems = []
    problems += [f"apex: {p}" for p in validate_bcategory(cone.apex)]
    if problems:
        return problems
    for nm, G in (("U", cone.U), ("V", cone.V), ("D", cone.D)):
        problems += [f"{nm}: {p}" for p in validate_bfunctor(G)]
    problems += [f"lambda: {p}" for p in validate_bnat(cone.lam)]
    F = cone.F
    B = F.source.base
    for (l2, l), (f1, f2, (p1, p2)) in cone.squares.items():
        if not B.is_pullback(p1, p2, f1, f2):
            problems.append(f"hom at {(l2, l)!r} is not a pullback")
    if compose_bfunctors(cone.U, cone.D) != identity_bfunctor(F.source):
        problems.append("U D is not the identity")
    if compose_bfunctors(cone.V, cone.D) != F:
        problems.append("V D is not F")
    for z in F.source.objects:
        if cone.lam.components[cone.D.ob(z)] != F.target.unit[F.ob(z)]:
            problems.append(f"lambda D is not the identity at {z!r}")
    return problems


def oplax_universal_check(cone: OplaxLimitCone, tests: Iterable[BCategory]) -> dict:
    """Bounded one-dimensional universal property of an oplax limit.

    For every test category ``W``, functors ``P: W → Y``, ``Q: W → X`` and
    transformation ``mu: Q ⇒ F P``, counts the functors ``K: W → L`` with
    ``U K = P``, ``V K = Q`` and ``lam K = mu``. Returns the number of cones
    checked and the ones whose count was not exactly one.
    """
    F, L = cone.F, cone.apex
    Y, X = F.source, F.target
    B = X.base
    checked, failures = 0, []
    for W in tests:
        for P in enumerate_bfunctors(W, Y):
            FP = compose_bfunctors(F, P)
            for Q in enumerate_bfunctors(W, X):
                for mu in enumerate_bnats(Q, FP):
                    checked += 1
                    om = {w: (Q.ob(w), mu.components[w], P.ob(w)) for w in W.objects}
                    if any(om[w] not in L.extent for w in W.objects):
                        failures.append((W, P, Q, mu, 0))
                        continue
                    n = 0
                    for K in enumerate_bfunctors(W, L, om):
                        if compose_bfunctors(cone.U, K) == P and compose_bfunctors(cone.V, K) == Q:
                            n += 1
                    if n != 1:
                        failures.append((W, P, Q, mu, n))
    return {"checked": checked, "failures": failures}


# -- pairing over a product base ------------------------------------------------------------------

def pair_categories(P: BCategory, Q: BCategory, base: Bicategory | None = None) -> BCategory:
    """A category over ``B × C`` from a B-category and a C-category on the same objects."""
    if tuple(P.objects) != tuple(Q.objects):
        raise EnrichmentError("object sets differ")
    base = base or product_bicategory(P.base, Q.base)
    obs = tuple(P.objects)
    return BCategory(base, obs, {x: (P.extent[x], Q.extent[x]) for x in obs},
                     {k: (P.hom[k], Q.hom[k]) for k in P.hom},
                     {x: (P.unit[x], Q.unit[x]) for x in obs},
                     {k: (P.comp[k], Q.comp[k]) for k in P.comp}, P.name or Q.name)


def unpair(R: BCategory, left: Bicategory, right: Bicategory) -> tuple[BCategory, BCategory]:
    obs = tuple(R.objects)
    sides = []
    for i, base in enumerate((left, right)):
        sides.append(BCategory(base, obs, {x: R.extent[x][i] for x in obs}, {k: v[i] for k, v in R.hom.items()},
                               {x: v[i] for x, v in R.unit.items()}, {k: v[i] for k, v in R.comp.items()}, R.name))
    return sides[0], sides[1]


# -- powerset enrichment and faithful functors ----------------------------------------------------------

def faithful_to_powerset_enriched(F: Functor, PX: ExplicitBicategory) -> BCategory:
    """A faithful functor into ``X`` as a category enriched in the free quantaloid on ``X``.

    The hom from ``y`` to ``y'`` is the image of ``F`` on ``Y(y, y')``.
    """
    Y, X = F.source, F.target
    order = X._mor_index
    if any(len({F(m) for m in Y.hom(a, b)}) != len(Y.hom(a, b)) for a in Y.objects for b in Y.objects):
        raise EnrichmentError("functor is not faithful")

    def cell(a, b):
        ms = sorted({F(m) for m in Y.hom(a, b)}, key=order.__getitem__)
        return ("P", F.ob(a), F.ob(b), tuple(ms))

    obs = tuple(Y.objects)
    hom = {(a, b): cell(a, b) for a in obs for b in obs}
    unit = {a: ("⊆", PX.id1(F.ob(a)), hom[(a, a)]) for a in obs}
    comp = {(a, b, c): ("⊆", PX.comp1(hom[(b, c)], hom[(a, b)]), hom[(a, c)])
            for a, b, c in itertools.product(obs, repeat=3)}
    return BCategory(PX, obs, {a: F.ob(a) for a in obs}, hom, unit, comp, Y.name)


def powerset_enriched_to_faithful(Z: BCategory, X: FinCategory) -> Functor:
    """The faithful functor a free-quantaloid category encodes: subcategory-like ``Y`` with its inclusion."""
    obs = tuple(Z.objects)
    morphisms, composition = {}, {}
    for (a, b), h in Z.hom.items():
        for m in h[3]:
            morphisms[(a, m, b)] = (a, b)
    identity = {a: (a, X.id(Z.extent[a]), a) for a in obs}
    for (b, g, c) in morphisms:
        for (a, f, b2) in morphisms:
            if b2 == b:
                composition[((b, g, c), (a, f, b))] = (a, X.compose(g, f), c)
    Y = FinCategory(obs, morphisms, identity, composition, Z.name)
    return Functor(Y, X, dict(Z.extent), {m: m[1] for m in morphisms})

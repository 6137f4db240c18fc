"""Cartesian morphisms, fibrations of enriched categories, and powers by singleton 1-cells."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping, Sequence

from .bicat import Bicategory
from .enriched import BCategory, BFunctor, compose_bfunctors, underlying_morphisms
from .slice import SliceBicategory, SliceCell, UnsupportedBase, _post, to_sliced


@dataclass(frozen=True)
class CartesianCertificate:
    """Per test object ``z``: the cospan, the square's legs, and whether it is a pullback."""

    morphism: tuple
    squares: tuple


@dataclass(frozen=True)
class PowerWitness:
    """``power`` together with ``eta: v ⇒ Z(power, y)``; ``checked`` counts the lifting problems verified."""

    y: Any
    v: Any
    power: Any
    eta: Any
    checked: int


def morphisms_of(X: BCategory) -> list[tuple]:
    """All underlying morphisms of ``X`` as triples ``(source, cell, target)``."""
    return [(a, c, b) for a in X.objects for b in X.objects for c in underlying_morphisms(X, a, b)]


def image(F: BFunctor, h: tuple) -> tuple:
    a, c, b = h
    return (F.ob(a), F.source.base.vcomp(F[(a, b)], c), F.ob(b))


def is_cartesian(F: BFunctor, h: tuple) -> tuple[bool, CartesianCertificate]:
    """Is ``h = (y', cell, y)`` cartesian for ``F``?

    For each ``z`` the square ``Y(z,h)``, ``F_{z,y}``, ``F_{z,y'}``,
    ``X(Fz,Fh)`` must be a pullback in the relevant hom-category.
    """
    Y, X = F.source, F.target
    B = Y.base
    y2, cell, y = h
    _, fcell, _ = image(F, h)
    squares, ok = [], True
    for z in Y.objects:
        top = _post(Y, z, y2, y, cell)
        bottom = _post(X, F.ob(z), F.ob(y2), F.ob(y), fcell)
        right, left = F[(z, y)], F[(z, y2)]
        if B.pullback(right, bottom) is None:
            raise UnsupportedBase(f"no local pullback of {right!r} and {bottom!r}")
        pb = B.is_pullback(top, left, right, bottom)
        squares.append((z, (top, left, right, bottom), pb))
        ok = ok and pb
        if not ok:
            break
    return ok, CartesianCertificate(h, tuple(squares))


def cartesian_lift(F: BFunctor, y, g: tuple):
    """The first cartesian ``h: y' → y`` with ``F h = g``, or ``None``.

    ``g = (x, cell, Fy)`` is an underlying morphism of the target.
    """
    x, gcell, fy = g
    if fy != F.ob(y):
        raise ValueError("g does not end at the image of y")
    Y = F.source
    for y2 in Y.objects:
        if F.ob(y2) != x:
            continue
        for c in underlying_morphisms(Y, y2, y):
            h = (y2, c, y)
            if image(F, h) == g and is_cartesian(F, h)[0]:
                return h
    return None


def is_fibration(F: BFunctor) -> bool:
    X = F.target
    for y in F.source.objects:
        for x in X.objects:
            for c in underlying_morphisms(X, x, F.ob(y)):
                if cartesian_lift(F, y, (x, c, F.ob(y))) is None:
                    return False
    return True


def is_fibration_morphism(H: BFunctor, F: BFunctor, G: BFunctor) -> bool:
    """Does ``H: Y → Z`` over ``X`` (``G H = F``) send ``F``-cartesian morphisms to ``G``-cartesian ones?"""
    if compose_bfunctors(G, H) != F:
        raise ValueError("triangle does not commute")
    for h in morphisms_of(F.source):
        if is_cartesian(F, h)[0] and not is_cartesian(G, image(H, h))[0]:
            return False
    return True


# -- powers --------------------------------------------------------------------------------

def singleton_onecells(W: SliceBicategory, x, x2) -> list:
    """Slice 1-cells ``x → x2`` whose source 1-cell is an identity."""
    B, X = W.B, W.X
    if X.extent[x] != X.extent[x2]:
        return []
    one = B.id1(X.extent[x])
    return [SliceCell(x, x2, one, w) for w in B.two_cells(one, X.hom[(x, x2)])]


def _pasting(Z: BCategory, z, p, y, eta, gamma):
    # M_{z,p,y} ∘ (eta * gamma): v.b ⇒ Z(z, y)
    W = Z.base
    return W.vcomp(Z.comp[(z, p, y)], W.hcomp(eta, gamma))


def check_power(Z: BCategory, y, v, p, eta) -> int | None:
    """Number of lifting problems verified if ``(p, eta)`` is a power of ``y`` by ``v``, else ``None``.

    Test 1-cells ``b`` come from the base's ``test_onecells``.
    """
    W = Z.base
    count = 0
    for z in Z.objects:
        for b in W.test_onecells(Z.extent[z], Z.extent[p]):
            target = Z.hom[(z, y)]
            src = W.comp1(v, b)
            gammas = list(W.two_cells(b, Z.hom[(z, p)]))
            images = [_pasting(Z, z, p, y, eta, g) for g in gammas]
            for alpha in W.two_cells(src, target):
                if images.count(alpha) != 1:
                    return None
                count += 1
    return count


def power(Z: BCategory, y, v) -> PowerWitness | None:
    """Search for the power of ``y`` by the 1-cell ``v: x → |y|``; first witness in object order."""
    W = Z.base
    x = W.onecell_src(v)
    for p in Z.objects:
        if Z.extent[p] != x:
            continue
        for eta in W.two_cells(v, Z.hom[(p, y)]):
            n = check_power(Z, y, v, p, eta)
            if n is not None:
                return PowerWitness(y, v, p, eta, n)
    return None


def power_by_singleton(Z: BCategory, y, w: SliceCell) -> PowerWitness | None:
    if w.onecell != Z.base.B.id1(Z.base.X.extent[w.src]):
        raise ValueError("not a singleton 1-cell")
    return power(Z, y, w)


def all_powers(Z: BCategory, y, v) -> list[PowerWitness]:
    W = Z.base
    out = []
    for p in Z.objects:
        if Z.extent[p] != W.onecell_src(v):
            continue
        for eta in W.two_cells(v, Z.hom[(p, y)]):
            n = check_power(Z, y, v, p, eta)
            if n is not None:
                out.append(PowerWitness(y, v, p, eta, n))
    return out


def has_singleton_powers(Z: BCategory) -> bool:
    W = Z.base
    for y in Z.objects:
        for x in W.objects:
            for w in singleton_onecells(W, x, Z.extent[y]):
                if power(Z, y, w) is None:
                    return False
    return True


def preserves_power(Hbar: BFunctor, wit: PowerWitness) -> bool:
    """Is ``H(power)`` with ``H∘eta`` a power of ``H y`` by the same 1-cell?"""
    W = Hbar.source.base
    eta = W.vcomp(Hbar[(wit.power, wit.y)], wit.eta)
    return check_power(Hbar.target, Hbar.ob(wit.y), wit.v, Hbar.ob(wit.power), eta) is not None


def preserves_singleton_powers(Hbar: BFunctor) -> bool:
    Z = Hbar.source
    W = Z.base
    for y in Z.objects:
        for x in W.objects:
            for w in singleton_onecells(W, x, Z.extent[y]):
                for wit in all_powers(Z, y, w):
                    if not preserves_power(Hbar, wit):
                        return False
    return True


def cross_check(F: BFunctor, maps: Sequence[tuple[BFunctor, BFunctor]] = ()) -> dict:
    """Compare the fibration verdict with the powers verdict of the sliced category.

    ``maps`` holds pairs ``(H, G)`` with ``G H = F``; for each, preservation
    of cartesian morphisms is compared with preservation of singleton powers.
    Only meaningful when both ``F`` and ``G`` are fibrations.
    """
    from .slice import OverFunctor, SliceBicategory, sliced_functor
    X = F.target
    W = SliceBicategory(X.base, X)
    fib = is_fibration(F)
    pw = has_singleton_powers(to_sliced(F, W))
    report = {"fibration": fib, "singleton_powers": pw, "agree": fib == pw, "maps": []}
    for H, G in maps:
        m = is_fibration_morphism(H, F, G)
        p = preserves_singleton_powers(sliced_functor(OverFunctor(F, G, H), W))
        report["maps"].append({"cartesian_preserved": m, "powers_preserved": p, "agree": m == p})
        report["agree"] = report["agree"] and m == p
    return report

"""Categories, functors and natural transformations enriched in a bicategory."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Iterator, Mapping, Sequence

from .bicat import (SINGLETON, Bicategory, BicategoryError, ExplicitBicategory, Fn, LaxFunctor,
                    NotEnumerable, SigmaFinSet, chaotic, is_chaotic)
from .fincat import FinCategory, Functor, NatTransformation
from .search import solve


class EnrichmentError(ValueError):
    pass


def _same_base(a: Bicategory, b: Bicategory) -> bool:
    return a is b or a == b


@dataclass(frozen=True, eq=False)
class BCategory:
    """A category enriched in ``base``.

    ``hom[(x, y)]`` is a 1-cell ``|x| → |y|``; ``unit[x]: 1_|x| ⇒ hom[(x, x)]``;
    ``comp[(x, y, z)]: hom[(y, z)].hom[(x, y)] ⇒ hom[(x, z)]``.
    """

    base: Bicategory
    objects: tuple
    extent: Mapping
    hom: Mapping
    unit: Mapping
    comp: Mapping
    name: str = ""

    def __eq__(self, other):
        if not isinstance(other, BCategory):
            return NotImplemented
        return (self.objects == other.objects and dict(self.extent) == dict(other.extent)
                and dict(self.hom) == dict(other.hom) and dict(self.unit) == dict(other.unit)
                and dict(self.comp) == dict(other.comp) and _same_base(self.base, other.base))

    def __hash__(self):
        return hash(("bcat", self.objects))

    def __repr__(self):
        return f"<BCategory {self.name or ''} over {self.base.name}: {len(self.objects)} objects>"

    def __call__(self, x, y):
        return self.hom[(x, y)]


@dataclass(frozen=True, eq=False)
class BFunctor:
    """``hom_cells[(x, y)]: source(x, y) ⇒ target(fx, fy)``."""

    source: BCategory
    target: BCategory
    object_map: Mapping
    hom_cells: Mapping

    def __eq__(self, other):
        if not isinstance(other, BFunctor):
            return NotImplemented
        return (dict(self.object_map) == dict(other.object_map)
                and dict(self.hom_cells) == dict(other.hom_cells)
                and self.source == other.source and self.target == other.target)

    def __hash__(self):
        return hash(("bfun", tuple(sorted(self.object_map.items(), key=repr))))

    def __repr__(self):
        return f"<BFunctor {self.source.name or '?'} → {self.target.name or '?'}>"

    def ob(self, x):
        return self.object_map[x]

    def __getitem__(self, pair):
        return self.hom_cells[pair]


class BNatTrans:
    """A natural transformation ``source ⇒ target`` between parallel B-functors.

    Stored by its unit components ``components[x]: 1_|x| ⇒ D(Tx, Sx)``; the
    hom form ``hom_components[(x, y)]: C(x, y) ⇒ D(Tx, Sy)`` is derived and
    cached on first use.
    """

    def __init__(self, source: BFunctor, target: BFunctor, components: Mapping):
        self.source = source
        self.target = target
        self.components = dict(components)
        self._hom = None

    def __eq__(self, other):
        if not isinstance(other, BNatTrans):
            return NotImplemented
        return (self.components == other.components and self.source == other.source
                and self.target == other.target)

    def __hash__(self):
        return hash(("bnat", tuple(self.components)))

    def __repr__(self):
        return f"<BNatTrans on {len(self.components)} objects>"

    @property
    def hom_components(self) -> dict:
        if self._hom is None:
            self._hom = nat_unit_to_hom(self)
        return self._hom

    @classmethod
    def from_hom(cls, source: BFunctor, target: BFunctor, hom_components: Mapping) -> "BNatTrans":
        out = cls(source, target, nat_hom_to_unit(source, hom_components))
        out._hom = dict(hom_components)
        return out


# -- validation -----------------------------------------------------------------

def validate_bcategory(X: BCategory) -> list[str]:
    B = X.base
    obs = set(B.objects)
    problems = []
    for x in X.objects:
        if X.extent[x] not in obs:
            raise EnrichmentError(f"extent of {x!r} is not an object of the base")
    for x in X.objects:
        for y in X.objects:
            h = X.hom[(x, y)]
            if B.onecell_src(h) != X.extent[x] or B.onecell_tgt(h) != X.extent[y]:
                problems.append(f"hom({x!r},{y!r}) has wrong endpoints")
    if problems:
        return problems
    for x in X.objects:
        j = X.unit[x]
        if (B.src2(j), B.tgt2(j)) != (B.id1(X.extent[x]), X.hom[(x, x)]):
            problems.append(f"unit at {x!r} ill-typed")
    for x, y, z in itertools.product(X.objects, repeat=3):
        m = X.comp[(x, y, z)]
        if (B.src2(m), B.tgt2(m)) != (B.comp1(X.hom[(y, z)], X.hom[(x, y)]), X.hom[(x, z)]):
            problems.append(f"composition at ({x!r}, {y!r}, {z!r}) ill-typed")
    if problems:
        return problems
    for x, y in itertools.product(X.objects, repeat=2):
        if not _right_unit_ok(X, x, y):
            problems.append(f"right unit law fails at ({x!r}, {y!r})")
        if not _left_unit_ok(X, x, y):
            problems.append(f"left unit law fails at ({x!r}, {y!r})")
    for x, y, z, w in itertools.product(X.objects, repeat=4):
        if not _assoc_ok(X, x, y, z, w):
            problems.append(f"associativity fails at ({x!r}, {y!r}, {z!r}, {w!r})")
    return problems


def _right_unit_ok(X, x, y):
    B = X.base
    return B.vcomp(X.comp[(x, x, y)], B.lwhisker(X.hom[(x, y)], X.unit[x])) == B.runit(X.hom[(x, y)])


def _left_unit_ok(X, x, y):
    B = X.base
    return B.vcomp(X.comp[(x, y, y)], B.rwhisker(X.unit[y], X.hom[(x, y)])) == B.lunit(X.hom[(x, y)])


def _assoc_ok(X, x, y, z, w):
    # (X(z,w).X(y,z)).X(x,y) ⇒ X(x,w) two ways
    B = X.base
    a, b, c = X.hom[(z, w)], X.hom[(y, z)], X.hom[(x, y)]
    lhs = B.vpath(X.comp[(x, z, w)], B.lwhisker(a, X.comp[(x, y, z)]), B.assoc(a, b, c))
    rhs = B.vcomp(X.comp[(x, y, w)], B.rwhisker(X.comp[(y, z, w)], c))
    return lhs == rhs


def validate_bfunctor(F: BFunctor) -> list[str]:
    X, Y = F.source, F.target
    B = X.base
    problems = []
    if not _same_base(B, Y.base):
        return ["source and target have different bases"]
    for x in X.objects:
        if F.ob(x) not in Y.extent:
            return [f"object {x!r} sent outside the target"]
        if X.extent[x] != Y.extent[F.ob(x)]:
            raise EnrichmentError(f"extent mismatch at {x!r}")
    for x, y in itertools.product(X.objects, repeat=2):
        c = F[(x, y)]
        if (B.src2(c), B.tgt2(c)) != (X.hom[(x, y)], Y.hom[(F.ob(x), F.ob(y))]):
            problems.append(f"hom cell at ({x!r}, {y!r}) ill-typed")
    if problems:
        return problems
    for x in X.objects:
        if not _functor_unit_ok(F, x):
            problems.append(f"units not preserved at {x!r}")
    for x, y, z in itertools.product(X.objects, repeat=3):
        if not _functor_comp_ok(F, x, y, z):
            problems.append(f"composition not preserved at ({x!r}, {y!r}, {z!r})")
    return problems


def _functor_unit_ok(F, x):
    B = F.source.base
    return B.vcomp(F[(x, x)], F.source.unit[x]) == F.target.unit[F.ob(x)]


def _functor_comp_ok(F, x, y, z):
    B = F.source.base
    f = F.ob
    lhs = B.vcomp(F[(x, z)], F.source.comp[(x, y, z)])
    rhs = B.vcomp(F.target.comp[(f(x), f(y), f(z))], B.hcomp(F[(y, z)], F[(x, y)]))
    return lhs == rhs


def _nat_left(T: BFunctor, S: BFunctor, alpha: Mapping, x, y):
    # M ∘ (alpha_y * T_{x,y}) ∘ lunit⁻¹
    D, C = T.target, T.source
    B = C.base
    return B.vpath(D.comp[(T.ob(x), T.ob(y), S.ob(y))], B.hcomp(alpha[y], T[(x, y)]),
                   B.lunit_inv(C.hom[(x, y)]))


def _nat_right(T: BFunctor, S: BFunctor, alpha: Mapping, x, y):
    # M ∘ (S_{x,y} * alpha_x) ∘ runit⁻¹
    D, C = T.target, T.source
    B = C.base
    return B.vpath(D.comp[(T.ob(x), S.ob(x), S.ob(y))], B.hcomp(S[(x, y)], alpha[x]),
                   B.runit_inv(C.hom[(x, y)]))


def validate_bnat(a: BNatTrans) -> list[str]:
    T, S = a.source, a.target
    C, D = T.source, T.target
    B = C.base
    if S.source != C or S.target != D:
        return ["functors are not parallel"]
    problems = []
    for x in C.objects:
        c = a.components[x]
        if (B.src2(c), B.tgt2(c)) != (B.id1(C.extent[x]), D.hom[(T.ob(x), S.ob(x))]):
            problems.append(f"component at {x!r} ill-typed")
    if problems:
        return problems
    for x, y in itertools.product(C.objects, repeat=2):
        if _nat_left(T, S, a.components, x, y) != _nat_right(T, S, a.components, x, y):
            problems.append(f"naturality fails at ({x!r}, {y!r})")
    if a._hom is not None and not problems:
        if a._hom != nat_unit_to_hom(a):
            problems.append("hom components disagree with unit components")
    return problems


def validate_bnat_hom(T: BFunctor, S: BFunctor, hom_components: Mapping) -> list[str]:
    """The two compatibility squares for a hom-form transformation."""
    C, D = T.source, T.target
    B = C.base
    problems = []
    for x, y in itertools.product(C.objects, repeat=2):
        c = hom_components[(x, y)]
        if (B.src2(c), B.tgt2(c)) != (C.hom[(x, y)], D.hom[(T.ob(x), S.ob(y))]):
            problems.append(f"hom component at ({x!r}, {y!r}) ill-typed")
    if problems:
        return problems
    for x, y, z in itertools.product(C.objects, repeat=3):
        top = B.vcomp(hom_components[(x, z)], C.comp[(x, y, z)])
        via_s = B.vcomp(D.comp[(T.ob(x), S.ob(y), S.ob(z))], B.hcomp(S[(y, z)], hom_components[(x, y)]))
        via_t = B.vcomp(D.comp[(T.ob(x), T.ob(y), S.ob(z))], B.hcomp(hom_components[(y, z)], T[(x, y)]))
        if top != via_s:
            problems.append(f"square through the target functor fails at ({x!r}, {y!r}, {z!r})")
        if top != via_t:
            problems.append(f"square through the source functor fails at ({x!r}, {y!r}, {z!r})")
    return problems


def nat_unit_to_hom(a: BNatTrans) -> dict:
    T, S = a.source, a.target
    return {(x, y): _nat_left(T, S, a.components, x, y)
            for x in T.source.objects for y in T.source.objects}


def nat_hom_to_unit(source: BFunctor, hom_components: Mapping) -> dict:
    C = source.source
    B = C.base
    return {x: B.vcomp(hom_components[(x, x)], C.unit[x]) for x in C.objects}


# -- identities and composites ---------------------------------------------------------

def identity_bfunctor(X: BCategory) -> BFunctor:
    B = X.base
    return BFunctor(X, X, {x: x for x in X.objects}, {k: B.id2(h) for k, h in X.hom.items()})


def compose_bfunctors(G: BFunctor, F: BFunctor) -> BFunctor:
    """``G∘F``."""
    B = F.source.base
    cells = {(x, y): B.vcomp(G[(F.ob(x), F.ob(y))], F[(x, y)]) for (x, y) in F.hom_cells}
    return BFunctor(F.source, G.target, {x: G.ob(F.ob(x)) for x in F.source.objects}, cells)


def identity_bnat(F: BFunctor) -> BNatTrans:
    return BNatTrans(F, F, {x: F.target.unit[F.ob(x)] for x in F.source.objects})


def vcompose_bnats(b: BNatTrans, a: BNatTrans) -> BNatTrans:
    """``b∘a`` for ``a: T ⇒ S`` and ``b: S ⇒ R``."""
    T, S, R = a.source, a.target, b.target
    D = T.target
    B = D.base
    comps = {}
    for x in T.source.objects:
        one = B.id1(T.source.extent[x])
        comps[x] = B.vpath(D.comp[(T.ob(x), S.ob(x), R.ob(x))], B.hcomp(b.components[x], a.components[x]),
                           B.lunit_inv(one))
    return BNatTrans(T, R, comps)


def whisker_bnat(G: BFunctor, a: BNatTrans) -> BNatTrans:
    """``G a: G T ⇒ G S``."""
    B = G.source.base
    T, S = a.source, a.target
    comps = {x: B.vcomp(G[(T.ob(x), S.ob(x))], a.components[x]) for x in T.source.objects}
    return BNatTrans(compose_bfunctors(G, T), compose_bfunctors(G, S), comps)


# -- lax functor view -------------------------------------------------------------------

def to_lax_functor(X: BCategory) -> LaxFunctor:
    """``X`` as a lax functor from the chaotic bicategory on its objects."""
    C = chaotic(X.objects, name=f"chaotic({X.name})" if X.name else "")
    B = X.base
    ones = {("!", a, b): X.hom[(a, b)] for a in X.objects for b in X.objects}
    twos = {("!!", a, b): B.id2(X.hom[(a, b)]) for a in X.objects for b in X.objects}
    comp2 = {(("!", b, c), ("!", a, b)): X.comp[(a, b, c)] for a, b, c in itertools.product(X.objects, repeat=3)}
    return LaxFunctor(C, B, dict(X.extent), ones, twos, comp2, dict(X.unit))


def from_lax_functor(L: LaxFunctor, name: str = "") -> BCategory:
    if not is_chaotic(L.source):
        raise EnrichmentError("lax functor domain is not chaotic")
    A = L.source
    obs = tuple(A.objects)

    def cell(a, b):
        return next(iter(A.onecells(a, b)))

    hom = {(a, b): L.one(cell(a, b)) for a in obs for b in obs}
    comp = {(a, b, c): L.comp2[(cell(b, c), cell(a, b))] for a, b, c in itertools.product(obs, repeat=3)}
    return BCategory(L.target, obs, dict(L.object_map), hom, dict(L.unit2), comp, name)


# -- underlying ordinary category ----------------------------------------------------------

def underlying_morphisms(X: BCategory, x, y) -> list:
    """Morphisms ``x → y`` of the underlying category, as 2-cells ``1_|x| ⇒ X(x, y)``."""
    if X.extent[x] != X.extent[y]:
        return []
    B = X.base
    return list(B.two_cells(B.id1(X.extent[x]), X.hom[(x, y)]))


def compose_underlying(X: BCategory, x, y, z, g, f):
    """``g∘f`` for ``f: x → y``, ``g: y → z`` in the underlying category."""
    B = X.base
    one = B.id1(X.extent[x])
    return B.vpath(X.comp[(x, y, z)], B.hcomp(g, f), B.lunit_inv(one))


def underlying_category(X: BCategory) -> FinCategory:
    """Morphism ids are ``(x, cell, y)``."""
    morphisms = {}
    for x in X.objects:
        for y in X.objects:
            for c in underlying_morphisms(X, x, y):
                morphisms[(x, c, y)] = (x, y)
    identity = {x: (x, X.unit[x], x) for x in X.objects}
    composition = {}
    for (y, g, z) in morphisms:
        for (x, f, y2) in morphisms:
            if y2 == y:
                composition[((y, g, z), (x, f, y))] = (x, compose_underlying(X, x, y, z, g, f), z)
    return FinCategory(tuple(X.objects), morphisms, identity, composition, f"{X.name}_0" if X.name else "")


def fully_faithful_check(F: BFunctor) -> bool:
    B = F.source.base
    return all(B.inverse(c) is not None for c in F.hom_cells.values())


# -- ordinary categories over finite sets ----------------------------------------------------

def encode_category(C: FinCategory, base: SigmaFinSet | None = None) -> BCategory:
    """An ordinary finite category as a category enriched in finite sets."""
    S = base or SigmaFinSet()
    hom = {(a, b): tuple(C.hom(a, b)) for a in C.objects for b in C.objects}
    unit = {a: Fn(SINGLETON, hom[(a, a)], (C.id(a),)) for a in C.objects}
    comp = {}
    for a, b, c in itertools.product(C.objects, repeat=3):
        dom = tuple((g, f) for g in hom[(b, c)] for f in hom[(a, b)])
        comp[(a, b, c)] = Fn(dom, hom[(a, c)], tuple(C.compose(g, f) for g, f in dom))
    return BCategory(S, tuple(C.objects), {a: "*" for a in C.objects}, hom, unit, comp, C.name)


def encode_functor(F: Functor, source: BCategory | None = None, target: BCategory | None = None) -> BFunctor:
    X = source or encode_category(F.source)
    Y = target or encode_category(F.target, X.base)
    cells = {(a, b): Fn(X.hom[(a, b)], Y.hom[(F.ob(a), F.ob(b))], tuple(F(m) for m in X.hom[(a, b)]))
             for a in X.objects for b in X.objects}
    return BFunctor(X, Y, {a: F.ob(a) for a in X.objects}, cells)


def encode_nat(a: NatTransformation, T: BFunctor, S: BFunctor) -> BNatTrans:
    D = T.target
    return BNatTrans(T, S, {x: Fn(SINGLETON, D.hom[(T.ob(x), S.ob(x))], (a.components[x],))
                            for x in T.source.objects})


def decode_category(X: BCategory) -> FinCategory:
    """Inverse of :func:`encode_category`: elements of the homs become morphisms."""
    if not isinstance(X.base, SigmaFinSet):
        raise EnrichmentError("decoding needs a base of finite sets")
    morphisms, composition = {}, {}
    for (a, b), h in X.hom.items():
        for m in h:
            morphisms[(a, m, b)] = (a, b)
    identity = {a: (a, X.unit[a].images[0], a) for a in X.objects}
    for (a, b, c), M in X.comp.items():
        for (g, f), v in zip(M.dom, M.images):
            composition[((b, g, c), (a, f, b))] = (a, v, c)
    return FinCategory(tuple(X.objects), morphisms, identity, composition, X.name)


def decode_functor(F: BFunctor, source: FinCategory | None = None, target: FinCategory | None = None) -> Functor:
    S = source or decode_category(F.source)
    T = target or decode_category(F.target)
    mm = {}
    for (a, b), c in F.hom_cells.items():
        for m, v in zip(c.dom, c.images):
            mm[(a, m, b)] = (F.ob(a), v, F.ob(b))
    return Functor(S, T, dict(F.object_map), mm)


# -- search -------------------------------------------------------------------------------

def _cells_for(B: Bicategory, onecells):
    if onecells is not None:
        return onecells
    if not B.finite:
        raise NotEnumerable("pass candidate 1-cells for a base with infinite homs")
    return lambda a, b: B.onecells(a, b)


def enumerate_bcategories(B: Bicategory, max_objects: int, extents: Iterable | None = None,
                          onecells: Callable | None = None, min_objects: int = 1) -> Iterator[BCategory]:
    """Every B-category on objects ``0..n-1`` for ``min_objects <= n <= max_objects``.

    Candidates are ordered by extent map, hom 1-cells, units, then
    composition cells. ``onecells(a, b)`` supplies candidate hom 1-cells and is
    required for bases whose homs are infinite. ``extents`` may fix the extent
    maps (sequences indexed by object).
    """
    cells = _cells_for(B, onecells)
    for n in range(min_objects, max_objects + 1):
        obs = tuple(range(n))
        ext_maps = itertools.product(B.objects, repeat=n) if extents is None else \
            [tuple(e) for e in extents if len(tuple(e)) == n]
        for ext in ext_maps:
            yield from _bcategories_with(B, obs, dict(zip(obs, ext)), cells)


def _bcategories_with(B, obs, ext, cells):
    pairs = [(x, y) for x in obs for y in obs]
    triples = list(itertools.product(obs, repeat=3))
    variables = [("h", p) for p in pairs] + [("j", x) for x in obs] + [("m", t) for t in triples]

    def view(a):
        hom = {p: a[("h", p)] for p in pairs if ("h", p) in a}
        unit = {x: a[("j", x)] for x in obs if ("j", x) in a}
        comp = {t: a[("m", t)] for t in triples if ("m", t) in a}
        return BCategory(B, obs, ext, hom, unit, comp)

    def domain(v, a):
        kind, k = v
        if kind == "h":
            return cells(ext[k[0]], ext[k[1]])
        if kind == "j":
            return B.two_cells(B.id1(ext[k]), a[("h", (k, k))])
        x, y, z = k
        return B.two_cells(B.comp1(a[("h", (y, z))], a[("h", (x, y))]), a[("h", (x, z))])

    constraints = []
    for x, y in pairs:
        constraints.append(([("j", x), ("m", (x, x, y))], lambda a, x=x, y=y: _right_unit_ok(view(a), x, y)))
        constraints.append(([("j", y), ("m", (x, y, y))], lambda a, x=x, y=y: _left_unit_ok(view(a), x, y)))
    for x, y, z, w in itertools.product(obs, repeat=4):
        keys = [("m", (x, y, z)), ("m", (x, z, w)), ("m", (y, z, w)), ("m", (x, y, w))]
        constraints.append((keys, lambda a, q=(x, y, z, w): _assoc_ok(view(a), *q)))
    for a in solve(variables, domain, constraints):
        yield view(a)


def enumerate_bfunctors(X: BCategory, Y: BCategory, object_map: Mapping | None = None) -> Iterator[BFunctor]:
    """Every B-functor ``X → Y`` (optionally with a fixed object map)."""
    B = X.base
    if object_map is not None:
        maps = [dict(object_map)]
    else:
        maps = (dict(zip(X.objects, images)) for images in itertools.product(Y.objects, repeat=len(X.objects)))
    pairs = [(x, y) for x in X.objects for y in X.objects]
    for om in maps:
        if any(X.extent[x] != Y.extent[om[x]] for x in X.objects):
            continue

        def view(a, om=om):
            return BFunctor(X, Y, om, a)

        def domain(p, a, om=om):
            return B.two_cells(X.hom[p], Y.hom[(om[p[0]], om[p[1]])])

        constraints = [([(x, x)], lambda a, x=x, om=om: _functor_unit_ok(view(a, om), x)) for x in X.objects]
        for x, y, z in itertools.product(X.objects, repeat=3):
            constraints.append(([(x, z), (y, z), (x, y)],
                                lambda a, q=(x, y, z), om=om: _functor_comp_ok(view(a, om), *q)))
        for a in solve(pairs, domain, constraints):
            yield BFunctor(X, Y, om, a)


def enumerate_bnats(T: BFunctor, S: BFunctor) -> Iterator[BNatTrans]:
    C, D = T.source, T.target
    B = C.base

    def domain(x, a):
        return B.two_cells(B.id1(C.extent[x]), D.hom[(T.ob(x), S.ob(x))])

    constraints = [([x, y], lambda a, x=x, y=y: _nat_left(T, S, a, x, y) == _nat_right(T, S, a, x, y))
                   for x in C.objects for y in C.objects]
    for a in solve(list(C.objects), domain, constraints):
        yield BNatTrans(T, S, a)


def finset_carriers(max_size: int):
    """Candidate hom 1-cells for finite sets: initial segments up to ``max_size``."""
    return lambda a, b: [tuple(range(k)) for k in range(max_size + 1)]


# -- cartesian over objects ------------------------------------------------------------------

def is_cartesian_over_objects(S: BFunctor, tests: Iterable[BCategory]) -> bool:
    """Bounded check that ``S: Y' → Y`` is cartesian for the objects functor.

    For each test category ``W``, functor ``T: W → Y`` and object map ``u``
    with ``S u = ob T``, exactly one functor ``T'`` with objects ``u`` must
    satisfy ``S T' = T``.
    """
    Yp, Y = S.source, S.target
    for W in tests:
        for T in enumerate_bfunctors(W, Y):
            for images in itertools.product(Yp.objects, repeat=len(W.objects)):
                u = dict(zip(W.objects, images))
                if any(S.ob(u[w]) != T.ob(w) for w in W.objects):
                    continue
                n = sum(1 for Tp in enumerate_bfunctors(W, Yp, u) if compose_bfunctors(S, Tp) == T)
                if n != 1:
                    return False
    return True


# -- chaotic bases and sets over a set -----------------------------------------------------------

def chaotic_category_over(base: ExplicitBicategory, objects: Sequence, extent: Mapping) -> BCategory:
    """The unique category enriched in a chaotic bicategory with the given extents."""
    objects = tuple(objects)
    hom = {(x, y): ("!", extent[x], extent[y]) for x in objects for y in objects}
    unit = {x: ("!!", extent[x], extent[x]) for x in objects}
    comp = {(x, y, z): ("!!", extent[x], extent[z]) for x, y, z in itertools.product(objects, repeat=3)}
    return BCategory(base, objects, dict(extent), hom, unit, comp)


def to_set_over(X: BCategory) -> tuple[tuple, dict]:
    """A chaotically enriched category as a set with a map to the base objects."""
    return tuple(X.objects), dict(X.extent)


def chaotic_functor_over(X: BCategory, Y: BCategory, object_map: Mapping) -> BFunctor:
    """The unique functor with the given extent-preserving object map."""
    if any(X.extent[x] != Y.extent[object_map[x]] for x in X.objects):
        raise EnrichmentError("object map does not preserve extents")
    cells = {(x, y): X.base.id2(Y.hom[(object_map[x], object_map[y])]) for x in X.objects for y in X.objects}
    return BFunctor(X, Y, dict(object_map), cells)

"""Bicategories, lax functors, icons and comonads.

Two tiers share one interface (:class:`Bicategory`):

* :class:`ExplicitBicategory` tabulates every hom-category, composite and
  coherence component, so every axiom can be checked exhaustively;
* :class:`ComputableBicategory` computes cells on demand, which is the only
  option for bases such as finite sets and functions (:class:`SigmaFinSet`),
  whose hom-category has unboundedly many objects.

Composition is written ``comp1(g, f)`` for ``g.f`` (``f`` first), and
``hcomp(beta, alpha)`` for the horizontal composite ``g.f ⇒ g'.f'`` of
``beta: g ⇒ g'`` and ``alpha: f ⇒ f'``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Callable, Hashable, Iterable, Iterator, Mapping, Sequence

from .fincat import (CategoryError, FinCategory, Functor, NatTransformation, factor_through,
                     is_pullback_square, monoid_category, poset_category, product_category,
                     pullback_in, validate_category, validate_functor, validate_nat)


class BicategoryError(ValueError):
    pass


class NotEnumerable(BicategoryError):
    """Raised when an operation needs to list an infinite hom-category."""


class Bicategory:
    """Common interface; subclasses fill in the cell operations."""

    name = ""
    finite = False

    # -- 1-cells
    def onecell_src(self, f):
        raise NotImplementedError

    def onecell_tgt(self, f):
        raise NotImplementedError

    def onecells(self, a, b) -> Iterable:
        raise NotEnumerable(f"{self.name or type(self).__name__} has infinite hom-categories")

    def test_onecells(self, a, b) -> Iterable:
        """1-cells ``a → b`` that suffice to test universal properties in this base."""
        return self.onecells(a, b)

    def id1(self, a):
        raise NotImplementedError

    def comp1(self, g, f):
        raise NotImplementedError

    # -- 2-cells
    def src2(self, alpha):
        raise NotImplementedError

    def tgt2(self, alpha):
        raise NotImplementedError

    def two_cells(self, f, g) -> Iterable:
        raise NotImplementedError

    def id2(self, f):
        raise NotImplementedError

    def vcomp(self, beta, alpha):
        raise NotImplementedError

    def hcomp(self, beta, alpha):
        raise NotImplementedError

    def assoc(self, h, g, f):
        raise NotImplementedError

    def assoc_inv(self, h, g, f):
        return self.inverse(self.assoc(h, g, f))

    def lunit(self, f):
        raise NotImplementedError

    def lunit_inv(self, f):
        return self.inverse(self.lunit(f))

    def runit(self, f):
        raise NotImplementedError

    def runit_inv(self, f):
        return self.inverse(self.runit(f))

    def inverse(self, alpha):
        f, g = self.src2(alpha), self.tgt2(alpha)
        for beta in self.two_cells(g, f):
            if self.vcomp(beta, alpha) == self.id2(f) and self.vcomp(alpha, beta) == self.id2(g):
                return beta
        return None

    # -- conveniences
    def vpath(self, *cells):
        """``vpath(c, b, a) == c∘b∘a`` (``a`` first)."""
        out = cells[-1]
        for c in reversed(cells[:-1]):
            out = self.vcomp(c, out)
        return out

    def lwhisker(self, g, alpha):
        return self.hcomp(self.id2(g), alpha)

    def rwhisker(self, beta, f):
        return self.hcomp(beta, self.id2(f))

    # -- local pullbacks
    def is_pullback(self, p1, p2, f, g) -> bool:
        raise NotImplementedError

    def pullback(self, f, g):
        """``(p1, p2)`` forming a pullback of the cospan ``f, g``, or ``None``."""
        raise NotImplementedError

    def factor(self, p1, p2, q1, q2) -> list:
        """All 2-cells ``u`` with ``p1∘u == q1`` and ``p2∘u == q2``."""
        raise NotImplementedError


class ComputableBicategory(Bicategory):
    """A bicategory whose cells are computed on demand.

    1-cells passed through :meth:`comp1` and :meth:`id1` are recorded in
    ``trace`` (up to ``trace_limit`` of them) so that coherence can be
    spot-checked on the data a run actually touched.
    """

    trace_limit = 64

    def __init__(self):
        self.trace: dict = {}

    def record(self, *cells):
        for c in cells:
            if len(self.trace) >= self.trace_limit:
                return
            self.trace.setdefault(c, None)


# -- the canonical coherence routine --------------------------------------------------

@dataclass(frozen=True)
class Leaf:
    cell: Any


@dataclass(frozen=True)
class Unit:
    obj: Any


@dataclass(frozen=True)
class Comp:
    left: Any    # applied second
    right: Any   # applied first


def _tree_src(B, t):
    if isinstance(t, Leaf):
        return B.onecell_src(t.cell)
    if isinstance(t, Unit):
        return t.obj
    return _tree_src(B, t.right)


def tree_value(B: Bicategory, t):
    if isinstance(t, Leaf):
        return t.cell
    if isinstance(t, Unit):
        return B.id1(t.obj)
    return B.comp1(tree_value(B, t.left), tree_value(B, t.right))


def tree_leaves(t) -> list:
    if isinstance(t, Leaf):
        return [t.cell]
    if isinstance(t, Unit):
        return []
    return tree_leaves(t.right) + tree_leaves(t.left)


def normal_value(B: Bicategory, leaves: Sequence, src):
    """Normal form: the last-applied cell outermost, ``fn.(... .(f2.f1))``; units dropped."""
    if not leaves:
        return B.id1(src)
    out = leaves[0]
    for f in leaves[1:]:
        out = B.comp1(f, out)
    return out


def _merge(B, lg, lf, src, inverse):
    # 2-cell N(lg).N(lf) ⇒ N(lf + lg), or its inverse
    nf = normal_value(B, lf, src)
    if not lf:
        ng = normal_value(B, lg, src)
        return B.runit_inv(ng) if inverse else B.runit(ng)
    if not lg:
        return B.lunit_inv(nf) if inverse else B.lunit(nf)
    if len(lg) == 1:
        return B.id2(B.comp1(lg[0], nf))
    head = lg[-1]
    rest = normal_value(B, lg[:-1], B.onecell_src(lg[0]))
    inner = B.lwhisker(head, _merge(B, lg[:-1], lf, src, inverse))
    if inverse:
        return B.vcomp(B.assoc_inv(head, rest, nf), inner)
    return B.vcomp(inner, B.assoc(head, rest, nf))


def to_normal(B: Bicategory, t, inverse: bool = False):
    """The structural 2-cell from ``tree_value(t)`` to its normal form (or back)."""
    if isinstance(t, Leaf):
        return B.id2(t.cell)
    if isinstance(t, Unit):
        return B.id2(B.id1(t.obj))
    lg, lf = tree_leaves(t.left), tree_leaves(t.right)
    src = _tree_src(B, t)
    inner = B.hcomp(to_normal(B, t.left, inverse), to_normal(B, t.right, inverse))
    m = _merge(B, lg, lf, src, inverse)
    return B.vcomp(inner, m) if inverse else B.vcomp(m, inner)


def coherence(B: Bicategory, source_tree, target_tree):
    """The canonical coherence 2-cell between two bracketings of the same 1-cells."""
    if tree_leaves(source_tree) != tree_leaves(target_tree):
        raise BicategoryError("bracketings of different 1-cell strings")
    return B.vcomp(to_normal(B, target_tree, inverse=True), to_normal(B, source_tree))


# -- explicit tier ----------------------------------------------------------------------

class ExplicitBicategory(Bicategory):
    """A bicategory with every piece of structure tabulated.

    1-cell ids must be distinct across hom-categories, and likewise 2-cell ids.
    ``comp1[(g, f)]`` and ``comp2[(beta, alpha)]`` give horizontal composites,
    ``assoc[(h, g, f)]``, ``lunit[f]`` and ``runit[f]`` the coherence
    components.
    """

    finite = True

    def __init__(self, objects, homs: Mapping, unit: Mapping, comp1: Mapping, comp2: Mapping,
                 assoc: Mapping, lunit: Mapping, runit: Mapping, name: str = ""):
        self.objects = tuple(objects)
        self.homs = dict(homs)
        self.unit = dict(unit)
        self.comp1_table = dict(comp1)
        self.comp2_table = dict(comp2)
        self.assoc_table = dict(assoc)
        self.lunit_table = dict(lunit)
        self.runit_table = dict(runit)
        self.name = name
        self._inv_cache: dict = {}

    def __repr__(self):
        return f"<ExplicitBicategory {self.name or ''}: {len(self.objects)} objects>"

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, ExplicitBicategory):
            return NotImplemented
        return (self.objects == other.objects and self.homs == other.homs and self.unit == other.unit
                and self.comp1_table == other.comp1_table and self.comp2_table == other.comp2_table
                and self.assoc_table == other.assoc_table and self.lunit_table == other.lunit_table
                and self.runit_table == other.runit_table)

    def __hash__(self):
        return hash(("explicit", self.objects))

    @cached_property
    def _onecell_home(self) -> dict:
        out = {}
        for (a, b), H in self.homs.items():
            for f in H.objects:
                if f in out:
                    raise BicategoryError(f"1-cell id {f!r} used in two hom-categories")
                out[f] = (a, b)
        return out

    @cached_property
    def _twocell_home(self) -> dict:
        out = {}
        for (a, b), H in self.homs.items():
            for m in H.morphisms:
                if m in out:
                    raise BicategoryError(f"2-cell id {m!r} used in two hom-categories")
                out[m] = (a, b)
        return out

    def hom(self, a, b) -> FinCategory:
        return self.homs[(a, b)]

    def onecell_src(self, f):
        return self._onecell_home[f][0]

    def onecell_tgt(self, f):
        return self._onecell_home[f][1]

    def onecells(self, a, b):
        return self.homs[(a, b)].objects

    def id1(self, a):
        return self.unit[a]

    def comp1(self, g, f):
        try:
            return self.comp1_table[(g, f)]
        except KeyError:
            raise BicategoryError(f"1-cells {g!r}, {f!r} not composable") from None

    def _hom_of2(self, alpha) -> FinCategory:
        return self.homs[self._twocell_home[alpha]]

    def src2(self, alpha):
        return self._hom_of2(alpha).src(alpha)

    def tgt2(self, alpha):
        return self._hom_of2(alpha).tgt(alpha)

    def two_cells(self, f, g):
        return self.homs[self._onecell_home[f]].hom(f, g)

    def id2(self, f):
        return self.homs[self._onecell_home[f]].id(f)

    def vcomp(self, beta, alpha):
        return self._hom_of2(alpha).compose(beta, alpha)

    def hcomp(self, beta, alpha):
        try:
            return self.comp2_table[(beta, alpha)]
        except KeyError:
            raise BicategoryError(f"2-cells {beta!r}, {alpha!r} not composable") from None

    def assoc(self, h, g, f):
        return self.assoc_table[(h, g, f)]

    def lunit(self, f):
        return self.lunit_table[f]

    def runit(self, f):
        return self.runit_table[f]

    def inverse(self, alpha):
        if alpha not in self._inv_cache:
            self._inv_cache[alpha] = self._hom_of2(alpha).inverse(alpha)
        return self._inv_cache[alpha]

    def is_pullback(self, p1, p2, f, g):
        return is_pullback_square(self._hom_of2(f), p1, p2, f, g)

    def pullback(self, f, g):
        cone = pullback_in(self._hom_of2(f), f, g)
        return None if cone is None else cone.legs

    def factor(self, p1, p2, q1, q2):
        H = self._hom_of2(p1)
        from .fincat import Cone
        return factor_through(H, Cone(H.src(p1), (p1, p2)), (q1, q2))

    def compose_functor(self, a, b, c) -> Functor:
        """Horizontal composition ``hom(b,c) × hom(a,b) → hom(a,c)`` as a functor."""
        P = product_category(self.hom(b, c), self.hom(a, b))
        return Functor(P, self.hom(a, c),
                       {(g, f): self.comp1(g, f) for g, f in P.objects},
                       {(be, al): self.hcomp(be, al) for be, al in P.morphisms})


def tabulate(B: Bicategory, name: str | None = None) -> ExplicitBicategory:
    """Tabulate a bicategory with finite hom-categories."""
    objects = tuple(B.objects)
    homs = {}
    for a in objects:
        for b in objects:
            cells = tuple(B.onecells(a, b))
            morphisms = {}
            for f in cells:
                for g in cells:
                    for al in B.two_cells(f, g):
                        morphisms[al] = (f, g)
            identity = {f: B.id2(f) for f in cells}
            composition = {}
            for be, (g, h) in morphisms.items():
                for al, (f, g2) in morphisms.items():
                    if g2 == g:
                        composition[(be, al)] = B.vcomp(be, al)
            homs[(a, b)] = FinCategory(cells, morphisms, identity, composition, f"hom({a},{b})")
    comp1, comp2, assoc, lunit, runit = {}, {}, {}, {}, {}
    for a, b, c in itertools.product(objects, repeat=3):
        Hab, Hbc = homs[(a, b)], homs[(b, c)]
        for g in Hbc.objects:
            for f in Hab.objects:
                comp1[(g, f)] = B.comp1(g, f)
        for be in Hbc.morphisms:
            for al in Hab.morphisms:
                comp2[(be, al)] = B.hcomp(be, al)
    for a, b, c, d in itertools.product(objects, repeat=4):
        for h in homs[(c, d)].objects:
            for g in homs[(b, c)].objects:
                for f in homs[(a, b)].objects:
                    assoc[(h, g, f)] = B.assoc(h, g, f)
    for a, b in itertools.product(objects, repeat=2):
        for f in homs[(a, b)].objects:
            lunit[f] = B.lunit(f)
            runit[f] = B.runit(f)
    unit = {a: B.id1(a) for a in objects}
    return ExplicitBicategory(objects, homs, unit, comp1, comp2, assoc, lunit, runit,
                              name if name is not None else B.name)


# -- validation --------------------------------------------------------------------------

def validate_bicategory(B: Bicategory, onecells: Iterable | None = None) -> list[str]:
    """Every violated bicategory axiom instance; empty if valid.

    Finite bicategories are checked exhaustively. For a computable one the
    check runs over ``onecells`` (default: its recorded trace), composing only
    those 1-cells that are composable.
    """
    problems: list[str] = []
    if B.finite:
        cells = {}
        for a in B.objects:
            for b in B.objects:
                cells[(a, b)] = list(B.onecells(a, b))
                if isinstance(B, ExplicitBicategory):
                    for p in validate_category(B.hom(a, b)):
                        problems.append(f"hom({a!r},{b!r}): {p}")
        if problems:
            return problems
        all_cells = [f for v in cells.values() for f in v]
    else:
        all_cells = list(onecells if onecells is not None else getattr(B, "trace", {}))
        cells = {}
        for f in all_cells:
            cells.setdefault((B.onecell_src(f), B.onecell_tgt(f)), []).append(f)
    by_src: dict = {}
    for f in all_cells:
        by_src.setdefault(B.onecell_src(f), []).append(f)

    def after(f):
        return by_src.get(B.onecell_tgt(f), [])

    def twos(f, g):
        return list(B.two_cells(f, g)) if B.finite else []

    def hom_twos(a, b):
        out = []
        for f in cells.get((a, b), []):
            for g in cells.get((a, b), []):
                out.extend(twos(f, g))
        return out

    # composition is a functor
    for f in all_cells:
        for g in after(f):
            gf = B.comp1(g, f)
            if B.hcomp(B.id2(g), B.id2(f)) != B.id2(gf):
                problems.append(f"horizontal composition does not preserve identities at ({g!r}, {f!r})")
    if B.finite:
        for (a, b), fs in cells.items():
            for c in B.objects:
                right = hom_twos(a, b)
                left = hom_twos(b, c)
                for be in left:
                    for al in right:
                        s = B.comp1(B.src2(be), B.src2(al))
                        t = B.comp1(B.tgt2(be), B.tgt2(al))
                        h = B.hcomp(be, al)
                        if B.src2(h) != s or B.tgt2(h) != t:
                            problems.append(f"hcomp({be!r}, {al!r}) ill-typed")
                for be2 in left:
                    for be in left:
                        if B.src2(be2) != B.tgt2(be):
                            continue
                        for al2 in right:
                            for al in right:
                                if B.src2(al2) != B.tgt2(al):
                                    continue
                                lhs = B.hcomp(B.vcomp(be2, be), B.vcomp(al2, al))
                                rhs = B.vcomp(B.hcomp(be2, al2), B.hcomp(be, al))
                                if lhs != rhs:
                                    problems.append(f"interchange law fails at ({be2!r}, {be!r}, {al2!r}, {al!r})")
    if problems:
        return problems
    # coherence components: typing and invertibility
    for f in all_cells:
        a, b = B.onecell_src(f), B.onecell_tgt(f)
        lu, ru = B.lunit(f), B.runit(f)
        if (B.src2(lu), B.tgt2(lu)) != (B.comp1(B.id1(b), f), f):
            problems.append(f"left unitor at {f!r} ill-typed")
        elif B.inverse(lu) is None:
            problems.append(f"left unitor at {f!r} not invertible")
        if (B.src2(ru), B.tgt2(ru)) != (B.comp1(f, B.id1(a)), f):
            problems.append(f"right unitor at {f!r} ill-typed")
        elif B.inverse(ru) is None:
            problems.append(f"right unitor at {f!r} not invertible")
        for g in after(f):
            for h in after(g):
                al = B.assoc(h, g, f)
                if (B.src2(al), B.tgt2(al)) != (B.comp1(B.comp1(h, g), f), B.comp1(h, B.comp1(g, f))):
                    problems.append(f"associator at ({h!r}, {g!r}, {f!r}) ill-typed")
                elif B.inverse(al) is None:
                    problems.append(f"associator at ({h!r}, {g!r}, {f!r}) not invertible")
    if problems:
        return problems
    # naturality, variable by variable
    if B.finite:
        for f in all_cells:
            for g in after(f):
                for h in after(g):
                    for x in cells[(B.onecell_src(h), B.onecell_tgt(h))]:
                        for chi in twos(h, x):
                            if B.vcomp(B.assoc(x, g, f), B.rwhisker(B.rwhisker(chi, g), f)) != \
                                    B.vcomp(B.rwhisker(chi, B.comp1(g, f)), B.assoc(h, g, f)):
                                problems.append(f"associator not natural in first variable at ({chi!r}, {g!r}, {f!r})")
                    for x in cells[(B.onecell_src(g), B.onecell_tgt(g))]:
                        for be in twos(g, x):
                            if B.vcomp(B.assoc(h, x, f), B.rwhisker(B.lwhisker(h, be), f)) != \
                                    B.vcomp(B.lwhisker(h, B.rwhisker(be, f)), B.assoc(h, g, f)):
                                problems.append(f"associator not natural in second variable at ({h!r}, {be!r}, {f!r})")
                    for x in cells[(B.onecell_src(f), B.onecell_tgt(f))]:
                        for al in twos(f, x):
                            if B.vcomp(B.assoc(h, g, x), B.lwhisker(B.comp1(h, g), al)) != \
                                    B.vcomp(B.lwhisker(h, B.lwhisker(g, al)), B.assoc(h, g, f)):
                                problems.append(f"associator not natural in third variable at ({h!r}, {g!r}, {al!r})")
            a, b = B.onecell_src(f), B.onecell_tgt(f)
            for x in cells[(a, b)]:
                for al in twos(f, x):
                    if B.vcomp(B.lunit(x), B.lwhisker(B.id1(b), al)) != B.vcomp(al, B.lunit(f)):
                        problems.append(f"left unitor not natural at {al!r}")
                    if B.vcomp(B.runit(x), B.rwhisker(al, B.id1(a))) != B.vcomp(al, B.runit(f)):
                        problems.append(f"right unitor not natural at {al!r}")
    # pentagon and triangle
    for f in all_cells:
        for g in after(f):
            a = B.onecell_src(g)
            tri_l = B.vcomp(B.lwhisker(g, B.lunit(f)), B.assoc(g, B.id1(a), f))
            tri_r = B.rwhisker(B.runit(g), f)
            if tri_l != tri_r:
                problems.append(f"triangle fails at ({g!r}, {f!r})")
            for h in after(g):
                for k in after(h):
                    lhs = B.vpath(B.lwhisker(k, B.assoc(h, g, f)),
                                  B.assoc(k, B.comp1(h, g), f),
                                  B.rwhisker(B.assoc(k, h, g), f))
                    rhs = B.vcomp(B.assoc(k, h, B.comp1(g, f)), B.assoc(B.comp1(k, h), g, f))
                    if lhs != rhs:
                        problems.append(f"pentagon fails at ({k!r}, {h!r}, {g!r}, {f!r})")
    return problems


# -- finite sets and functions --------------------------------------------------------------

class Fn:
    """A function between finite sets given as element tuples."""

    __slots__ = ("dom", "cod", "images", "_map", "_hash")

    def __init__(self, dom: tuple, cod: tuple, images: tuple):
        self.dom = dom
        self.cod = cod
        self.images = images
        self._map = None
        self._hash = None

    @classmethod
    def from_map(cls, dom, cod, mapping) -> "Fn":
        dom, cod = tuple(dom), tuple(cod)
        if callable(mapping):
            return cls(dom, cod, tuple(mapping(x) for x in dom))
        return cls(dom, cod, tuple(mapping[x] for x in dom))

    @classmethod
    def identity(cls, s: tuple) -> "Fn":
        return cls(s, s, s)

    @property
    def mapping(self) -> dict:
        if self._map is None:
            self._map = dict(zip(self.dom, self.images))
        return self._map

    def __call__(self, x):
        return self.mapping[x]

    def __eq__(self, other):
        return (isinstance(other, Fn) and self.images == other.images
                and self.dom == other.dom and self.cod == other.cod)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.dom, self.cod, self.images))
        return self._hash

    def __repr__(self):
        return "Fn({%s})" % ", ".join(f"{x!r}: {y!r}" for x, y in zip(self.dom, self.images))

    def is_bijective(self) -> bool:
        return len(set(self.images)) == len(self.images) == len(self.cod)

    def is_injective(self) -> bool:
        return len(set(self.images)) == len(self.images)


SINGLETON = ("*",)


def sigma_finset() -> "SigmaFinSet":
    return SigmaFinSet()


class SigmaFinSet(ComputableBicategory):
    """Finite sets with cartesian product, as a one-object bicategory.

    1-cells are element tuples and the composite ``T.S`` is the tuple of pairs
    ``(t, s)`` in lexicographic order; 2-cells are :class:`Fn`. The identity
    1-cell is ``("*",)``. ``test_sizes`` fixes the carriers returned by
    :meth:`test_onecells`: every finite set is a coproduct of singletons and
    composing with a fixed set preserves coproducts, so sizes 0 and 1
    already detect right liftings.
    """

    name = "Set"
    objects = ("*",)

    def __init__(self, test_sizes: Sequence[int] = (0, 1)):
        super().__init__()
        self.test_sizes = tuple(test_sizes)

    def __eq__(self, other):
        return isinstance(other, SigmaFinSet)

    def __hash__(self):
        return hash("SigmaFinSet")

    def __repr__(self):
        return "<SigmaFinSet>"

    def onecell_src(self, f):
        return "*"

    def onecell_tgt(self, f):
        return "*"

    def canonical(self, n: int) -> tuple:
        return tuple(range(n))

    def onecells_bounded(self, a, b, max_size: int):
        for n in range(max_size + 1):
            yield self.canonical(n)

    def test_onecells(self, a, b):
        for n in self.test_sizes:
            yield SINGLETON if n == 1 else self.canonical(n)

    def id1(self, a):
        return SINGLETON

    def comp1(self, g, f):
        out = tuple((t, s) for t in g for s in f)
        if len(self.trace) < self.trace_limit:
            self.record(g, f)
        return out

    def src2(self, alpha):
        return alpha.dom

    def tgt2(self, alpha):
        return alpha.cod

    def two_cells(self, f, g):
        for images in itertools.product(g, repeat=len(f)):
            yield Fn(f, g, images)

    def id2(self, f):
        return Fn.identity(f)

    def vcomp(self, beta, alpha):
        if alpha.cod != beta.dom:
            raise BicategoryError("2-cells not vertically composable")
        m = beta.mapping
        return Fn(alpha.dom, beta.cod, tuple(m[y] for y in alpha.images))

    def hcomp(self, beta, alpha):
        bm, am = beta.mapping, alpha.mapping
        dom = tuple((t, s) for t in beta.dom for s in alpha.dom)
        cod = tuple((t, s) for t in beta.cod for s in alpha.cod)
        return Fn(dom, cod, tuple((bm[t], am[s]) for t, s in dom))

    def assoc(self, h, g, f):
        dom = self.comp1(self.comp1(h, g), f)
        cod = self.comp1(h, self.comp1(g, f))
        return Fn(dom, cod, tuple((u, (t, s)) for (u, t), s in dom))

    def assoc_inv(self, h, g, f):
        return self.inverse(self.assoc(h, g, f))

    def lunit(self, f):
        dom = self.comp1(SINGLETON, f)
        return Fn(dom, f, tuple(s for _, s in dom))

    def runit(self, f):
        dom = self.comp1(f, SINGLETON)
        return Fn(dom, f, tuple(s for s, _ in dom))

    def lunit_inv(self, f):
        return self.inverse(self.lunit(f))

    def runit_inv(self, f):
        return self.inverse(self.runit(f))

    def inverse(self, alpha):
        if not alpha.is_bijective():
            return None
        back = {y: x for x, y in zip(alpha.dom, alpha.images)}
        return Fn(alpha.cod, alpha.dom, tuple(back[y] for y in alpha.cod))

    def is_pullback(self, p1, p2, f, g):
        if self.vcomp(f, p1) != self.vcomp(g, p2):
            return False
        fm, gm = f.mapping, g.mapping
        fibre = {(a, b) for a in f.dom for b in g.dom if fm[a] == gm[b]}
        pairs = [(p1(p), p2(p)) for p in p1.dom]
        return len(set(pairs)) == len(pairs) and set(pairs) == fibre

    def pullback(self, f, g):
        fm, gm = f.mapping, g.mapping
        P = tuple((a, b) for a in f.dom for b in g.dom if fm[a] == gm[b])
        return (Fn(P, f.dom, tuple(a for a, _ in P)), Fn(P, g.dom, tuple(b for _, b in P)))

    def factor(self, p1, p2, q1, q2):
        options = []
        for q in q1.dom:
            options.append([p for p in p1.dom if p1(p) == q1(q) and p2(p) == q2(q)])
        return [Fn(q1.dom, p1.dom, images) for images in itertools.product(*options)]


# -- monoidal categories and standard constructions ---------------------------------------------

class MonoidalError(BicategoryError):
    pass


@dataclass(frozen=True, eq=False)
class MonoidalCategory:
    """A monoidal structure on a finite category, tabulated.

    ``tensor[(a, b)]`` on objects, ``tensor_mor[(f, g)]`` on morphisms;
    ``assoc[(a, b, c)]: (a⊗b)⊗c → a⊗(b⊗c)``, ``lunit[a]: I⊗a → a``,
    ``runit[a]: a⊗I → a``.
    """

    category: FinCategory
    tensor: Mapping
    tensor_mor: Mapping
    unit: Any
    assoc: Mapping
    lunit: Mapping
    runit: Mapping
    name: str = ""


def monoidal_poset(elements: Sequence, leq, tensor, unit, name: str = "") -> MonoidalCategory:
    """A thin monoidal category from a preorder and a monotone tensor."""
    elements = tuple(elements)
    C = poset_category(elements, leq, name)
    ten = {}
    for a in elements:
        for b in elements:
            t = tensor(a, b)
            if t not in elements:
                raise MonoidalError(f"{a!r}⊗{b!r} = {t!r} is not an element")
            ten[(a, b)] = t
    if unit not in elements:
        raise MonoidalError(f"unit {unit!r} is not an element")
    ten_mor = {}
    for f in C.morphisms:
        for g in C.morphisms:
            s = (ten[(f[0], g[0])], ten[(f[1], g[1])])
            if s not in C.morphisms:
                raise MonoidalError(f"tensor is not monotone at {f!r}, {g!r}")
            ten_mor[(f, g)] = s

    def mor(a, b):
        if (a, b) not in C.morphisms:
            raise MonoidalError(f"coherence fails: {a!r} and {b!r} not isomorphic")
        return (a, b)

    assoc = {(a, b, c): mor(ten[(ten[(a, b)], c)], ten[(a, ten[(b, c)])])
             for a in elements for b in elements for c in elements}
    lunit = {a: mor(ten[(unit, a)], a) for a in elements}
    runit = {a: mor(ten[(a, unit)], a) for a in elements}
    for k, (x, y) in list(assoc.items()) + list(lunit.items()) + list(runit.items()):
        if (y, x) not in C.morphisms:
            raise MonoidalError(f"coherence component at {k!r} is not invertible")
    return MonoidalCategory(C, ten, ten_mor, unit, assoc, lunit, runit, name)


def monoidal_from_commutative_monoid(elements: Sequence, mult, unit, name: str = "") -> MonoidalCategory:
    """One object, morphisms the monoid elements; tensor and composition both the product."""
    C = monoid_category(elements, mult, unit, obj="I", name=name)
    ten_mor = {(f, g): mult(f, g) for f in C.morphisms for g in C.morphisms}
    return MonoidalCategory(C, {("I", "I"): "I"}, ten_mor, "I",
                            {("I", "I", "I"): unit}, {"I": unit}, {"I": unit}, name)


BOOL_AND = monoidal_poset(("bot", "top"), lambda a, b: a == "bot" or b == "top",
                          lambda a, b: "top" if a == b == "top" else "bot", "top", name="BoolAnd")


def _validate_monoidal(V: MonoidalCategory) -> list[str]:
    C = V.category
    problems = []
    T = Functor(product_category(C, C), C, dict(V.tensor), dict(V.tensor_mor))
    for p in validate_functor(T):
        problems.append(f"tensor: {p}")
    return problems


def from_monoidal(V: MonoidalCategory, obj="*") -> ExplicitBicategory:
    """The one-object bicategory of a monoidal category: hom = V, composition = tensor."""
    C = V.category
    problems = validate_category(C) + _validate_monoidal(V)
    if problems:
        raise MonoidalError("; ".join(problems))
    comp1 = {(g, f): V.tensor[(g, f)] for g in C.objects for f in C.objects}
    comp2 = {(b, a): V.tensor_mor[(b, a)] for b in C.morphisms for a in C.morphisms}
    assoc = {k: V.assoc[k] for k in V.assoc}
    B = ExplicitBicategory((obj,), {(obj, obj): C}, {obj: V.unit}, comp1, comp2, assoc,
                           dict(V.lunit), dict(V.runit), name=f"Σ({V.name})" if V.name else "Σ(V)")
    problems = validate_bicategory(B)
    if problems:
        raise MonoidalError("; ".join(problems))
    return B


def terminal_bicategory() -> ExplicitBicategory:
    return chaotic(["*"], name="1")


def chaotic(X: Iterable, name: str = "") -> ExplicitBicategory:
    """Objects ``X``; every hom-category terminal, with 1-cell ``('!', a, b)``."""
    X = tuple(X)
    homs = {}
    for a in X:
        for b in X:
            f, al = ("!", a, b), ("!!", a, b)
            homs[(a, b)] = FinCategory((f,), {al: (f, f)}, {f: al}, {(al, al): al}, f"hom({a},{b})")
    unit = {a: ("!", a, a) for a in X}
    comp1, comp2, assoc, lunit, runit = {}, {}, {}, {}, {}
    for a, b, c in itertools.product(X, repeat=3):
        comp1[(("!", b, c), ("!", a, b))] = ("!", a, c)
        comp2[(("!!", b, c), ("!!", a, b))] = ("!!", a, c)
    for a, b, c, d in itertools.product(X, repeat=4):
        assoc[(("!", c, d), ("!", b, c), ("!", a, b))] = ("!!", a, d)
    for a, b in itertools.product(X, repeat=2):
        lunit[("!", a, b)] = ("!!", a, b)
        runit[("!", a, b)] = ("!!", a, b)
    return ExplicitBicategory(X, homs, unit, comp1, comp2, assoc, lunit, runit,
                              name or f"chaotic({', '.join(map(str, X))})")


def is_chaotic(B: Bicategory) -> bool:
    if not B.finite:
        return False
    for a in B.objects:
        for b in B.objects:
            cells = list(B.onecells(a, b))
            if len(cells) != 1 or len(list(B.two_cells(cells[0], cells[0]))) != 1:
                return False
    return True


class ProductBicategory(ComputableBicategory):
    """Componentwise product; 1- and 2-cells are pairs."""

    def __init__(self, B: Bicategory, C: Bicategory):
        super().__init__()
        self.B, self.C = B, C
        self.objects = tuple(itertools.product(B.objects, C.objects))
        self.finite = B.finite and C.finite
        self.name = f"{B.name}×{C.name}"

    def __eq__(self, other):
        return isinstance(other, ProductBicategory) and self.B == other.B and self.C == other.C

    def __hash__(self):
        return hash(("prod", id(self.B), id(self.C)))

    def onecell_src(self, f):
        return (self.B.onecell_src(f[0]), self.C.onecell_src(f[1]))

    def onecell_tgt(self, f):
        return (self.B.onecell_tgt(f[0]), self.C.onecell_tgt(f[1]))

    def onecells(self, a, b):
        return list(itertools.product(self.B.onecells(a[0], b[0]), self.C.onecells(a[1], b[1])))

    def test_onecells(self, a, b):
        return list(itertools.product(self.B.test_onecells(a[0], b[0]), self.C.test_onecells(a[1], b[1])))

    def id1(self, a):
        return (self.B.id1(a[0]), self.C.id1(a[1]))

    def comp1(self, g, f):
        return (self.B.comp1(g[0], f[0]), self.C.comp1(g[1], f[1]))

    def src2(self, al):
        return (self.B.src2(al[0]), self.C.src2(al[1]))

    def tgt2(self, al):
        return (self.B.tgt2(al[0]), self.C.tgt2(al[1]))

    def two_cells(self, f, g):
        return list(itertools.product(self.B.two_cells(f[0], g[0]), self.C.two_cells(f[1], g[1])))

    def id2(self, f):
        return (self.B.id2(f[0]), self.C.id2(f[1]))

    def vcomp(self, be, al):
        return (self.B.vcomp(be[0], al[0]), self.C.vcomp(be[1], al[1]))

    def hcomp(self, be, al):
        return (self.B.hcomp(be[0], al[0]), self.C.hcomp(be[1], al[1]))

    def assoc(self, h, g, f):
        return (self.B.assoc(h[0], g[0], f[0]), self.C.assoc(h[1], g[1], f[1]))

    def assoc_inv(self, h, g, f):
        return (self.B.assoc_inv(h[0], g[0], f[0]), self.C.assoc_inv(h[1], g[1], f[1]))

    def lunit(self, f):
        return (self.B.lunit(f[0]), self.C.lunit(f[1]))

    def lunit_inv(self, f):
        return (self.B.lunit_inv(f[0]), self.C.lunit_inv(f[1]))

    def runit(self, f):
        return (self.B.runit(f[0]), self.C.runit(f[1]))

    def runit_inv(self, f):
        return (self.B.runit_inv(f[0]), self.C.runit_inv(f[1]))

    def inverse(self, al):
        x, y = self.B.inverse(al[0]), self.C.inverse(al[1])
        return None if x is None or y is None else (x, y)

    def is_pullback(self, p1, p2, f, g):
        return (self.B.is_pullback(p1[0], p2[0], f[0], g[0])
                and self.C.is_pullback(p1[1], p2[1], f[1], g[1]))

    def pullback(self, f, g):
        x, y = self.B.pullback(f[0], g[0]), self.C.pullback(f[1], g[1])
        if x is None or y is None:
            return None
        return ((x[0], y[0]), (x[1], y[1]))

    def factor(self, p1, p2, q1, q2):
        xs = self.B.factor(p1[0], p2[0], q1[0], q2[0])
        ys = self.C.factor(p1[1], p2[1], q1[1], q2[1])
        return list(itertools.product(xs, ys))


def product_bicategory(B: Bicategory, C: Bicategory):
    """``B × C``; tabulated when both factors are finite."""
    P = ProductBicategory(B, C)
    return tabulate(P) if P.finite else P


def free_quantaloid(X: FinCategory) -> ExplicitBicategory:
    """``𝒫X``: hom(x, x') is the powerset of ``X(x, x')`` ordered by inclusion.

    1-cells are ``('P', x, x', subset)`` with ``subset`` a tuple in the
    morphism order of ``X``; 2-cells are ``('⊆', S, T)``.
    """
    order = X._mor_index

    def cell(a, b, ms):
        return ("P", a, b, tuple(sorted(set(ms), key=order.__getitem__)))

    homs, subsets = {}, {}
    for a in X.objects:
        for b in X.objects:
            ms = X.hom(a, b)
            cells = [cell(a, b, c) for r in range(len(ms) + 1) for c in itertools.combinations(ms, r)]
            subsets[(a, b)] = cells
            leq = lambda S, T: set(S[3]) <= set(T[3])
            morphisms = {("⊆", S, T): (S, T) for S in cells for T in cells if leq(S, T)}
            identity = {S: ("⊆", S, S) for S in cells}
            composition = {}
            for (_, T, U) in morphisms:
                for (_, S, T2) in morphisms:
                    if T2 == T:
                        composition[(("⊆", T, U), ("⊆", S, T))] = ("⊆", S, U)
            homs[(a, b)] = FinCategory(tuple(cells), morphisms, identity, composition, f"P({a},{b})")

    def c1(T, S):
        a, c = S[1], T[2]
        return cell(a, c, {X.compose(g, f) for g in T[3] for f in S[3]})

    comp1, comp2, assoc, lunit, runit = {}, {}, {}, {}, {}
    for a, b, c in itertools.product(X.objects, repeat=3):
        for T in subsets[(b, c)]:
            for S in subsets[(a, b)]:
                comp1[(T, S)] = c1(T, S)
        for be in homs[(b, c)].morphisms:
            for al in homs[(a, b)].morphisms:
                comp2[(be, al)] = ("⊆", c1(be[1], al[1]), c1(be[2], al[2]))
    for a, b, c, d in itertools.product(X.objects, repeat=4):
        for U in subsets[(c, d)]:
            for T in subsets[(b, c)]:
                for S in subsets[(a, b)]:
                    v = c1(c1(U, T), S)
                    assoc[(U, T, S)] = ("⊆", v, v)
    for a, b in itertools.product(X.objects, repeat=2):
        for S in subsets[(a, b)]:
            lunit[S] = ("⊆", S, S)
            runit[S] = ("⊆", S, S)
    unit = {a: cell(a, a, [X.id(a)]) for a in X.objects}
    return ExplicitBicategory(X.objects, homs, unit, comp1, comp2, assoc, lunit, runit,
                              name=f"P({X.name or 'X'})")


# -- lax slices and right liftings ------------------------------------------------------------

class LaxSlice(ComputableBicategory):
    """``B⫽b``: objects ``(x, f: x → b)``; 1-cells ``(h, alpha: g.h ⇒ f)``.

    A 1-cell ``(x, f) → (y, g)`` is the triple ``((x, f), h, alpha, (y, g))``;
    a 2-cell is ``(source, theta, target)`` with ``theta: h ⇒ h'`` and
    ``alpha'∘(g*theta) == alpha``.
    """

    def __init__(self, B: Bicategory, b):
        super().__init__()
        if b not in B.objects:
            raise BicategoryError(f"unknown object {b!r}")
        self.B, self.b = B, b
        self.finite = B.finite
        self.name = f"{B.name}⫽{b}"
        self.objects = tuple((x, f) for x in B.objects for f in B.onecells(x, b))

    def onecell_src(self, c):
        return c[0]

    def onecell_tgt(self, c):
        return c[3]

    def onecells(self, s, t):
        B = self.B
        (x, f), (y, g) = s, t
        out = []
        for h in B.onecells(x, y):
            for al in B.two_cells(B.comp1(g, h), f):
                out.append((s, h, al, t))
        return out

    def id1(self, s):
        x, f = s
        return (s, self.B.id1(x), self.B.runit(f), s)

    def comp1(self, k, h):
        B = self.B
        s, hh, al, t = h
        t2, kk, be, u = k
        g, kg = t[1], u[1]
        # kg.(kk.hh) ≅ (kg.kk).hh ⇒ g.hh ⇒ f
        cell = B.vpath(al, B.rwhisker(be, hh), B.assoc_inv(kg, kk, hh))
        return (s, B.comp1(kk, hh), cell, u)

    def src2(self, th):
        return th[0]

    def tgt2(self, th):
        return th[2]

    def two_cells(self, h, h2):
        B = self.B
        g = h[3][1]
        out = []
        for th in B.two_cells(h[1], h2[1]):
            if B.vcomp(h2[2], B.lwhisker(g, th)) == h[2]:
                out.append((h, th, h2))
        return out

    def id2(self, h):
        return (h, self.B.id2(h[1]), h)

    def vcomp(self, be, al):
        return (al[0], self.B.vcomp(be[1], al[1]), be[2])

    def hcomp(self, be, al):
        return (self.comp1(be[0], al[0]), self.B.hcomp(be[1], al[1]), self.comp1(be[2], al[2]))

    def assoc(self, h, g, f):
        return (self.comp1(self.comp1(h, g), f), self.B.assoc(h[1], g[1], f[1]),
                self.comp1(h, self.comp1(g, f)))

    def lunit(self, f):
        return (self.comp1(self.id1(f[3]), f), self.B.lunit(f[1]), f)

    def runit(self, f):
        return (self.comp1(f, self.id1(f[0])), self.B.runit(f[1]), f)


def lax_slice(B: Bicategory, b) -> ExplicitBicategory:
    return tabulate(LaxSlice(B, b), name=f"{B.name}⫽{b}")


def right_lifting(B: Bicategory, f, g):
    """Right lifting ``(l, eps: g.l ⇒ f)`` of ``f: x → b`` along ``g: y → b``, or ``None``.

    The universal property is verified against every ``h: x → y`` and
    ``alpha: g.h ⇒ f``: exactly one ``theta: h ⇒ l`` with ``eps∘(g*theta) == alpha``.
    """
    if B.onecell_tgt(f) != B.onecell_tgt(g):
        raise BicategoryError("right lifting needs a shared codomain")
    x, y = B.onecell_src(f), B.onecell_src(g)
    tests = [(h, al) for h in B.test_onecells(x, y) for al in B.two_cells(B.comp1(g, h), f)]
    for l in B.onecells(x, y):
        for eps in B.two_cells(B.comp1(g, l), f):
            if all(sum(1 for th in B.two_cells(h, l) if B.vcomp(eps, B.lwhisker(g, th)) == al) == 1
                   for h, al in tests):
                return l, eps
    return None


# -- lax functors, icons, comonads ---------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class LaxFunctor:
    """A lax functor ``source → target``.

    ``comp2[(g, f)]: F g . F f ⇒ F(g.f)``; ``unit2[a]: 1_{Fa} ⇒ F(1_a)``.
    """

    source: Bicategory
    target: Bicategory
    object_map: Mapping
    onecell_map: Mapping
    twocell_map: Mapping
    comp2: Mapping
    unit2: Mapping

    def __eq__(self, other):
        if not isinstance(other, LaxFunctor):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and dict(self.object_map) == dict(other.object_map)
                and dict(self.onecell_map) == dict(other.onecell_map)
                and dict(self.twocell_map) == dict(other.twocell_map)
                and dict(self.comp2) == dict(other.comp2)
                and dict(self.unit2) == dict(other.unit2))

    __hash__ = object.__hash__

    def ob(self, a):
        return self.object_map[a]

    def one(self, f):
        return self.onecell_map[f]

    def two(self, al):
        return self.twocell_map[al]


def identity_lax_functor(B: ExplicitBicategory) -> LaxFunctor:
    ones = [f for H in B.homs.values() for f in H.objects]
    twos = [m for H in B.homs.values() for m in H.morphisms]
    comp2 = {(g, f): B.id2(B.comp1(g, f)) for (g, f) in B.comp1_table}
    return LaxFunctor(B, B, {a: a for a in B.objects}, {f: f for f in ones}, {m: m for m in twos},
                      comp2, {a: B.id2(B.id1(a)) for a in B.objects})


def compose_lax(G: LaxFunctor, F: LaxFunctor) -> LaxFunctor:
    """``G∘F`` with comparisons ``G(phi^F)∘phi^G``."""
    T = G.target
    comp2 = {(g, f): T.vcomp(G.two(c), G.comp2[(F.one(g), F.one(f))]) for (g, f), c in F.comp2.items()}
    unit2 = {a: T.vcomp(G.two(F.unit2[a]), G.unit2[F.ob(a)]) for a in F.object_map}
    return LaxFunctor(F.source, T, {a: G.ob(F.ob(a)) for a in F.object_map},
                      {f: G.one(F.one(f)) for f in F.onecell_map},
                      {m: G.two(F.two(m)) for m in F.twocell_map}, comp2, unit2)


def validate_lax_functor(F: LaxFunctor) -> list[str]:
    A, B = F.source, F.target
    if not A.finite:
        raise NotEnumerable("lax functor validation needs a finite source")
    problems = []
    cells = {(a, b): list(A.onecells(a, b)) for a in A.objects for b in A.objects}
    for (a, b), fs in cells.items():
        for f in fs:
            Ff = F.one(f)
            if (B.onecell_src(Ff), B.onecell_tgt(Ff)) != (F.ob(a), F.ob(b)):
                problems.append(f"F({f!r}) has wrong endpoints")
                continue
            if F.two(A.id2(f)) != B.id2(Ff):
                problems.append(f"identity 2-cell at {f!r} not preserved")
            for g in fs:
                for al in A.two_cells(f, g):
                    Fal = F.two(al)
                    if (B.src2(Fal), B.tgt2(Fal)) != (Ff, F.one(g)):
                        problems.append(f"F({al!r}) ill-typed")
                    for h in fs:
                        for be in A.two_cells(g, h):
                            if F.two(A.vcomp(be, al)) != B.vcomp(F.two(be), Fal):
                                problems.append(f"vertical composite ({be!r}, {al!r}) not preserved")
    if problems:
        return problems
    for a, b, c in itertools.product(A.objects, repeat=3):
        for g in cells[(b, c)]:
            for f in cells[(a, b)]:
                phi = F.comp2[(g, f)]
                if (B.src2(phi), B.tgt2(phi)) != (B.comp1(F.one(g), F.one(f)), F.one(A.comp1(g, f))):
                    problems.append(f"comparison at ({g!r}, {f!r}) ill-typed")
                    continue
                for g2 in cells[(b, c)]:
                    for be in A.two_cells(g, g2):
                        for f2 in cells[(a, b)]:
                            for al in A.two_cells(f, f2):
                                lhs = B.vcomp(F.two(A.hcomp(be, al)), phi)
                                rhs = B.vcomp(F.comp2[(g2, f2)], B.hcomp(F.two(be), F.two(al)))
                                if lhs != rhs:
                                    problems.append(f"comparison not natural at ({be!r}, {al!r})")
    for a in A.objects:
        u = F.unit2[a]
        if (B.src2(u), B.tgt2(u)) != (B.id1(F.ob(a)), F.one(A.id1(a))):
            problems.append(f"unit comparison at {a!r} ill-typed")
    if problems:
        return problems
    for a, b in itertools.product(A.objects, repeat=2):
        for f in cells[(a, b)]:
            Ff = F.one(f)
            lhs = B.vpath(F.two(A.lunit(f)), F.comp2[(A.id1(b), f)], B.rwhisker(F.unit2[b], Ff))
            if lhs != B.lunit(Ff):
                problems.append(f"left unit axiom fails at {f!r}")
            rhs = B.vpath(F.two(A.runit(f)), F.comp2[(f, A.id1(a))], B.lwhisker(Ff, F.unit2[a]))
            if rhs != B.runit(Ff):
                problems.append(f"right unit axiom fails at {f!r}")
            for c in A.objects:
                for g in cells[(b, c)]:
                    for d in A.objects:
                        for h in cells[(c, d)]:
                            lhs = B.vpath(F.two(A.assoc(h, g, f)), F.comp2[(A.comp1(h, g), f)],
                                          B.rwhisker(F.comp2[(h, g)], Ff))
                            rhs = B.vpath(F.comp2[(h, A.comp1(g, f))], B.lwhisker(F.one(h), F.comp2[(g, f)]),
                                          B.assoc(F.one(h), F.one(g), Ff))
                            if lhs != rhs:
                                problems.append(f"associativity axiom fails at ({h!r}, {g!r}, {f!r})")
    return problems


@dataclass(frozen=True, eq=False)
class Icon:
    """An icon ``F ⇒ G`` between lax functors agreeing on objects: ``components[f]: F f ⇒ G f``."""

    source: LaxFunctor
    target: LaxFunctor
    components: Mapping


def validate_icon(s: Icon) -> list[str]:
    F, G = s.source, s.target
    A, B = F.source, F.target
    problems = []
    if dict(F.object_map) != dict(G.object_map):
        return ["lax functors differ on objects"]
    cells = {(a, b): list(A.onecells(a, b)) for a in A.objects for b in A.objects}
    for (a, b), fs in cells.items():
        for f in fs:
            c = s.components[f]
            if (B.src2(c), B.tgt2(c)) != (F.one(f), G.one(f)):
                problems.append(f"icon component at {f!r} ill-typed")
                continue
            for f2 in fs:
                for al in A.two_cells(f, f2):
                    if B.vcomp(G.two(al), c) != B.vcomp(s.components[f2], F.two(al)):
                        problems.append(f"icon not natural at {al!r}")
    if problems:
        return problems
    for a, b, c in itertools.product(A.objects, repeat=3):
        for g in cells[(b, c)]:
            for f in cells[(a, b)]:
                lhs = B.vcomp(s.components[A.comp1(g, f)], F.comp2[(g, f)])
                rhs = B.vcomp(G.comp2[(g, f)], B.hcomp(s.components[g], s.components[f]))
                if lhs != rhs:
                    problems.append(f"icon incompatible with composition at ({g!r}, {f!r})")
    for a in A.objects:
        if B.vcomp(s.components[A.id1(a)], F.unit2[a]) != G.unit2[a]:
            problems.append(f"icon incompatible with units at {a!r}")
    return problems


@dataclass(frozen=True, eq=False)
class Comonad:
    """A comonad on a finite category: endofunctor, counit ``G ⇒ 1``, comultiplication ``G ⇒ GG``."""

    functor: Functor
    counit: Mapping
    comult: Mapping

    @property
    def category(self) -> FinCategory:
        return self.functor.source


def validate_comonad(K: Comonad) -> list[str]:
    C, G = K.category, K.functor
    from .fincat import compose_functors, identity_functor
    problems = validate_functor(G)
    if problems:
        return problems
    problems += validate_nat(NatTransformation(G, identity_functor(C), dict(K.counit)))
    problems += validate_nat(NatTransformation(G, compose_functors(G, G), dict(K.comult)))
    if problems:
        return problems
    for a in C.objects:
        Ga = G.ob(a)
        d = K.comult[a]
        if C.compose(K.counit[Ga], d) != C.id(Ga):
            problems.append(f"counit law ε_G∘δ fails at {a!r}")
        if C.compose(G(K.counit[a]), d) != C.id(Ga):
            problems.append(f"counit law Gε∘δ fails at {a!r}")
        if C.compose(K.comult[Ga], d) != C.compose(G(d), d):
            problems.append(f"coassociativity fails at {a!r}")
    return problems


def em_category(C: FinCategory, K: Comonad) -> FinCategory:
    """Coalgebras ``(c, gamma: c → Gc)`` and their morphisms, found by enumeration."""
    problems = validate_comonad(K)
    if problems:
        raise BicategoryError("invalid comonad: " + "; ".join(problems))
    G = K.functor
    obs = []
    for c in C.objects:
        for gam in C.hom(c, G.ob(c)):
            if C.compose(K.counit[c], gam) == C.id(c) and \
                    C.compose(K.comult[c], gam) == C.compose(G(gam), gam):
                obs.append((c, gam))
    morphisms = {}
    for s in obs:
        for t in obs:
            for f in C.hom(s[0], t[0]):
                if C.compose(t[1], f) == C.compose(G(f), s[1]):
                    morphisms[(s, f, t)] = (s, t)
    identity = {s: (s, C.id(s[0]), s) for s in obs}
    composition = {}
    for (t, g, u) in morphisms:
        for (s, f, t2) in morphisms:
            if t2 == t:
                composition[((t, g, u), (s, f, t))] = (s, C.compose(g, f), u)
    return FinCategory(tuple(obs), morphisms, identity, composition, f"EM({C.name})")


@dataclass(frozen=True, eq=False)
class BicatComonad:
    """A comonad in the 2-category of bicategories, lax functors and icons on ``base``.

    ``functor`` is an identity-on-objects lax functor; ``counit`` and
    ``comult`` are its icon components ``G f ⇒ f`` and ``G f ⇒ GG f``.
    """

    base: ExplicitBicategory
    functor: LaxFunctor
    counit: Mapping
    comult: Mapping

    def local(self, a, b) -> Comonad:
        B, G = self.base, self.functor
        H = B.hom(a, b)
        F = Functor(H, H, {f: G.one(f) for f in H.objects}, {m: G.two(m) for m in H.morphisms})
        return Comonad(F, {f: self.counit[f] for f in H.objects}, {f: self.comult[f] for f in H.objects})


def bicat_comonad(B: ExplicitBicategory, on_onecells: Mapping, on_twocells: Mapping, counit: Mapping,
                  comult: Mapping, comp2: Mapping, unit2: Mapping) -> BicatComonad:
    G = LaxFunctor(B, B, {a: a for a in B.objects}, dict(on_onecells), dict(on_twocells),
                   dict(comp2), dict(unit2))
    return BicatComonad(B, G, dict(counit), dict(comult))


def identity_comonad(B: ExplicitBicategory) -> BicatComonad:
    I = identity_lax_functor(B)
    ids = {f: B.id2(f) for f in I.onecell_map}
    return BicatComonad(B, I, ids, dict(ids))


def posetal_comonad(B: ExplicitBicategory, on_onecells: Mapping) -> BicatComonad:
    """The comonad on a locally posetal ``B`` given by a map on 1-cells.

    Every 2-cell is determined by its endpoints, so the remaining data is
    forced; whatever fails to exist is reported by the validator.
    """
    def cell(f, g):
        cells = list(B.two_cells(f, g))
        if len(cells) != 1:
            raise BicategoryError(f"no unique 2-cell {f!r} ⇒ {g!r}")
        return cells[0]

    G = dict(on_onecells)
    twos = {m: cell(G[B.src2(m)], G[B.tgt2(m)]) for H in B.homs.values() for m in H.morphisms}
    counit = {f: cell(G[f], f) for f in G}
    comult = {f: cell(G[f], G[G[f]]) for f in G}
    comp2 = {(g, f): cell(B.comp1(G[g], G[f]), G[h]) for (g, f), h in B.comp1_table.items()}
    unit2 = {a: cell(B.id1(a), G[B.id1(a)]) for a in B.objects}
    return bicat_comonad(B, G, twos, counit, comult, comp2, unit2)


def validate_bicat_comonad(K: BicatComonad) -> list[str]:
    B, G = K.base, K.functor
    problems = []
    if any(G.ob(a) != a for a in B.objects):
        problems.append("comonad is not identity on objects")
    problems += validate_lax_functor(G)
    if problems:
        return problems
    for a in B.objects:
        for b in B.objects:
            problems += [f"hom({a!r},{b!r}): {p}" for p in validate_comonad(K.local(a, b))]
    if problems:
        return problems
    problems += [f"counit: {p}" for p in validate_icon(Icon(G, identity_lax_functor(B), K.counit))]
    problems += [f"comultiplication: {p}" for p in validate_icon(Icon(G, compose_lax(G, G), K.comult))]
    return problems


def em_bicategory(B: ExplicitBicategory, K: BicatComonad) -> ExplicitBicategory:
    """``B^G``: homs are coalgebra categories, composed through the comparison cells of ``G``."""
    problems = validate_bicat_comonad(K)
    if problems:
        raise BicategoryError("invalid comonad: " + "; ".join(problems))
    G = K.functor
    homs = {(a, b): em_category(B.hom(a, b), K.local(a, b)) for a in B.objects for b in B.objects}

    def c1(g, f):
        return (B.comp1(g[0], f[0]), B.vcomp(G.comp2[(g[0], f[0])], B.hcomp(g[1], f[1])))

    def c2(be, al):
        return (c1(be[0], al[0]), B.hcomp(be[1], al[1]), c1(be[2], al[2]))

    unit = {a: (B.id1(a), G.unit2[a]) for a in B.objects}
    comp1, comp2, assoc, lunit, runit = {}, {}, {}, {}, {}
    for a, b, c in itertools.product(B.objects, repeat=3):
        for g in homs[(b, c)].objects:
            for f in homs[(a, b)].objects:
                comp1[(g, f)] = c1(g, f)
        for be in homs[(b, c)].morphisms:
            for al in homs[(a, b)].morphisms:
                comp2[(be, al)] = c2(be, al)
    for a, b, c, d in itertools.product(B.objects, repeat=4):
        for h in homs[(c, d)].objects:
            for g in homs[(b, c)].objects:
                for f in homs[(a, b)].objects:
                    assoc[(h, g, f)] = (c1(c1(h, g), f), B.assoc(h[0], g[0], f[0]), c1(h, c1(g, f)))
    for a, b in itertools.product(B.objects, repeat=2):
        for f in homs[(a, b)].objects:
            lunit[f] = (c1(unit[b], f), B.lunit(f[0]), f)
            runit[f] = (c1(f, unit[a]), B.runit(f[0]), f)
    for k, v in list(assoc.items()) + list(lunit.items()) + list(runit.items()):
        H = homs[(B.onecell_src(v[0][0]), B.onecell_tgt(v[0][0]))]
        if v not in H.morphisms:
            raise BicategoryError(f"coherence component at {k!r} is not a coalgebra morphism")
    return ExplicitBicategory(B.objects, homs, unit, comp1, comp2, assoc, lunit, runit,
                              name=f"{B.name}^G")


def forgetful_faithful(EM: ExplicitBicategory, B: ExplicitBicategory) -> bool:
    """Is the forgetful map from coalgebra homs to ``B``'s homs faithful?"""
    for (a, b), H in EM.homs.items():
        seen = {}
        for m in H.morphisms:
            key = (m[0], m[2], m[1])
            if m[1] not in B.hom(a, b).morphisms:
                return False
            if key in seen:
                return False
            seen[key] = m
    return True

"""Weights ``D → Cat`` and whether their conical colimit is the terminal category.

A weight is Cat-connected exactly when its colimit is terminal. The colimit
is finitely presented; deciding whether a presentation is trivial is done by
a bounded congruence closure (which can prove triviality) together with
probe categories ``X`` for which the category of cylinders ``F ⇒ ΔX``
differs from ``X`` (which refutes it).
"""
from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass, field, replace
from typing import Any, Iterable, Mapping, Sequence

from .bicat import ExplicitBicategory, validate_bicategory
from .fincat import (DISC2, IDEMMON, ONE, PAR, TWO, CategoryError, FinCategory, Functor, UnionFind,
                     build_category, chaotic_category, colimit_of_sets, connected_components, discrete,
                     free_category, functors, identity_functor, iso_check, natural_transformations,
                     set_diagram, validate_functor)
from .search import solve


class ConnectError(ValueError):
    pass


class InconsistentVerdict(AssertionError):
    """A collapse proof and a probe refutation were both found."""


# -- finite 2-categories ----------------------------------------------------------------

class FinTwoCategory(ExplicitBicategory):
    """A strict 2-category: associators and unitors are identities."""

    strict = True

    @property
    def underlying(self) -> FinCategory:
        return self._underlying

    def strictness_problems(self) -> list[str]:
        out = []
        for (h, g, f), a in self.assoc_table.items():
            if self.comp1(self.comp1(h, g), f) != self.comp1(h, self.comp1(g, f)) or a != self.id2(self.comp1(h, self.comp1(g, f))):
                out.append(f"associator at ({h!r}, {g!r}, {f!r}) is not an identity")
        for f, a in list(self.lunit_table.items()) + list(self.runit_table.items()):
            if a != self.id2(f):
                out.append(f"unitor at {f!r} is not an identity")
        return out


def strict_two_category(C: FinCategory, homs: Mapping | None = None, hcomp: Mapping | None = None,
                        name: str = "") -> FinTwoCategory:
    """A strict 2-category with underlying category ``C``.

    ``homs[(a, b)]`` is a category whose objects are ``C.hom(a, b)`` (default:
    discrete, with 2-cell ids ``('=', f)``). Horizontal composites involving
    an identity 2-cell on an identity 1-cell, or two identity 2-cells, are
    filled in; others come from ``hcomp``.
    """
    homs = dict(homs or {})
    hcomp = dict(hcomp or {})
    for a in C.objects:
        for b in C.objects:
            if (a, b) not in homs:
                cells = tuple(C.hom(a, b))
                homs[(a, b)] = FinCategory(cells, {("=", f): (f, f) for f in cells},
                                           {f: ("=", f) for f in cells},
                                           {(("=", f), ("=", f)): ("=", f) for f in cells}, f"D({a},{b})")
            elif set(homs[(a, b)].objects) != set(C.hom(a, b)):
                raise ConnectError(f"hom({a!r},{b!r}) objects differ from the 1-cells")
    unit = {a: C.id(a) for a in C.objects}
    comp1 = dict(C.composition)
    comp2 = {}
    for a, b, c in itertools.product(C.objects, repeat=3):
        Hab, Hbc = homs[(a, b)], homs[(b, c)]
        for be in Hbc.morphisms:
            g, g2 = Hbc.morphisms[be]
            for al in Hab.morphisms:
                f, f2 = Hab.morphisms[al]
                if (be, al) in hcomp:
                    comp2[(be, al)] = hcomp[(be, al)]
                elif al == Hab.id(f) and be == Hbc.id(g):
                    comp2[(be, al)] = homs[(a, c)].id(C.compose(g, f))
                elif a == b and al == Hab.id(C.id(a)):
                    comp2[(be, al)] = be
                elif b == c and be == Hbc.id(C.id(b)):
                    comp2[(be, al)] = al
                else:
                    raise ConnectError(f"missing horizontal composite of {be!r} and {al!r}")
    assoc, lunit, runit = {}, {}, {}
    for a, b, c, d in itertools.product(C.objects, repeat=4):
        for h in C.hom(c, d):
            for g in C.hom(b, c):
                for f in C.hom(a, b):
                    assoc[(h, g, f)] = homs[(a, d)].id(C.compose_path(h, g, f))
    for f, (a, b) in C.morphisms.items():
        lunit[f] = homs[(a, b)].id(f)
        runit[f] = homs[(a, b)].id(f)
    D = FinTwoCategory(C.objects, homs, unit, comp1, comp2, assoc, lunit, runit, name or C.name)
    D._underlying = C
    return D


def locally_discrete(C: FinCategory, name: str = "") -> FinTwoCategory:
    return strict_two_category(C, name=name or C.name)


def locally_chaotic(C: FinCategory, name: str = "") -> FinTwoCategory:
    """Exactly one 2-cell ``('~', f, g)`` between any parallel 1-cells."""
    homs = {}
    for a in C.objects:
        for b in C.objects:
            cells = tuple(C.hom(a, b))
            mors = {("~", f, g): (f, g) for f in cells for g in cells}
            comp = {(("~", g, h), ("~", f, g)): ("~", f, h) for f in cells for g in cells for h in cells}
            homs[(a, b)] = FinCategory(cells, mors, {f: ("~", f, f) for f in cells}, comp, f"D({a},{b})")
    hcomp = {}
    for a, b, c in itertools.product(C.objects, repeat=3):
        for (_, g, g2) in homs[(b, c)].morphisms:
            for (_, f, f2) in homs[(a, b)].morphisms:
                hcomp[(("~", g, g2), ("~", f, f2))] = ("~", C.compose(g, f), C.compose(g2, f2))
    return strict_two_category(C, homs, hcomp, name=name or C.name)


# -- weights --------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Weight:
    """A strict 2-functor ``domain → Cat``.

    ``on_1cells`` covers every 1-cell (identities included); ``on_2cells[a]``
    is a dict of components indexed by objects of ``on_objects[source]``.
    """

    domain: FinTwoCategory
    on_objects: Mapping
    on_1cells: Mapping
    on_2cells: Mapping
    name: str = ""


def _whisker_components(W: Weight, beta, alpha, D):
    """Components of ``F(beta) * F(alpha)`` for ``alpha: f ⇒ f'`` and ``beta: g ⇒ g'``."""
    f, f2 = D.src2(alpha), D.tgt2(alpha)
    g = D.src2(beta)
    a_obj = D.onecell_src(f)
    C = W.on_objects[D.onecell_tgt(g)]
    Ff2, Fg = W.on_1cells[f2], W.on_1cells[g]
    out = {}
    for x in W.on_objects[a_obj].objects:
        out[x] = C.compose(W.on_2cells[beta][Ff2.ob(x)], Fg(W.on_2cells[alpha][x]))
    return out


def validate_weight(W: Weight) -> list[str]:
    D = W.domain
    problems = list(D.strictness_problems()) if isinstance(D, FinTwoCategory) else []
    for f, Ff in W.on_1cells.items():
        a, b = D.onecell_src(f), D.onecell_tgt(f)
        if Ff.source != W.on_objects[a] or Ff.target != W.on_objects[b]:
            problems.append(f"F({f!r}) has wrong source or target")
            continue
        problems += [f"F({f!r}): {p}" for p in validate_functor(Ff)]
    if problems:
        return problems
    for a in D.objects:
        if W.on_1cells[D.id1(a)] != identity_functor(W.on_objects[a]):
            problems.append(f"identity at {a!r} not sent to an identity functor")
    for (g, f), gf in D.comp1_table.items():
        Fg, Ff = W.on_1cells[g], W.on_1cells[f]
        comp = Functor(Ff.source, Fg.target, {x: Fg.ob(Ff.ob(x)) for x in Ff.source.objects},
                       {m: Fg(Ff(m)) for m in Ff.source.morphisms})
        if comp != W.on_1cells[gf]:
            problems.append(f"composite ({g!r}, {f!r}) not preserved")
    for (a, b), H in D.homs.items():
        for al, (f, f2) in H.morphisms.items():
            comps = W.on_2cells.get(al)
            Ff, Ff2 = W.on_1cells[f], W.on_1cells[f2]
            T = W.on_objects[b]
            if comps is None:
                problems.append(f"no image for 2-cell {al!r}")
                continue
            for x in W.on_objects[a].objects:
                if T.morphisms.get(comps.get(x)) != (Ff.ob(x), Ff2.ob(x)):
                    problems.append(f"F({al!r}) component at {x!r} ill-typed")
            if problems:
                continue
            for m, (x, y) in W.on_objects[a].morphisms.items():
                if T.compose(comps[y], Ff(m)) != T.compose(Ff2(m), comps[x]):
                    problems.append(f"F({al!r}) is not natural at {m!r}")
        if problems:
            continue
        for f in H.objects:
            if any(W.on_2cells[H.id(f)][x] != W.on_objects[b].id(W.on_1cells[f].ob(x)) for x in W.on_objects[a].objects):
                problems.append(f"identity 2-cell on {f!r} not preserved")
        for (be, al), ba in H.composition.items():
            T = W.on_objects[b]
            if any(W.on_2cells[ba][x] != T.compose(W.on_2cells[be][x], W.on_2cells[al][x])
                   for x in W.on_objects[a].objects):
                problems.append(f"vertical composite ({be!r}, {al!r}) not preserved")
    if problems:
        return problems
    for (be, al), c in D.comp2_table.items():
        if W.on_2cells[c] != _whisker_components(W, be, al, D):
            problems.append(f"horizontal composite ({be!r}, {al!r}) not preserved")
    return problems


def _functor_from(C: FinCategory, T: FinCategory, om: Mapping, gen: Mapping | None = None) -> Functor:
    """The functor with object map ``om``; morphisms of ``C`` found from ``gen`` or forced by thinness."""
    mm = {}
    missing = [a for a in C.objects if om.get(a) not in T.objects]
    if missing:
        raise ConnectError(f"object map sends {missing[0]!r} nowhere in {T.name or 'the target'}")
    for m, (a, b) in C.morphisms.items():
        if C.is_identity(m):
            mm[m] = T.id(om[a])
        elif gen and m in gen:
            mm[m] = gen[m]
        else:
            cands = T.hom(om[a], om[b])
            if len(cands) != 1:
                raise ConnectError(f"cannot infer the image of {m!r}")
            mm[m] = cands[0]
    return Functor(C, T, dict(om), mm)


def weight(D: FinTwoCategory, on_objects: Mapping, on_1cells: Mapping, on_2cells: Mapping | None = None,
           name: str = "") -> Weight:
    """Assemble and validate a weight.

    ``on_1cells`` needs only non-identity 1-cells, each as a Functor or as an
    object map (thin targets); identity 2-cells and missing 2-cell images of
    identities are filled in.
    """
    ones = {}
    for a in D.objects:
        ones[D.id1(a)] = identity_functor(on_objects[a])
    for f, v in on_1cells.items():
        a, b = D.onecell_src(f), D.onecell_tgt(f)
        ones[f] = v if isinstance(v, Functor) else _functor_from(on_objects[a], on_objects[b], v)
    twos = dict(on_2cells or {})
    for (a, b), H in D.homs.items():
        for f in H.objects:
            i = H.id(f)
            if i not in twos:
                twos[i] = {x: on_objects[b].id(ones[f].ob(x)) for x in on_objects[a].objects}
    W = Weight(D, dict(on_objects), ones, twos, name)
    problems = validate_weight(W)
    if problems:
        raise ConnectError("; ".join(problems))
    return W


def delta1(D: FinTwoCategory) -> Weight:
    twos = {al: {"*": ONE.id("*")} for H in D.homs.values() for al in H.morphisms}
    return weight(D, {a: ONE for a in D.objects},
                  {f: {"*": "*"} for f in D.underlying.morphisms if not D.underlying.is_identity(f)},
                  twos, name="Δ1")


def discrete_weight(G: Functor) -> Weight:
    """A set-valued diagram seen as a weight valued in discrete categories."""
    shape, T = G.source, G.target
    D = locally_discrete(shape)
    obs = {c: discrete(T.elements[G.ob(c)], name=f"G{c}") for c in shape.objects}
    ones = {}
    for m, (a, b) in shape.morphisms.items():
        if shape.is_identity(m):
            continue
        fn = T.functions[G(m)]
        ones[m] = _functor_from(obs[a], obs[b], {x: fn[x] for x in obs[a].objects})
    return weight(D, obs, ones, name="discrete")


# -- the standard weights -----------------------------------------------------------------

SPAN_FREE = PAR  # two parallel arrows u, v: 0 → 1
COSPAN = build_category([0, 1, 2], {"a": (0, 2), "b": (1, 2)}, name="Cospan")


def equalizer_weight() -> Weight:
    return replace(delta1(locally_discrete(PAR)), name="equalizer")


def pullback_weight() -> Weight:
    return replace(delta1(locally_discrete(COSPAN)), name="pullback")


def power_weight(X: FinCategory) -> Weight:
    D = locally_discrete(ONE)
    return weight(D, {"*": X}, {}, name=f"power({X.name})")


def inserter_weight() -> Weight:
    D = locally_discrete(PAR)
    return weight(D, {0: ONE, 1: TWO}, {"u": {"*": 0}, "v": {"*": 1}}, name="inserter")


def comma_weight() -> Weight:
    D = locally_discrete(COSPAN)
    return weight(D, {0: ONE, 1: ONE, 2: TWO}, {"a": {"*": 0}, "b": {"*": 1}}, name="comma")


def equifier_weight() -> Weight:
    H = build_category(["u", "v"], {"p": ("u", "v"), "q": ("u", "v")}, name="D(0,1)",
                       identity_names={"u": ("=", "u"), "v": ("=", "v")})
    D = strict_two_category(PAR, {(0, 1): H}, name="equifier-shape")
    arrow = {"*": "f"}
    return weight(D, {0: ONE, 1: TWO}, {"u": {"*": 0}, "v": {"*": 1}}, {"p": arrow, "q": arrow}, name="equifier")


def standard_weights() -> dict:
    """Named weight constructors; ``power`` takes the category to power by."""
    return {"equalizer": equalizer_weight, "pullback": pullback_weight, "power": power_weight,
            "inserter": inserter_weight, "comma": comma_weight, "equifier": equifier_weight}


# -- colimit presentation -------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class ColimitPresentation:
    """Generators and relations for the conical colimit of a weight.

    Generators are ``(d, m)`` for morphisms ``m`` of ``F(d)``; a word is
    ``(cls, gens)`` where ``cls`` is its source object class and ``gens`` are
    applied left to right. Each relation is ``(lhs, rhs, label)`` on words.
    """

    weight: Weight
    classes: tuple
    class_of: Mapping
    generators: tuple
    gen_src: Mapping
    gen_tgt: Mapping
    relations: tuple


def colimit_presentation(W: Weight) -> ColimitPresentation:
    D = W.domain
    uf = UnionFind()
    for d in D.objects:
        for x in W.on_objects[d].objects:
            uf.add((d, x))
    for f, Ff in W.on_1cells.items():
        d = D.onecell_src(f)
        d2 = D.onecell_tgt(f)
        for x in W.on_objects[d].objects:
            uf.union((d, x), (d2, Ff.ob(x)))
    order = {k: i for i, k in enumerate(uf.parent)}
    raw = sorted((sorted(c, key=order.__getitem__) for c in uf.classes()), key=lambda c: order[c[0]])
    classes = tuple(tuple(c) for c in raw)
    class_of = {k: i for i, c in enumerate(classes) for k in c}
    gens, gsrc, gtgt = [], {}, {}
    for d in D.objects:
        C = W.on_objects[d]
        for m, (x, y) in C.morphisms.items():
            g = (d, m)
            gens.append(g)
            gsrc[g], gtgt[g] = class_of[(d, x)], class_of[(d, y)]
    rels = []
    for d in D.objects:
        C = W.on_objects[d]
        for x in C.objects:
            rels.append((((class_of[(d, x)]), ((d, C.id(x)),)), (class_of[(d, x)], ()), "identity"))
        for (g, f), gf in C.composition.items():
            if C.is_identity(g) or C.is_identity(f):
                continue
            c = gsrc[(d, f)]
            rels.append(((c, ((d, f), (d, g))), (c, ((d, gf),)), "composite"))
    for f, Ff in W.on_1cells.items():
        if D.onecell_src(f) == D.onecell_tgt(f) and f == D.id1(D.onecell_src(f)):
            continue
        d, d2 = D.onecell_src(f), D.onecell_tgt(f)
        for m in W.on_objects[d].morphisms:
            c = gsrc[(d, m)]
            rels.append(((c, ((d, m),)), (c, ((d2, Ff(m)),)), f"leg {f!r}"))
    for (a, b), H in D.homs.items():
        for al in H.morphisms:
            if H.is_identity(al):
                continue
            for x, comp in W.on_2cells[al].items():
                c = gsrc[(b, comp)]
                rels.append(((c, ((b, comp),)), (c, ()), f"2-cell {al!r}"))
    return ColimitPresentation(W, classes, class_of, tuple(gens), gsrc, gtgt, tuple(rels))


@dataclass(frozen=True)
class Verdict:
    """``kind`` is ``yes``, ``no`` or ``unknown``; evidence rides along."""

    kind: str
    witness: Any = None
    proof: Any = None
    bound: int | None = None

    def __bool__(self):
        return self.kind == "yes"

    @property
    def decisive(self) -> bool:
        return self.kind != "unknown"


def _words(P: ColimitPresentation, k: int) -> list:
    out_from: dict = {}
    for g in P.generators:
        out_from.setdefault(P.gen_src[g], []).append(g)
    words = [(c, ()) for c in range(len(P.classes))]
    frontier = [(P.gen_src[g], (g,)) for g in P.generators]
    for _ in range(k):
        words.extend(frontier)
        nxt = []
        for c, w in frontier:
            for g in out_from.get(P.gen_tgt[w[-1]], []):
                nxt.append((c, w + (g,)))
        frontier = nxt
    return words


def _closure(P: ColimitPresentation, depth: int):
    index: dict = {}
    for i, (l, r, _) in enumerate(P.relations):
        index.setdefault(l[1], []).append((r[1], i))
        index.setdefault(r[1], []).append((l[1], i))
    words = _words(P, depth)
    present = set(words)
    uf = UnionFind(words)
    edges: dict = {}
    for c, w in words:
        n = len(w)
        for i in range(n):
            for j in range(i + 1, n + 1):
                for repl, rid in index.get(w[i:j], ()):
                    v = (c, w[:i] + repl + w[j:])
                    if v in present:
                        uf.union((c, w), v)
                        edges.setdefault((c, w), []).append((v, rid, i, j))
                        edges.setdefault(v, []).append(((c, w), rid, i, i + len(repl)))
    return uf, edges


def _proof(edges, start, goal):
    prev = {start: None}
    q = deque([start])
    while q:
        u = q.popleft()
        if u == goal:
            break
        for v, rid, i, j in edges.get(u, ()):
            if v not in prev:
                prev[v] = (u, rid, i, j)
                q.append(v)
    if goal not in prev:
        return None
    steps = []
    v = goal
    while prev[v] is not None:
        u, rid, i, j = prev[v]
        steps.append((u, v, rid))
        v = u
    return list(reversed(steps))


def decide_terminal(P: ColimitPresentation, depth: int = 4) -> Verdict:
    """Bounded semi-decision of whether the presented category is terminal.

    Yes carries, per generator, a chain of single relation applications
    rewriting it to the empty word, using words of length at most the
    returned bound (the least depth that works, up to ``depth``).
    """
    if len(P.classes) != 1:
        return Verdict("no", witness={"object_classes": len(P.classes)})
    for k in range(1, depth + 1):
        uf, edges = _closure(P, k)
        empty = (0, ())
        if all(uf.find((P.gen_src[g], (g,))) == uf.find(empty) for g in P.generators):
            proof = {g: _proof(edges, (P.gen_src[g], (g,)), empty) for g in P.generators}
            return Verdict("yes", proof=proof, bound=k)
    return Verdict("unknown", bound=depth)


def check_collapse_proof(P: ColimitPresentation, proof: Mapping, depth: int) -> bool:
    """Re-verify a collapse proof step by step, without the closure machinery."""
    rels = P.relations
    for g in P.generators:
        steps = proof.get(g)
        if steps is None:
            return False
        cur = (P.gen_src[g], (g,))
        for u, v, rid in steps:
            if u != cur or len(u[1]) > depth or len(v[1]) > depth or u[0] != v[0]:
                return False
            l, r, _ = rels[rid]
            ok = False
            for a, b in ((l[1], r[1]), (r[1], l[1])):
                for i in range(len(u[1]) - len(a) + 1):
                    if u[1][i:i + len(a)] == a and u[1][:i] + b + u[1][i + len(a):] == v[1]:
                        ok = True
            if not ok:
                return False
            cur = v
        if cur != (0, ()):
            return False
    return True


# -- cylinders ----------------------------------------------------------------------------

def _functor_key(G: Functor) -> tuple:
    C = G.source
    return (tuple(G.ob(a) for a in C.objects), tuple(G(m) for m in C.morphisms))


def cylinder_category(W: Weight, X: FinCategory) -> FinCategory:
    """Strict 2-natural transformations ``W ⇒ ΔX`` and modifications between them.

    Objects are tuples of per-object functor keys; morphisms are
    ``(source, components, target)``.
    """
    D = W.domain
    obs = list(D.objects)
    per = {d: list(functors(W.on_objects[d], X)) for d in obs}
    ones = [(f, Ff) for f, Ff in W.on_1cells.items() if not f == D.id1(D.onecell_src(f))]

    def cone_ok(a, f, Ff):
        s = a[D.onecell_src(f)]
        t = a[D.onecell_tgt(f)]
        C = W.on_objects[D.onecell_src(f)]
        return (all(t.ob(Ff.ob(x)) == s.ob(x) for x in C.objects)
                and all(t(Ff(m)) == s(m) for m in C.morphisms))

    def two_ok(a, al, b):
        t = a[b]
        return all(X.is_identity(t(c)) for c in W.on_2cells[al].values())

    cons = []
    for f, Ff in ones:
        cons.append(([D.onecell_src(f), D.onecell_tgt(f)], lambda a, f=f, Ff=Ff: cone_ok(a, f, Ff)))
    for (a_, b_), H in D.homs.items():
        for al in H.morphisms:
            if not H.is_identity(al):
                cons.append(([b_], lambda a, al=al, b_=b_: two_ok(a, al, b_)))
    cones = list(solve(obs, lambda d, a: per[d], cons))
    keys = [tuple(_functor_key(s[d]) for d in obs) for s in cones]

    morphisms, comps = {}, {}
    for si, s in enumerate(cones):
        for ti, t in enumerate(cones):
            nat = {d: [tuple(n.components[x] for x in W.on_objects[d].objects)
                       for n in natural_transformations(s[d], t[d])] for d in obs}

            def mod_ok(a, f, Ff):
                d, d2 = D.onecell_src(f), D.onecell_tgt(f)
                C, C2 = W.on_objects[d], W.on_objects[d2]
                pos2 = {x: i for i, x in enumerate(C2.objects)}
                return all(a[d2][pos2[Ff.ob(x)]] == a[d][i] for i, x in enumerate(C.objects))

            mcons = [([D.onecell_src(f), D.onecell_tgt(f)], lambda a, f=f, Ff=Ff: mod_ok(a, f, Ff)) for f, Ff in ones]
            for m in solve(obs, lambda d, a: nat[d], mcons):
                mid = (keys[si], tuple(m[d] for d in obs), keys[ti])
                morphisms[mid] = (keys[si], keys[ti])
                comps[mid] = m
    identity = {}
    for si, s in enumerate(cones):
        ident = tuple(tuple(X.id(s[d].ob(x)) for x in W.on_objects[d].objects) for d in obs)
        identity[keys[si]] = (keys[si], ident, keys[si])
    composition = {}
    for g, (b, c) in morphisms.items():
        for f, (a, b2) in morphisms.items():
            if b2 != b:
                continue
            comp = tuple(tuple(X.compose(y, x) for x, y in zip(f[1][i], g[1][i])) for i in range(len(obs)))
            composition[(g, f)] = (a, comp, c)
    return FinCategory(tuple(keys), morphisms, identity, composition, f"Cyl({W.name},{X.name})")


DEFAULT_PROBES = (ONE, DISC2, TWO, IDEMMON, PAR)


def probe_refutes(W: Weight, X: FinCategory) -> bool:
    return iso_check(cylinder_category(W, X), X) is None


def is_cat_connected(W: Weight, probes: Sequence[FinCategory] = DEFAULT_PROBES, depth: int = 4) -> Verdict:
    """Combine the bounded closure with probe refutations.

    Refutation and proof together would be a bug, so that raises.
    """
    P = colimit_presentation(W)
    closure = decide_terminal(P, depth)
    witness = None
    for X in probes:
        if probe_refutes(W, X):
            witness = X
            break
    if closure.kind == "yes":
        if witness is not None:
            raise InconsistentVerdict(f"collapse proof and refutation by {witness.name} for {W.name}")
        return closure
    if witness is not None:
        return Verdict("no", witness={"probe": witness.name, **(closure.witness or {})}, bound=depth)
    if closure.kind == "no":
        return closure
    return Verdict("unknown", bound=depth)


def is_connected_setvalued(G: Functor) -> bool:
    return len(colimit_of_sets(G)) == 1


def delta1_connected(D: FinTwoCategory) -> bool:
    return len(connected_components(D.underlying)) == 1


# -- random instances -------------------------------------------------------------------------

def random_dag_category(rng: random.Random, max_objects: int = 4, max_edges: int = 4) -> FinCategory:
    n = rng.randint(1, max_objects)
    edges = {}
    for k in range(rng.randint(0, max_edges)):
        if n < 2:
            break
        a, b = sorted(rng.sample(range(n), 2))
        edges[f"e{k}"] = (a, b)
    return free_category(range(n), edges, name="dag")


def random_set_diagram(rng: random.Random, max_objects: int = 4, max_edges: int = 4, max_size: int = 3) -> Functor:
    C = random_dag_category(rng, max_objects, max_edges)
    sizes = {c: rng.randint(0, max_size) for c in C.objects}
    # a map out of a nonempty set needs a nonempty target
    for m, (a, b) in sorted(C.morphisms.items(), key=lambda kv: repr(kv[0])):
        if sizes[a] and not sizes[b]:
            sizes[b] = 1
    changed = True
    while changed:
        changed = False
        for m, (a, b) in C.morphisms.items():
            if sizes[a] and not sizes[b]:
                sizes[b] = 1
                changed = True
    sets = {c: tuple(range(sizes[c])) for c in C.objects}
    maps = {}
    order = sorted(C.objects)
    # generators only; composites follow from the free structure
    gens = [m for m in C.morphisms if not C.is_identity(m) and len(m) == 1]
    for m in gens:
        a, b = C.morphisms[m]
        maps[m] = {x: rng.choice(sets[b]) for x in sets[a]}
    for m in sorted((m for m in C.morphisms if not C.is_identity(m) and len(m) > 1), key=len):
        a, b = C.morphisms[m]
        first, rest = m[:1], m[1:]
        maps[m] = {x: maps[rest][maps[first][x]] for x in sets[a]}
    return set_diagram(C, sets, maps)


def random_two_category(rng: random.Random, max_objects: int = 4, max_edges: int = 4) -> FinTwoCategory:
    C = random_dag_category(rng, max_objects, max_edges)
    return locally_chaotic(C) if rng.random() < 0.5 else locally_discrete(C)

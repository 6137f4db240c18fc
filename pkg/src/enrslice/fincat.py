"""Finite categories given by explicit composition tables.

Everything here is exhaustive: limits, isomorphisms and functors are found
by enumeration, so the sizes involved must stay small.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Hashable, Iterable, Iterator, Mapping, Sequence

Ob = Hashable
Mor = Hashable


class CategoryError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class FinCategory:
    """A finite category.

    ``morphisms`` maps each morphism id to ``(source, target)``; ``composition``
    maps ``(g, f)`` to ``g∘f`` (``f`` applied first) for every composable pair.
    """

    objects: tuple
    morphisms: Mapping[Mor, tuple]
    identity: Mapping[Ob, Mor]
    composition: Mapping[tuple, Mor]
    name: str = ""

    def __eq__(self, other):
        if not isinstance(other, FinCategory):
            return NotImplemented
        return (self.objects == other.objects
                and dict(self.morphisms) == dict(other.morphisms)
                and dict(self.identity) == dict(other.identity)
                and dict(self.composition) == dict(other.composition))

    def __hash__(self):
        return hash((self.objects, len(self.morphisms)))

    def __repr__(self):
        label = self.name or "FinCategory"
        return f"<{label}: {len(self.objects)} objects, {len(self.morphisms)} morphisms>"

    def src(self, m: Mor) -> Ob:
        return self.morphisms[m][0]

    def tgt(self, m: Mor) -> Ob:
        return self.morphisms[m][1]

    def id(self, a: Ob) -> Mor:
        return self.identity[a]

    def compose(self, g: Mor, f: Mor) -> Mor:
        try:
            return self.composition[(g, f)]
        except KeyError:
            raise CategoryError(f"{g!r} and {f!r} are not composable") from None

    def compose_path(self, *ms: Mor) -> Mor:
        """``compose_path(h, g, f) == h∘g∘f``."""
        out = ms[-1]
        for m in reversed(ms[:-1]):
            out = self.compose(m, out)
        return out

    @cached_property
    def _homs(self) -> dict:
        homs: dict = {(a, b): [] for a in self.objects for b in self.objects}
        for m, (a, b) in self.morphisms.items():
            homs[(a, b)].append(m)
        return {k: tuple(v) for k, v in homs.items()}

    def hom(self, a: Ob, b: Ob) -> tuple:
        return self._homs[(a, b)]

    @cached_property
    def _mor_index(self) -> dict:
        return {m: i for i, m in enumerate(self.morphisms)}

    @cached_property
    def _ob_index(self) -> dict:
        return {a: i for i, a in enumerate(self.objects)}

    def is_identity(self, m: Mor) -> bool:
        return self.identity.get(self.src(m)) == m

    def is_iso(self, m: Mor) -> bool:
        return self.inverse(m) is not None

    def inverse(self, m: Mor):
        a, b = self.morphisms[m]
        for n in self.hom(b, a):
            if self.compose(n, m) == self.identity[a] and self.compose(m, n) == self.identity[b]:
                return n
        return None

    def renamed(self, name: str) -> "FinCategory":
        return FinCategory(self.objects, self.morphisms, self.identity, self.composition, name)


def build_category(objects: Iterable, arrows: Mapping | None = None,
                   composites: Mapping | None = None, name: str = "",
                   identity_names: Mapping | None = None) -> FinCategory:
    """Build a category from non-identity arrows and their non-trivial composites.

    Identities (named ``id_<object>`` unless given) and composition with them
    are filled in; every other composable pair must appear in ``composites``.
    """
    objects = tuple(objects)
    arrows = dict(arrows or {})
    composites = dict(composites or {})
    identity = {}
    morphisms: dict = {}
    for a in objects:
        i = (identity_names or {}).get(a, f"id_{a}")
        identity[a] = i
        morphisms[i] = (a, a)
    for m, st in arrows.items():
        if m in morphisms:
            raise CategoryError(f"duplicate morphism id {m!r}")
        morphisms[m] = tuple(st)
    composition = {}
    for g, (b, c) in morphisms.items():
        for f, (a, b2) in morphisms.items():
            if b2 != b:
                continue
            if g == identity[b]:
                composition[(g, f)] = f
            elif f == identity[a]:
                composition[(g, f)] = g
            elif (g, f) in composites:
                composition[(g, f)] = composites[(g, f)]
            else:
                raise CategoryError(f"missing composite for ({g!r}, {f!r})")
    return FinCategory(objects, morphisms, identity, composition, name)


def discrete(objects: Iterable, name: str = "") -> FinCategory:
    return build_category(objects, name=name)


def chaotic_category(objects: Iterable, name: str = "") -> FinCategory:
    objects = tuple(objects)
    arrows = {(a, b): (a, b) for a in objects for b in objects if a != b}
    ident = {a: (a, a) for a in objects}
    comps = {}
    for (b, c) in list(arrows) + [(a, a) for a in objects]:
        for (a, b2) in list(arrows) + [(x, x) for x in objects]:
            if b2 == b and (b, c) != (b, b) and (a, b) != (a, a):
                comps[((b, c), (a, b))] = (a, c)
    return build_category(objects, arrows, comps, name, identity_names=ident)


def poset_category(elements: Sequence, leq, name: str = "") -> FinCategory:
    """Thin category of a finite preorder; the morphism ``a ≤ b`` is ``(a, b)``."""
    elements = tuple(elements)
    morphisms = {(a, b): (a, b) for a in elements for b in elements if leq(a, b)}
    identity = {a: (a, a) for a in elements}
    composition = {}
    for (b, c) in morphisms:
        for (a, b2) in morphisms:
            if b2 == b:
                composition[((b, c), (a, b))] = (a, c)
    return FinCategory(elements, morphisms, identity, composition, name)


def monoid_category(elements: Sequence, mult, unit, obj: Ob = "*", name: str = "") -> FinCategory:
    elements = tuple(elements)
    morphisms = {m: (obj, obj) for m in elements}
    composition = {(g, f): mult(g, f) for g in elements for f in elements}
    return FinCategory((obj,), morphisms, {obj: unit}, composition, name)


# -- validation ---------------------------------------------------------------

def validate_category(C: FinCategory) -> list[str]:
    """Every violated category axiom, as human-readable lines; empty if valid."""
    problems = []
    obs = set(C.objects)
    if len(obs) != len(C.objects):
        problems.append("duplicate objects")
    for m, (a, b) in C.morphisms.items():
        if a not in obs or b not in obs:
            problems.append(f"morphism {m!r} has unknown endpoint")
    for a in C.objects:
        i = C.identity.get(a)
        if i is None or C.morphisms.get(i) != (a, a):
            problems.append(f"identity at {a!r} missing or ill-typed")
    if problems:
        return problems
    into: dict = {a: [] for a in C.objects}
    for m, (a, b) in C.morphisms.items():
        into[b].append(m)
    for g, (b, c) in C.morphisms.items():
        for f in into[b]:
            a = C.src(f)
            gf = C.composition.get((g, f))
            if gf is None:
                problems.append(f"composite {g!r}∘{f!r} undefined")
            elif C.morphisms.get(gf) != (a, c):
                problems.append(f"composite {g!r}∘{f!r} = {gf!r} has wrong endpoints")
    if problems:
        return problems
    for f, (a, b) in C.morphisms.items():
        if C.compose(C.identity[b], f) != f:
            problems.append(f"left identity law fails: id_{b}∘{f!r} != {f!r}")
        if C.compose(f, C.identity[a]) != f:
            problems.append(f"right identity law fails: {f!r}∘id_{a} != {f!r}")
    for h, (c, d) in C.morphisms.items():
        for g in into[c]:
            hg = C.compose(h, g)
            for f in into[C.src(g)]:
                if C.compose(hg, f) != C.compose(h, C.compose(g, f)):
                    problems.append(f"associativity fails on ({h!r}, {g!r}, {f!r})")
    return problems


# -- functors and natural transformations ---------------------------------------

@dataclass(frozen=True, eq=False)
class Functor:
    source: FinCategory
    target: FinCategory
    object_map: Mapping
    morphism_map: Mapping

    def __eq__(self, other):
        if not isinstance(other, Functor):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and dict(self.object_map) == dict(other.object_map)
                and dict(self.morphism_map) == dict(other.morphism_map))

    def __hash__(self):
        return hash(tuple(sorted(map(repr, self.object_map.items()))))

    def ob(self, a):
        return self.object_map[a]

    def __call__(self, m):
        return self.morphism_map[m]

    def then(self, other: "Functor") -> "Functor":
        return compose_functors(other, self)


def identity_functor(C: FinCategory) -> Functor:
    return Functor(C, C, {a: a for a in C.objects}, {m: m for m in C.morphisms})


def compose_functors(G: Functor, F: Functor) -> Functor:
    return Functor(F.source, G.target,
                   {a: G.ob(F.ob(a)) for a in F.source.objects},
                   {m: G(F(m)) for m in F.source.morphisms})


def validate_functor(F: Functor) -> list[str]:
    C, D = F.source, F.target
    problems = []
    for a in C.objects:
        if F.object_map.get(a) not in D._ob_index:
            problems.append(f"object {a!r} not mapped into target")
    for m in C.morphisms:
        if F.morphism_map.get(m) not in D.morphisms:
            problems.append(f"morphism {m!r} not mapped into target")
    if problems:
        return problems
    for m, (a, b) in C.morphisms.items():
        if D.morphisms[F(m)] != (F.ob(a), F.ob(b)):
            problems.append(f"F({m!r}) has wrong endpoints")
    for a in C.objects:
        if F(C.id(a)) != D.id(F.ob(a)):
            problems.append(f"identity at {a!r} not preserved")
    for (g, f), gf in C.composition.items():
        if F(gf) != D.compose(F(g), F(f)):
            problems.append(f"composite ({g!r}, {f!r}) not preserved")
    return problems


@dataclass(frozen=True, eq=False)
class NatTransformation:
    source: Functor
    target: Functor
    components: Mapping

    def __eq__(self, other):
        if not isinstance(other, NatTransformation):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and dict(self.components) == dict(other.components))

    def __hash__(self):
        return hash(tuple(map(repr, self.components.items())))

    def __getitem__(self, a):
        return self.components[a]


def validate_nat(alpha: NatTransformation) -> list[str]:
    F, G = alpha.source, alpha.target
    C, D = F.source, F.target
    problems = []
    for a in C.objects:
        c = alpha.components.get(a)
        if c not in D.morphisms or D.morphisms[c] != (F.ob(a), G.ob(a)):
            problems.append(f"component at {a!r} ill-typed")
    if problems:
        return problems
    for m, (a, b) in C.morphisms.items():
        if D.compose(alpha[b], F(m)) != D.compose(G(m), alpha[a]):
            problems.append(f"naturality square for {m!r} does not commute")
    return problems


def functors(C: FinCategory, D: FinCategory, object_map: Mapping | None = None) -> Iterator[Functor]:
    """All functors ``C → D`` (optionally with a fixed object map), by backtracking."""
    mors = list(C.morphisms)
    non_id = [m for m in mors if not C.is_identity(m)]
    pos = {m: i for i, m in enumerate(non_id)}
    # composites involving only non-identity morphisms, checked once all three are assigned
    checks: list[list] = [[] for _ in non_id]
    for (g, f), gf in C.composition.items():
        if g in pos and f in pos:
            last = max(pos[g], pos[f], pos.get(gf, -1))
            checks[last].append((g, f, gf))

    def object_maps():
        if object_map is not None:
            yield dict(object_map)
            return
        for images in itertools.product(D.objects, repeat=len(C.objects)):
            yield dict(zip(C.objects, images))

    for om in object_maps():
        mm: dict = {C.id(a): D.id(om[a]) for a in C.objects}

        def rec(i):
            if i == len(non_id):
                yield Functor(C, D, dict(om), dict(mm))
                return
            m = non_id[i]
            a, b = C.morphisms[m]
            for n in D.hom(om[a], om[b]):
                mm[m] = n
                ok = True
                for g, f, gf in checks[i]:
                    if mm[gf] != D.compose(mm[g], mm[f]):
                        ok = False
                        break
                if ok:
                    yield from rec(i + 1)
            mm.pop(m, None)

        yield from rec(0)


def natural_transformations(F: Functor, G: Functor) -> Iterator[NatTransformation]:
    C, D = F.source, F.target
    choices = [D.hom(F.ob(a), G.ob(a)) for a in C.objects]
    for comps in itertools.product(*choices):
        alpha = NatTransformation(F, G, dict(zip(C.objects, comps)))
        if all(D.compose(alpha[b], F(m)) == D.compose(G(m), alpha[a])
               for m, (a, b) in C.morphisms.items()):
            yield alpha


# -- constructions --------------------------------------------------------------

def slice_category(C: FinCategory, x: Ob) -> FinCategory:
    """``C/x``: objects are morphisms into ``x``; a morphism ``m → m'`` is ``(m, k, m')`` with ``m'∘k = m``."""
    if x not in C._ob_index:
        raise CategoryError(f"unknown object {x!r}")
    obs = tuple(m for m in C.morphisms if C.tgt(m) == x)
    morphisms = {}
    identity = {}
    for m in obs:
        for m2 in obs:
            for k in C.hom(C.src(m), C.src(m2)):
                if C.compose(m2, k) == m:
                    morphisms[(m, k, m2)] = (m, m2)
        identity[m] = (m, C.id(C.src(m)), m)
    composition = {}
    for (m2, k2, m3) in morphisms:
        for (m1, k1, m2b) in morphisms:
            if m2b == m2:
                composition[((m2, k2, m3), (m1, k1, m2))] = (m1, C.compose(k2, k1), m3)
    return FinCategory(obs, morphisms, identity, composition, f"{C.name or 'C'}/{x}")


def product_category(C: FinCategory, D: FinCategory) -> FinCategory:
    obs = tuple(itertools.product(C.objects, D.objects))
    morphisms = {(f, g): ((C.src(f), D.src(g)), (C.tgt(f), D.tgt(g)))
                 for f in C.morphisms for g in D.morphisms}
    identity = {(a, b): (C.id(a), D.id(b)) for a, b in obs}
    composition = {((f2, g2), (f1, g1)): (C.compose(f2, f1), D.compose(g2, g1))
                   for (f2, f1) in C.composition for (g2, g1) in D.composition}
    return FinCategory(obs, morphisms, identity, composition,
                       f"{C.name or 'C'}×{D.name or 'D'}")


def pullback_of_categories(F: Functor, G: Functor) -> FinCategory:
    if F.target != G.target:
        raise CategoryError("functors must share a target")
    A, B = F.source, G.source
    obs = tuple((a, b) for a in A.objects for b in B.objects if F.ob(a) == G.ob(b))
    morphisms = {(f, g): ((A.src(f), B.src(g)), (A.tgt(f), B.tgt(g)))
                 for f in A.morphisms for g in B.morphisms if F(f) == G(g)}
    identity = {(a, b): (A.id(a), B.id(b)) for a, b in obs}
    composition = {}
    for (f2, g2), (s2, _) in morphisms.items():
        for (f1, g1), (_, t1) in morphisms.items():
            if t1 == s2:
                composition[((f2, g2), (f1, g1))] = (A.compose(f2, f1), B.compose(g2, g1))
    return FinCategory(obs, morphisms, identity, composition, "pullback")


def comma_category(S: Functor, T: Functor) -> FinCategory:
    """``S↓T``: objects ``(a, m, b)`` with ``m: S a → T b``."""
    A, B, C = S.source, T.source, S.target
    obs = tuple((a, m, b) for a in A.objects for b in B.objects for m in C.hom(S.ob(a), T.ob(b)))
    morphisms = {}
    for (a, m, b) in obs:
        for (a2, m2, b2) in obs:
            for f in A.hom(a, a2):
                for g in B.hom(b, b2):
                    if C.compose(m2, S(f)) == C.compose(T(g), m):
                        morphisms[((a, m, b), f, g, (a2, m2, b2))] = ((a, m, b), (a2, m2, b2))
    identity = {o: (o, A.id(o[0]), B.id(o[2]), o) for o in obs}
    composition = {}
    for k2, (s2, t2) in morphisms.items():
        for k1, (s1, t1) in morphisms.items():
            if t1 == s2:
                composition[(k2, k1)] = (s1, A.compose(k2[1], k1[1]), B.compose(k2[2], k1[2]), t2)
    return FinCategory(obs, morphisms, identity, composition, "comma")


def arrow_category(C: FinCategory) -> FinCategory:
    I = identity_functor(C)
    A = comma_category(I, I)
    return A.renamed(f"Arr({C.name or 'C'})")


def codomain_functor(C: FinCategory) -> Functor:
    A = arrow_category(C)
    return Functor(A, C, {o: o[2] for o in A.objects}, {k: k[2] for k in A.morphisms})


def full_subcategory(C: FinCategory, objects: Iterable, name: str = "") -> FinCategory:
    keep = tuple(a for a in C.objects if a in set(objects))
    ks = set(keep)
    morphisms = {m: st for m, st in C.morphisms.items() if st[0] in ks and st[1] in ks}
    composition = {k: v for k, v in C.composition.items() if k[0] in morphisms and k[1] in morphisms}
    return FinCategory(keep, morphisms, {a: C.id(a) for a in keep}, composition, name)


def subcategory(C: FinCategory, objects: Iterable, morphisms: Iterable, name: str = "") -> FinCategory:
    """The subcategory on the given objects generated by the given morphisms."""
    keep = [a for a in C.objects if a in set(objects)]
    ks = set(keep)
    mors = {C.id(a) for a in keep}
    for m in morphisms:
        if C.src(m) in ks and C.tgt(m) in ks:
            mors.add(m)
    changed = True
    while changed:
        changed = False
        for g in list(mors):
            for f in list(mors):
                if C.src(g) == C.tgt(f):
                    gf = C.compose(g, f)
                    if gf not in mors:
                        mors.add(gf)
                        changed = True
    morphisms_d = {m: st for m, st in C.morphisms.items() if m in mors}
    composition = {k: v for k, v in C.composition.items() if k[0] in mors and k[1] in mors}
    return FinCategory(tuple(keep), morphisms_d, {a: C.id(a) for a in keep}, composition, name)


def inclusion_functor(S: FinCategory, C: FinCategory) -> Functor:
    return Functor(S, C, {a: a for a in S.objects}, {m: m for m in S.morphisms})


def projection(P: FinCategory, A: FinCategory, index: int) -> Functor:
    return Functor(P, A, {o: o[index] for o in P.objects}, {m: m[index] for m in P.morphisms})


# -- limits ----------------------------------------------------------------------

@dataclass(frozen=True)
class Cone:
    apex: Ob
    legs: tuple


def is_pullback_square(C: FinCategory, p1: Mor, p2: Mor, f: Mor, g: Mor) -> bool:
    """Is the commuting square ``f∘p1 = g∘p2`` a pullback of ``f`` and ``g`` in ``C``?"""
    if C.compose(f, p1) != C.compose(g, p2):
        return False
    p = C.src(p1)
    a, b = C.src(f), C.src(g)
    for q in C.objects:
        for q1 in C.hom(q, a):
            fq1 = C.compose(f, q1)
            for q2 in C.hom(q, b):
                if fq1 != C.compose(g, q2):
                    continue
                n = sum(1 for u in C.hom(q, p)
                        if C.compose(p1, u) == q1 and C.compose(p2, u) == q2)
                if n != 1:
                    return False
    return True


def pullback_in(C: FinCategory, f: Mor, g: Mor) -> Cone | None:
    """A pullback of the cospan ``f, g`` (first in object order), or ``None``."""
    if C.tgt(f) != C.tgt(g):
        raise CategoryError(f"{f!r} and {g!r} do not form a cospan")
    a, b = C.src(f), C.src(g)
    for p in C.objects:
        for p1 in C.hom(p, a):
            for p2 in C.hom(p, b):
                if is_pullback_square(C, p1, p2, f, g):
                    return Cone(p, (p1, p2))
    return None


def factor_through(C: FinCategory, cone: Cone, legs: Sequence) -> list:
    """All morphisms ``u`` into the cone apex with ``cone.legs[i]∘u == legs[i]``."""
    q = C.src(legs[0])
    return [u for u in C.hom(q, cone.apex)
            if all(C.compose(l, u) == m for l, m in zip(cone.legs, legs))]


# -- isomorphism -----------------------------------------------------------------

def _invariant(C: FinCategory, a):
    return (len(C.hom(a, a)),
            tuple(sorted(len(C.hom(a, b)) for b in C.objects)),
            tuple(sorted(len(C.hom(b, a)) for b in C.objects)))


def iso_check(C: FinCategory, D: FinCategory) -> tuple[Functor, Functor] | None:
    """Mutually inverse functors ``C ⇄ D`` if the categories are isomorphic."""
    if len(C.objects) != len(D.objects) or len(C.morphisms) != len(D.morphisms):
        return None
    cinv = {a: _invariant(C, a) for a in C.objects}
    dinv = {b: _invariant(D, b) for b in D.objects}
    if sorted(cinv.values()) != sorted(dinv.values()):
        return None
    cobs = list(C.objects)

    def object_bijections(i, used, om):
        if i == len(cobs):
            yield dict(om)
            return
        a = cobs[i]
        for b in D.objects:
            if b in used or dinv[b] != cinv[a]:
                continue
            if any(len(C.hom(a, a2)) != len(D.hom(b, om[a2])) or len(C.hom(a2, a)) != len(D.hom(om[a2], b))
                   for a2 in cobs[:i]):
                continue
            om[a] = b
            used.add(b)
            yield from object_bijections(i + 1, used, om)
            used.discard(b)
            del om[a]

    for om in object_bijections(0, set(), {}):
        for F in functors(C, D, om):
            if len(set(F.morphism_map.values())) != len(D.morphisms):
                continue
            inv_o = {v: k for k, v in F.object_map.items()}
            inv_m = {v: k for k, v in F.morphism_map.items()}
            return F, Functor(D, C, inv_o, inv_m)
    return None


# -- connectivity and colimits of sets ---------------------------------------------

class UnionFind:
    def __init__(self, items: Iterable = ()):
        self.parent: dict = {}
        for x in items:
            self.add(x)

    def add(self, x):
        self.parent.setdefault(x, x)

    def find(self, x):
        self.add(x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True

    def classes(self) -> list[list]:
        out: dict = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return list(out.values())


def connected_components(C: FinCategory) -> list[list]:
    uf = UnionFind(C.objects)
    for a, b in C.morphisms.values():
        uf.union(a, b)
    return uf.classes()


@dataclass(frozen=True, eq=False)
class FinSetCategory(FinCategory):
    """A finite category of finite sets and functions.

    ``elements[obj]`` is the element tuple of a set; ``functions[mor]`` the
    graph of a function as a dict.
    """

    elements: Mapping = field(default_factory=dict)
    functions: Mapping = field(default_factory=dict)


def finset_fragment(sets: Mapping, functions: Mapping | None = None, name: str = "") -> FinSetCategory:
    """The category of the named sets closed under the given functions.

    ``functions`` maps a name to ``(source, target, mapping)``. Morphism ids of
    the result are ``(source, target, images)`` so equal functions coincide.
    """
    sets = {k: tuple(v) for k, v in sets.items()}

    def key(s, t, mapping):
        return (s, t, tuple(mapping[e] for e in sets[s]))

    mors = {}
    for s in sets:
        mors[key(s, s, {e: e for e in sets[s]})] = None
    for s, t, mapping in (functions or {}).values():
        if any(mapping[e] not in sets[t] for e in sets[s]):
            raise CategoryError(f"function {s}->{t} leaves its codomain")
        mors[key(s, t, mapping)] = None
    changed = True
    while changed:
        changed = False
        for g in list(mors):
            for f in list(mors):
                if f[1] == g[0]:
                    gm = dict(zip(sets[g[0]], g[2]))
                    fm = dict(zip(sets[f[0]], f[2]))
                    k = key(f[0], g[1], {e: gm[fm[e]] for e in sets[f[0]]})
                    if k not in mors:
                        mors[k] = None
                        changed = True
    morphisms = {m: (m[0], m[1]) for m in mors}
    identity = {s: key(s, s, {e: e for e in sets[s]}) for s in sets}
    composition = {}
    for g in mors:
        gm = dict(zip(sets[g[0]], g[2]))
        for f in mors:
            if f[1] == g[0]:
                fm = dict(zip(sets[f[0]], f[2]))
                composition[(g, f)] = key(f[0], g[1], {e: gm[fm[e]] for e in sets[f[0]]})
    fns = {m: dict(zip(sets[m[0]], m[2])) for m in mors}
    return FinSetCategory(tuple(sets), morphisms, identity, composition, name,
                          elements=dict(sets), functions=fns)


def set_diagram(shape: FinCategory, sets: Mapping, maps: Mapping) -> Functor:
    """A functor ``shape → FinSet`` from element tuples per object and a mapping per generator.

    ``maps`` needs entries for the non-identity morphisms of ``shape``; the
    result is validated as a functor.
    """
    target = finset_fragment(sets, {m: (shape.src(m), shape.tgt(m), maps[m]) for m in maps})
    om = {a: a for a in shape.objects}
    mm = {}
    for m in shape.morphisms:
        a, b = shape.morphisms[m]
        if shape.is_identity(m):
            mm[m] = target.id(a)
        else:
            mm[m] = (a, b, tuple(maps[m][e] for e in target.elements[a]))
    F = Functor(shape, target, om, mm)
    problems = validate_functor(F)
    if problems:
        raise CategoryError("; ".join(problems))
    return F


def colimit_of_sets(diagram: Functor) -> list[list]:
    """Colimit of a diagram of finite sets, as the list of equivalence classes of ``(object, element)``."""
    T = diagram.target
    if not isinstance(T, FinSetCategory):
        raise CategoryError("diagram must land in a FinSetCategory")
    uf = UnionFind()
    for a in diagram.source.objects:
        for e in T.elements[diagram.ob(a)]:
            uf.add((a, e))
    for m, (a, b) in diagram.source.morphisms.items():
        fn = T.functions[diagram(m)]
        for e in T.elements[diagram.ob(a)]:
            uf.union((a, e), (b, fn[e]))
    return uf.classes()


# -- standard small categories -------------------------------------------------------

ONE = build_category(["*"], name="One")
TWO = build_category([0, 1], {"f": (0, 1)}, name="Two")
DISC2 = discrete([0, 1], name="Disc2")
PAR = build_category([0, 1], {"u": (0, 1), "v": (0, 1)}, name="Par")
IDEMMON = monoid_category(["1", "e"], lambda g, f: "1" if g == f == "1" else "e", "1", name="IdemMon")


def free_category(objects: Iterable, edges: Mapping, name: str = "") -> FinCategory:
    """The free category on an acyclic graph; ``edges`` maps a name to ``(source, target)``.

    Non-identity morphisms are paths, stored as tuples of edge names with the
    first edge applied first.
    """
    objects = tuple(objects)
    out: dict = {a: [] for a in objects}
    for e, (a, b) in edges.items():
        out[a].append((e, b))
    paths: dict = {}

    def walk(start, here, path, seen):
        for e, b in out[here]:
            if b in seen:
                raise CategoryError("graph has a cycle; its free category is infinite")
            p = path + (e,)
            paths[p] = (start, b)
            walk(start, b, p, seen | {b})

    for a in objects:
        walk(a, a, (), {a})
    composites = {}
    for q, (b, c) in paths.items():
        for p, (a, b2) in paths.items():
            if b2 == b:
                composites[(q, p)] = p + q
    return build_category(objects, paths, composites, name)


# -- enumeration of small categories -------------------------------------------------------

def _size_matrix_is_minimal(h: dict, n: int) -> bool:
    key = tuple(h[(a, b)] for a in range(n) for b in range(n))
    for p in itertools.permutations(range(n)):
        if tuple(h[(p[a], p[b])] for a in range(n) for b in range(n)) < key:
            return False
    return True


def _canonical_key(C: FinCategory, n: int, h: dict):
    """Least encoding of ``C`` over object permutations and relabellings within each hom."""
    best = None
    homs = {(a, b): [m for m in C.hom(a, b) if not C.is_identity(m)] for a in range(n) for b in range(n)}
    perms = [p for p in itertools.permutations(range(n))
             if all(h[(p[a], p[b])] == h[(a, b)] for a in range(n) for b in range(n))]
    keys = [k for k in homs if len(homs[k]) > 1]
    for p in perms:
        for orders in itertools.product(*(list(itertools.permutations(homs[k])) for k in keys)):
            # name of each morphism after relabelling: (new source, new target, index)
            rename = {}
            for a in range(n):
                rename[C.id(a)] = (p[a], p[a], -1)
            for (a, b), ms in homs.items():
                order = orders[keys.index((a, b))] if (a, b) in keys else ms
                for i, m in enumerate(order):
                    rename[m] = (p[a], p[b], i)
            table = tuple(sorted((rename[g], rename[f], rename[gf]) for (g, f), gf in C.composition.items()))
            if best is None or table < best:
                best = table
    return best


def enumerate_categories(max_objects: int, max_hom: int, min_objects: int = 1,
                         up_to_iso: bool = True) -> Iterator[FinCategory]:
    """Every category on objects ``0..n-1`` with at most ``max_hom`` morphisms between any two objects.

    Non-identity morphisms are named ``m<a><b>_<i>``. With ``up_to_iso`` one
    representative of each isomorphism class is produced.
    """
    for n in range(min_objects, max_objects + 1):
        obs = tuple(range(n))
        pairs = [(a, b) for a in obs for b in obs]
        for sizes in itertools.product(range(max_hom + 1), repeat=n * n):
            h = dict(zip(pairs, sizes))
            if any(h[(a, a)] == 0 for a in obs):
                continue
            if up_to_iso and not _size_matrix_is_minimal(h, n):
                continue
            seen: set = set()
            for C in _categories_with_sizes(obs, h):
                if up_to_iso:
                    k = _canonical_key(C, n, h)
                    if k in seen:
                        continue
                    seen.add(k)
                yield C


def _categories_with_sizes(obs: tuple, h: dict, rng=None) -> Iterator[FinCategory]:
    ident = {a: f"id_{a}" for a in obs}
    hom = {(a, b): ([ident[a]] if a == b else []) + [f"m{a}{b}_{i}" for i in range(h[(a, b)] - (a == b))]
           for a in obs for b in obs}
    ends = {m: k for k, ms in hom.items() for m in ms}
    non_id = [m for m in ends if m not in ident.values()]
    pairs = [(g, f) for g in non_id for f in non_id if ends[f][1] == ends[g][0]]
    if any(not hom[(ends[f][0], ends[g][1])] for g, f in pairs):
        return
    comp: dict = {}

    def c(g, f):
        if g in ident.values():
            return f
        if f in ident.values():
            return g
        return comp.get((g, f))

    # each triple (k, g, f) is checked once all four composites are known
    triples = [(k, g, f) for k in non_id for g in non_id for f in non_id
               if ends[f][1] == ends[g][0] and ends[g][1] == ends[k][0]]
    watch: dict = {}
    for t in triples:
        k, g, f = t
        a, d = ends[f][0], ends[k][1]
        b, cc = ends[g][0], ends[g][1]
        keys = {(g, f), (k, g)} | {(k, x) for x in hom[(a, cc)]} | {(y, f) for y in hom[(b, d)]}
        for key in keys:
            watch.setdefault(key, []).append(t)

    def ok(p) -> bool:
        for k, g, f in watch.get(p, ()):
            gf, kg = c(g, f), c(k, g)
            if gf is None or kg is None:
                continue
            lhs, rhs = c(k, gf), c(kg, f)
            if lhs is not None and rhs is not None and lhs != rhs:
                return False
        return True

    def rec(i):
        if i == len(pairs):
            composition = {}
            for (a, b), ms in hom.items():
                for f in ms:
                    for cc in obs:
                        for g in hom[(b, cc)]:
                            composition[(g, f)] = c(g, f)
            morphisms = {m: ends[m] for m in ends}
            yield FinCategory(obs, morphisms, dict(ident), composition, "")
            return
        g, f = pairs[i]
        values = list(hom[(ends[f][0], ends[g][1])])
        if rng is not None:
            rng.shuffle(values)
        for v in values:
            comp[(g, f)] = v
            if ok((g, f)):
                yield from rec(i + 1)
        comp.pop((g, f), None)

    yield from rec(0)


def random_category(rng, max_objects: int, max_hom: int, attempts: int = 200) -> FinCategory:
    """A seeded random category: random hom sizes, then a randomised search for a composition table."""
    for _ in range(attempts):
        n = rng.randint(1, max_objects)
        obs = tuple(range(n))
        h = {(a, b): rng.randint(1 if a == b else 0, max_hom) for a in obs for b in obs}
        for C in _categories_with_sizes(obs, h, rng):
            return C
    raise CategoryError("no category found; loosen the bounds")


def random_functor(rng, C: FinCategory, D: FinCategory, attempts: int = 50) -> Functor | None:
    """A seeded random functor ``C → D``: a random object map, then a random choice among its functors."""
    for _ in range(attempts):
        om = {a: rng.choice(D.objects) for a in C.objects}
        options = list(itertools.islice(functors(C, D, om), 64))
        if options:
            return rng.choice(options)
    return None

"""Reference implementations that share no code with the library.

Everything here works on plain dicts pulled out of the library's objects:
morphisms as ``name -> (source, target)`` and composition as
``(g, f) -> g∘f``.
"""
from __future__ import annotations

import itertools
from collections import deque


def raw(C):
    return dict(C.morphisms), dict(C.composition), dict(C.identity)


def classical_cartesian(E, P, phi) -> bool:
    """Direct definition: every ψ into the codomain of φ with a factorization downstairs lifts uniquely."""
    mE, cE, _ = raw(E)
    mB, cB, _ = raw(P.target)
    pm = P.morphism_map
    src, tgt = mE[phi]
    for psi, (s2, t2) in mE.items():
        if t2 != tgt:
            continue
        for g, (gs, gt) in mB.items():
            if gs != P.object_map[s2] or gt != P.object_map[src]:
                continue
            if cB[(pm[phi], g)] != pm[psi]:
                continue
            lifts = [chi for chi, (cs, ct) in mE.items()
                     if cs == s2 and ct == src and cE[(phi, chi)] == psi and pm[chi] == g]
            if len(lifts) != 1:
                return False
    return True


def classical_fibration(P) -> bool:
    E = P.source
    mE, _, _ = raw(E)
    mB, _, _ = raw(P.target)
    for e in E.objects:
        for u, (us, ut) in mB.items():
            if ut != P.object_map[e]:
                continue
            if not any(mE[phi][1] == e and P.morphism_map[phi] == u and classical_cartesian(E, P, phi)
                       for phi in mE):
                return False
    return True


def category_axioms_hold(objects, morphisms, identity, composition) -> bool:
    for (g, f), h in composition.items():
        if morphisms[f][1] != morphisms[g][0] or morphisms[h] != (morphisms[f][0], morphisms[g][1]):
            return False
    for f, (a, b) in morphisms.items():
        if composition.get((identity[b], f)) != f or composition.get((f, identity[a])) != f:
            return False
    for h, g, f in itertools.product(morphisms, repeat=3):
        if morphisms[f][1] == morphisms[g][0] and morphisms[g][1] == morphisms[h][0]:
            if composition[(h, composition[(g, f)])] != composition[(composition[(h, g)], f)]:
                return False
    return True


def brute_force_category_count(n: int, max_hom: int) -> int:
    """Isomorphism classes of categories on ``n`` objects with hom-sets of size at most ``max_hom``.

    Tries every composition table with no pruning, then removes duplicates by
    comparing against every relabelling.
    """
    obs = list(range(n))
    seen = set()
    for sizes in itertools.product(range(max_hom + 1), repeat=n * n):
        h = {(a, b): sizes[a * n + b] for a in obs for b in obs}
        if any(h[(a, a)] < 1 for a in obs):
            continue
        morphisms = {}
        identity = {}
        for (a, b), k in h.items():
            for i in range(k):
                morphisms[(a, b, i)] = (a, b)
            if a == b:
                identity[a] = (a, a, 0)
        free = [(g, f) for g in morphisms for f in morphisms
                if morphisms[f][1] == morphisms[g][0] and g not in identity.values() and f not in identity.values()]
        choices = [[m for m in morphisms if morphisms[m] == (morphisms[f][0], morphisms[g][1])] for g, f in free]
        for pick in itertools.product(*choices):
            comp = {}
            for f, (a, b) in morphisms.items():
                comp[(identity[b], f)] = f
                comp[(f, identity[a])] = f
            comp.update(dict(zip(free, pick)))
            if len(comp) < sum(1 for g in morphisms for f in morphisms if morphisms[f][1] == morphisms[g][0]):
                continue
            if not category_axioms_hold(obs, morphisms, identity, comp):
                continue
            seen.add(_canon(obs, morphisms, identity, comp))
    return len(seen)


def _canon(obs, morphisms, identity, comp):
    best = None
    idset = set(identity.values())
    for p in itertools.permutations(obs):
        groups = {}
        for m, (a, b) in morphisms.items():
            if m not in idset:
                groups.setdefault((a, b), []).append(m)
        keys = sorted(groups)
        for orders in itertools.product(*(itertools.permutations(groups[k]) for k in keys)):
            name = {identity[a]: (p[a], p[a], "id") for a in obs}
            for k, order in zip(keys, orders):
                for i, m in enumerate(order):
                    name[m] = (p[k[0]], p[k[1]], i)
            key = tuple(sorted((repr(name[g]), repr(name[f]), repr(name[h])) for (g, f), h in comp.items()))
            if best is None or key < best:
                best = key
    return best


def set_colimit_size(objects, sets, arrows) -> int:
    """Connected components of the element graph; ``arrows`` is a list of (source, target, mapping)."""
    adj = {(o, x): set() for o in objects for x in sets[o]}
    for s, t, mp in arrows:
        for x, y in mp.items():
            adj[(s, x)].add((t, y))
            adj[(t, y)].add((s, x))
    seen, count = set(), 0
    for v in adj:
        if v in seen:
            continue
        count += 1
        queue = deque([v])
        seen.add(v)
        while queue:
            u = queue.popleft()
            for w in adj[u] - seen:
                seen.add(w)
                queue.append(w)
    return count


def graph_components(objects, edges) -> int:
    return set_colimit_size(objects, {o: ["*"] for o in objects}, [(s, t, {"*": "*"}) for s, t in edges])

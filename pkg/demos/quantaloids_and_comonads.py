"""Faithful functors as categories over a free quantaloid, and coalgebra homs.

Run: python demos/quantaloids_and_comonads.py
"""
from enrslice.bicat import em_bicategory, free_quantaloid, validate_bicategory
from enrslice.enriched import enumerate_bcategories
from enrslice.fincat import PAR, enumerate_categories, functors
from enrslice.harness import chain_with_interior
from enrslice.slice import faithful_to_powerset_enriched

PX = free_quantaloid(PAR)
cats = list(enumerate_bcategories(PX, 2))
print(f"categories over P(Par) with at most two objects: {len(cats)}")
for Z in cats[:4]:
    homs = {k: h[3] for k, h in Z.hom.items() if h[3]}
    print(f"  objects over {dict(Z.extent)}, homs {homs}")

faithful = 0
for C in enumerate_categories(2, 2, up_to_iso=False):
    for F in functors(C, PAR):
        try:
            faithful_to_powerset_enriched(F, PX)
            faithful += 1
        except ValueError:
            pass
print(f"faithful functors from labelled categories into Par: {faithful}")

B, K = chain_with_interior()
E = em_bicategory(B, K)
print("coalgebras for the interior on 0 <= 1 <= 2:", [c for c, _ in E.hom("*", "*").objects],
      "valid:", validate_bicategory(E) == [])

"""Functors into Two become categories enriched in the slice Set/Two, and back.

Run: python demos/slicing_functors.py
"""
from enrslice.bicat import SigmaFinSet
from enrslice.enriched import encode_category, encode_functor, validate_bcategory
from enrslice.fincat import TWO, codomain_functor
from enrslice.harness import roundtrip_suite
from enrslice.slice import SliceBicategory, from_sliced, to_sliced

X = encode_category(TWO)
W = SliceBicategory(SigmaFinSet(), X)

# The codomain functor Arr(Two) -> Two, read as a category over Set/Two.
cod = encode_functor(codomain_functor(TWO), target=X)
Z = to_sliced(cod, W)
print(f"sliced category: {len(Z.objects)} objects, valid: {validate_bcategory(Z) == []}")
for (y, z), cell in Z.hom.items():
    if cell.onecell:
        print(f"  hom {y} -> {z}: {len(cell.onecell)} element(s) lying over {set(cell.leg.images)}")

print("unslicing gives cod back:", from_sliced(Z) == cod)

# Everything small at once: categories, functors, maps and transformations.
rep = roundtrip_suite(SigmaFinSet(), X, max_objects=1, fibre_bound=2)
print("bounded round trip:", rep.as_dict()["instances"], "instances,", len(rep.mismatches), "mismatches")

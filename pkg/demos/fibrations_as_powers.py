"""A functor is a fibration exactly when its sliced category has powers by singletons.

Run: python demos/fibrations_as_powers.py
"""
from enrslice.enriched import encode_category, encode_functor
from enrslice.fibration import cartesian_lift, cross_check, power_by_singleton, singleton_onecells
from enrslice.fincat import TWO
from enrslice.harness import arrow_two, disc2_into_two
from enrslice.slice import SliceBicategory, to_sliced
from enrslice.bicat import SigmaFinSet

X = encode_category(TWO)
W = SliceBicategory(SigmaFinSet(), X)
w = singleton_onecells(W, 0, 1)[0]  # the arrow f: 0 -> 1 seen as a singleton 1-cell

for name, F in (("cod", arrow_two()), ("Disc2 -> Two", disc2_into_two())):
    Fe = encode_functor(F, target=X)
    rep = cross_check(Fe)
    print(f"{name}: fibration={rep['fibration']} singleton powers={rep['singleton_powers']}")
    Z = to_sliced(Fe, W)
    for y in Z.objects:
        if Z.extent[y] != 1:
            continue
        lift = cartesian_lift(Fe, y, (0, w.leg, 1))
        wit = power_by_singleton(Z, y, w)
        print(f"  over {y}: cartesian lift {lift and lift[0]}, power {wit and wit.power}")

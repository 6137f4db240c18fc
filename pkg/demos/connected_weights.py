"""Which weights have a terminal conical colimit, with proofs and counterexamples.

Run: python demos/connected_weights.py
"""
from enrslice.connect import colimit_presentation, is_cat_connected, power_weight, standard_weights
from enrslice.fincat import ONE, TWO

ws = standard_weights()
weights = [ws[n]() for n in ("equalizer", "pullback", "equifier", "inserter", "comma")]
weights += [power_weight(ONE), power_weight(TWO)]

for W in weights:
    v = is_cat_connected(W)
    P = colimit_presentation(W)
    if v.kind == "yes":
        steps = sum(len(s) for s in v.proof.values())
        evidence = f"collapse proof, {steps} rewrite steps at depth {v.bound}"
    else:
        evidence = f"probe {v.witness['probe']} gives a cylinder category not isomorphic to it"
    print(f"{W.name:>12}: {v.kind:<3} ({len(P.classes)} object class(es)); {evidence}")

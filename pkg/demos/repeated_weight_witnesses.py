"""Repeated Hodge-Tate weights: where they occur and how to certify them.

Distinct weights are what modularity-lifting machinery needs; this script
shows that the classical N = 5 family is clean, that every even N >= 6 (and
N = 7) classical family is not, and that every non-classical weight vector
forces a repeat, usually exhibited by a direct gcd construction and always
checkable by exhaustive scan.

Run:  python demos/repeated_weight_witnesses.py
"""

from dworklab import (
    WeightVector,
    WitnessConstructionError,
    classical_repeat_class,
    construct_repeat_witness,
    hodge_data,
    repeated_class_representatives,
    repeated_ht_scan,
)

print("Classical families, exhaustive scan for repeated weights:")
for n in (3, 4, 5, 6, 7):
    found = repeated_class_representatives(n)
    note = "all weights distinct" if not found else f"{len(found)} classes with a repeat"
    print(f"   N = {n}: {note}")

print("\nConstructed witnesses for the classical family:")
for n in (6, 8, 10):
    rep = classical_repeat_class(n)
    print(f"   N = {n}: class {rep.char_class.representative.entries}")
    print(f"          weights {rep.hodge.weights}, value {rep.repeated_value} "
          f"with multiplicity {rep.multiplicity}")

print("\nNon-classical weight vectors (the gcd construction):")
for n, weights in [(4, (2, 2, 0, 0)), (6, (3, 3, 0, 0, 0, 0)), (5, (5, 0, 0, 0, 0))]:
    wv = WeightVector(n, weights)
    rep = construct_repeat_witness(n, wv)
    set_ws = hodge_data(rep.char_class, "set").weights
    print(f"   N = {n}, W = {weights}: witness {rep.char_class.representative.entries}")
    print(f"          indexed weights {rep.hodge.weights} (set semantics: {set_ws};"
          f" divergent: {rep.semantics_divergent})")

print("\nThe construction's blind spot: W a permutation of (0,2,1,...,1), N odd.")
wv = WeightVector(5, (0, 2, 1, 1, 1))
try:
    construct_repeat_witness(5, wv)
except WitnessConstructionError as exc:
    print(f"   N = 5, W = (0,2,1,1,1): {exc}")
scan = repeated_ht_scan(5, wv, "indexed")
print(f"   ...but the exhaustive scan still finds {len(scan)} repeated-weight classes,")
print(f"   e.g. {scan[0].char_class.representative.entries} with weights {scan[0].hodge.weights}")

print("\nAt N = 3 the blind spot is fatal: no repeated-weight class exists at all.")
for weights in [(0, 2, 1), (2, 0, 1)]:
    scan = repeated_ht_scan(3, WeightVector(3, weights), "indexed")
    print(f"   N = 3, W = {weights}: scan finds {len(scan)} classes")

"""Walk through the eigenspace tables of the classical quintic family.

The middle cohomology of x1^5 + ... + x5^5 = 5t * x1...x5 splits into
eigenspaces labelled by cosets of zero-sum vectors mod 5.  This script
enumerates them, prints the traditional 8-row table with dimensions and
weight multisets, and shows the orbit and duality structure behind it.

Run:  python demos/eigenspace_tables.py
"""

from dworklab import (
    class_of,
    classical_weight,
    coset_elements,
    dual_class,
    enumerate_classes,
    hodge_data,
    orbit_normal_form,
    symmetric_orbits,
    total_dimension,
    totally_nonzero_representatives,
    zero_dominant_form,
)

N = 5
W = classical_weight(N)

classes = enumerate_classes(N, W)
print(f"{len(classes)} character classes for N = {N} (zero-sum vectors mod coset shifts)\n")

print("The class of (0,0,1,1,3) in detail:")
cls = class_of((0, 0, 1, 1, 3), W)
for member in coset_elements(cls):
    marker = "  <- totally nonzero" if all(e for e in member.entries) else ""
    print(f"   {member.entries}{marker}")
data = hodge_data(cls)
print(f"   dimension {data.dimension}, weights {set(data.weights)}\n")

print("The 8 table rows (zero-dominant labels), with orbit normal forms:")
rows = {}
for c in classes:
    rows.setdefault(zero_dominant_form(c).entries, c)
for form in sorted(rows):
    c = class_of(form, W)
    data = hodge_data(c)
    reps = [m.entries for m in totally_nonzero_representatives(c)]
    dual = zero_dominant_form(dual_class(c)).entries
    print(f"   {form}  dim {data.dimension}  weights {set(data.weights) or '{}'}  dual {dual}")
    if reps and data.dimension == 2:
        print(f"      representatives: {reps[0]}, {reps[1]}")

print(f"\nTotal middle dimension: {total_dimension(N, W)} "
      "(= number of totally nonzero zero-sum vectors)")

census = {}
for c in classes:
    d = hodge_data(c).dimension
    census[d] = census.get(d, 0) + 1
print(f"Dimension census: {dict(sorted(census.items()))}\n")

orbits = symmetric_orbits(N)
print(f"Permutation orbits: {len(orbits)} (note: fewer than the 8 table rows)")
for form, members in orbits.items():
    print(f"   normal form {form.entries}: {len(members)} classes")
print("\nTwo pairs of table rows are permutation-equivalent:")
for a, b in [((0, 0, 1, 1, 3), (0, 0, 2, 4, 4)), ((0, 0, 1, 2, 2), (0, 0, 3, 3, 4))]:
    fa = orbit_normal_form(class_of(a, W)).entries
    fb = orbit_normal_form(class_of(b, W)).entries
    print(f"   {a} and {b} share normal form {fa}" if fa == fb else f"   {a} vs {b}: DIFFER")

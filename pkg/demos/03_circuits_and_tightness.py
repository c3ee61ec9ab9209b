"""Zigzags, central circuits and tightness.

A zigzag turns alternately left and right; a central circuit goes straight
ahead through every vertex.  Their lengths always sum to 6n and 3n.  A
sphere is tight when every circuit is adjacent to a 1- or 2-gon on both
sides, and weakly tight when no two circuits bound a ring of 3-gons
(a railroad).

Run:  python demos/03_circuits_and_tightness.py
"""

from sixspheres import circuits as cc
from sixspheres import named_graphs as ng
from sixspheres.goldberg_coxeter import gc, oriented_triplings
from sixspheres.symmetry import point_group

examples = {
    "6xK2": ng.six_k2(),
    "K2xTetrahedron": ng.k2_tetrahedron(),
    "tripling of K2xTetrahedron": oriented_triplings(ng.k2_tetrahedron())[0],
    "GC(2,1) of 6xK2": gc(ng.six_k2(), 2, 1).members[0],
    "Trifolium": ng.trifolium(),
    "R(2)": ng.series_r(2),
    "A(3)": ng.series_a(3),
}

print("1. Circuit vectors (l_{a1,a2}^m: length l, intersection types, multiplicity m)")
for name, m in examples.items():
    z, c = cc.zigzags(m), cc.central_circuits(m)
    print(f"   {name} (n={m.n_vertices}, {point_group(m).name})")
    print(f"      z = {z.render():<32} sum {sum(z.lengths())} = 6n")
    print(f"      c = {c.render():<32} sum {sum(c.lengths())} = 3n")

print("\n2. Tightness")
for name, m in examples.items():
    tz, tc = cc.tightness(m, cc.ZIGZAG), cc.tightness(m, cc.CENTRAL)
    print(f"   {name:<28} zigzags: {tz.status:<13} central circuits: {tc.status}")

print("\n3. Inserting a railroad breaks weak tightness")
m = ng.series_a(2)
c = next(x for x in cc.central_circuits(m).circuits if x.length == 1)
bigger = cc.insert_c_railroad(m, c.darts)
print(f"   A(2) -> n={bigger.n_vertices}: railroads {len(cc.railroads(bigger, cc.CENTRAL))}, "
      f"status {cc.tightness(bigger, cc.CENTRAL).status}")

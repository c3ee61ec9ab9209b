"""The Goldberg-Coxeter construction on 6-regular spheres.

GC_{k,l} replaces every vertex by a patch of the triangular lattice so that
the vertex count is multiplied by k^2 + kl + l^2.  Parameters divisible by
1+j (class A) give two members, the others a single sphere.

Run:  python demos/02_goldberg_coxeter.py
"""

from sixspheres import circuits as cc
from sixspheres import eisenstein as eis
from sixspheres import named_graphs as ng
from sixspheres.goldberg_coxeter import gc, oriented_triplings
from sixspheres.map_core import canonical_code
from sixspheres.symmetry import point_group

k2 = ng.six_k2()
print("1. GC images of 6xK2 (two vertices, six parallel edges)")
for k, l in [(1, 0), (1, 1), (2, 0), (2, 1), (3, 1), (4, 0), (3, 2)]:
    res = gc(k2, k, l)
    desc = ", ".join(f"n={g.n_vertices} {point_group(g).name}" for g in res.members)
    print(f"   GC({k},{l})  class {eis.lattice_class((k, l)):>2}  norm {eis.norm((k, l)):>2}: {desc}")

print("\n2. GC(1,1) is the pair of oriented triplings")
for name in ("6xK2", "Trifolium", "K2xTetrahedron"):
    m = ng.named_graph(name)
    same = gc(m, 1, 1).codes() == {canonical_code(t, False) for t in oriented_triplings(m)}
    print(f"   {name}: {same}")

print("\n3. Multiplicativity: GC(2,1) of GC(2,1) equals GC of the product (3,5)")
z = eis.mul((2, 1), (2, 1))
lhs = gc(gc(k2, 2, 1).members[0], 2, 1).codes()
print(f"   (2+j)^2 = {tuple(z)}; equal: {lhs == gc(k2, *z).codes()}")

print("\n4. The Trifolium family: C3v on the axis, C3h on the diagonal, C3 otherwise")
for k, l in [(1, 0), (2, 0), (3, 0), (1, 1), (2, 2), (2, 1), (1, 2), (3, 1)]:
    g = gc(ng.trifolium(), k, l).members[0]
    print(f"   GC({k},{l}) n={g.n_vertices:>2} {point_group(g).name}")

print("\n5. How circuit vectors transform under GC_{t,0}")
for name in ("6xK2", "3xK3"):
    m = ng.named_graph(name)
    for r in cc.gc_vector_theorem_report(m, (1,)):
        print(f"   {name} GC{r.parameter}: predicted z={r.predicted_z}")
        print(f"   {' ' * len(name)} {' ' * len(str(r.parameter))}     actual    z={r.actual_z}  match={r.matches}")
print("   The predicted vectors sum to 6n only for t = 1+3u; the t = 1+4u reading fails.")

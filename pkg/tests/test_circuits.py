from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from sixspheres import circuits as cc
from sixspheres import named_graphs as ng
from sixspheres.goldberg_coxeter import gc
from sixspheres.map_core import OddVertexDegree, truncate

from conftest import census


def _all_maps(max_n):
    for n in range(1, max_n + 1):
        for cell in census(n).values():
            yield from cell.values()


def test_six_k2_vectors_and_matrix():
    m = ng.six_k2()
    c = cc.central_circuits(m)
    assert c.render() == "2^3"
    assert cc.zigzags(m).render() == "6^2"
    sizes = cc.intersection_sizes(c)
    assert all(sizes[i][j] == 2 for i in range(3) for j in range(3) if i != j)


def test_render_parse_roundtrip():
    text = "10^3, 11_{0,1}^3, 22_{0,3}^3"
    assert cc.render_vector(cc.parse_vector(text)) == text
    with pytest.raises(ValueError):
        cc.parse_vector("x^2")


def test_central_needs_even_degrees():
    with pytest.raises(OddVertexDegree):
        cc.central_circuits(truncate(ng.six_k2()))


def test_zigzags_of_cubic_map():
    cube = truncate(ng.six_k2())  # hexagonal prism
    assert sum(cc.zigzags(cube).lengths()) == 2 * cube.n_edges


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 9), st.integers(0, 3), st.randoms(use_true_random=False))
def test_sum_rules_property(n, p1, rnd):
    cell = list(census(n)[p1].values())
    if not cell:
        return
    m = rnd.choice(cell)
    assert sum(cc.zigzags(m).lengths()) == 6 * n
    assert sum(cc.central_circuits(m).lengths()) == 3 * n


def test_reversal_flips_pair_types():
    m = ng.k2_tetrahedron()
    c = cc.central_circuits(m)
    assert all(a == 0 for row in c.matrix for a, _ in row)
    flipped = cc.reorient(m, c, [0])
    for j in range(1, len(c)):
        assert flipped.matrix[0][j] == (c.matrix[0][j][1], c.matrix[0][j][0])
    # self-intersections do not depend on orientation
    assert [x.symbol for x in flipped.circuits] == [x.symbol for x in c.circuits]


def test_canonical_orientation_other_class():
    m = ng.series_a(3)
    for kind in (cc.ZIGZAG, cc.CENTRAL):
        cs = cc.canonical_orientation(m, kind, face_class=1)
        assert all(a == 0 for row in cs.matrix for a, _ in row)


def test_self_intersection_with_unigons():
    for m in _all_maps(9):
        if m.p(1) == 0:
            continue
        assert any(not x.is_simple for x in cc.zigzags(m).circuits)
        assert any(not x.is_simple for x in cc.central_circuits(m).circuits)
        if m.p(1) == 3:
            assert all(not x.is_simple for x in cc.zigzags(m).circuits)
            assert all(not x.is_simple for x in cc.central_circuits(m).circuits)


def test_13_spheres_doubling():
    for m in _all_maps(12):
        if m.p(1) != 3:
            continue
        z = Counter(cc.zigzags(m).lengths())
        c = Counter(2 * x for x in cc.central_circuits(m).lengths())
        assert z == c


def test_simple_pair_intersections():
    for m in _all_maps(10):
        for cs in (cc.zigzags(m), cc.central_circuits(m)):
            simple = [i for i, x in enumerate(cs.circuits) if x.is_simple]
            sizes = cc.intersection_sizes(cs)
            for i in simple:
                for j in simple:
                    if i < j:
                        assert sizes[i][j] in (0, 2, 4, 6)


def test_simple_circuit_sides_carry_three():
    # the local Euler formula for a 0-gonal patch: p2 + 2 p1 = 3 on each side
    for m in _all_maps(10):
        for x in cc.central_circuits(m).circuits:
            if len({m.vertex_of[d] for d in x.darts}) != x.length:
                continue
            for side in ("left", "right"):
                p1, p2 = cc.circuit_interior(m, x, side)
                assert cc.patch_euler_check(0, 0, p2, p1).holds


def test_patch_euler_examples():
    assert cc.patch_euler_check(0, 0, 3).holds
    assert cc.patch_euler_check(0, 2, 1).holds
    assert not cc.patch_euler_check(0, 0, 2).holds
    with pytest.raises(cc.IrregularPatch):
        cc.patch_euler_check(4, 2, 0)


def test_railroads_and_tightness():
    assert cc.tightness(ng.six_k2(), cc.CENTRAL).tight
    assert cc.tightness(ng.six_k2(), cc.ZIGZAG).tight
    rep = cc.tightness(ng.k2_tetrahedron(), cc.ZIGZAG)
    assert rep.status == "weakly_tight" and not rep.railroads
    assert cc.railroads(ng.series_a(3), cc.CENTRAL)
    g = gc(ng.k2_tetrahedron(), 5, 0).members[0]
    assert cc.railroads(g, cc.CENTRAL) and cc.railroads(g, cc.ZIGZAG)


def test_railroad_insertion_adds_parallel_pair():
    m = ng.series_s(3)
    c = next(x for x in cc.central_circuits(m).circuits if x.length == 2)
    r = cc.insert_c_railroad(m, c.darts)
    assert r.n_vertices == m.n_vertices + 2
    assert cc.railroads(r, cc.CENTRAL)
    bad = next(x for x in cc.central_circuits(m).circuits if not x.is_simple)
    with pytest.raises(ValueError):
        cc.insert_c_railroad(m, bad.darts)


def test_13_spheres_never_tight(corpus12):
    for r in corpus12:
        if r.p1 == 3:
            assert r.tight_z != "tight" and r.tight_c != "tight"


@pytest.mark.parametrize("name", ["6xK2", "3xK3", "Trifolium", "K2xTetrahedron"])
def test_gc_vector_theorem(name):
    m = ng.named_graph(name)
    stated, implied = cc.gc_vector_theorem_report(m, (1,))
    assert stated.parameter == (5, 0) and not stated.sums_consistent and not stated.matches
    assert implied.parameter == (4, 0) and implied.sums_consistent and implied.matches

import pytest

from sixspheres import eisenstein as eis
from sixspheres import named_graphs as ng
from sixspheres.goldberg_coxeter import (BadParameter, OddFace, UnsupportedSeed, gc, gc3_cubic,
                                         gc_seed_family, oriented_tripling, oriented_triplings,
                                         three_color)
from sixspheres.map_core import canonical_code, dual, truncate
from sixspheres.symmetry import point_group

SEEDS = ("6xK2", "Trifolium", "K2xTetrahedron")


@pytest.mark.parametrize("name", SEEDS)
def test_gc_identity(name):
    m = ng.named_graph(name)
    assert gc(m, 1, 0).codes() == {canonical_code(m, False)}


@pytest.mark.parametrize("name", SEEDS)
def test_gc_regular_and_counts(name):
    m = ng.named_graph(name)
    for k, l in eis.parameters_up_to(9, True):
        for g in gc(m, k, l).members:
            assert all(len(v) == 6 for v in g.vertices)
            assert g.n_vertices == m.n_vertices * eis.norm((k, l))
            assert g.p(1) == m.p(1)


def test_class_a_gives_two_members():
    assert len(gc(ng.six_k2(), 1, 1).members) == 2
    assert len(gc(ng.six_k2(), 2, 1).members) == 1


def test_mirror_parameters():
    m = ng.six_k2()
    a = gc(m, 2, 1).members[0]
    b = gc(m, 1, 2).members[0]
    assert canonical_code(a, False) == canonical_code(b.mirror(), False)
    assert canonical_code(a, False) != canonical_code(b, False)


def test_gc3_cubic_on_truncation():
    cube = truncate(ng.six_k2())
    g = gc3_cubic(cube, 2, 0)
    assert g.n_vertices == 4 * cube.n_vertices
    assert all(len(v) == 3 for v in g.vertices)


def test_tripling_counts():
    for name in SEEDS:
        m = ng.named_graph(name)
        for t in oriented_triplings(m):
            assert t.n_vertices == 3 * m.n_vertices
            assert t.p(1) == m.p(1)


def test_errors():
    with pytest.raises(BadParameter):
        gc(ng.six_k2(), 0, 0)
    with pytest.raises(BadParameter):
        gc(truncate(ng.six_k2()), 1, 0)
    with pytest.raises(OddFace):
        three_color(truncate(truncate(ng.six_k2())))
    with pytest.raises(UnsupportedSeed):
        list(gc_seed_family("nonsense", 3))


def test_seed_family_dedup():
    fam = list(gc_seed_family("6xK2", 7))
    codes = [canonical_code(g, False) for _, g in fam]
    assert len(codes) == len(set(codes))
    assert {g.n_vertices for _, g in fam} == {2, 6, 8, 14}


def test_t_series_is_tripling():
    t1 = ng.trifolium()
    codes = {canonical_code(x) for x in oriented_triplings(t1)}
    assert canonical_code(ng.series_t(2)) in codes
    assert point_group(ng.series_t(2)).name == "C3h"

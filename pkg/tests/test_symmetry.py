import pytest

from sixspheres import named_graphs as ng
from sixspheres.symmetry import GROUP_NAMES, PointGroup, element_order, group_census, point_group
from sixspheres.goldberg_coxeter import gc


@pytest.mark.parametrize("m,name,order", [
    (ng.six_k2(), "D6h", 24), (ng.three_k3(), "D3h", 12), (ng.trifolium(), "C3v", 6),
    (ng.k2_tetrahedron(), "Td", 24), (ng.series_t(2), "C3h", 6), (ng.series_c(3), "C2", 2),
    (ng.series_b(4), "Ci", 2), (ng.series_b(3), "Cs", 2),
])
def test_anchor_groups(m, name, order):
    g = point_group(m)
    assert (g.name, g.order) == (name, order)
    assert g.order in (g.rotation_order, 2 * g.rotation_order)


def test_chiral_gc():
    assert point_group(gc(ng.six_k2(), 2, 1).members[0]).name == "D6"


def test_element_order():
    assert element_order([1, 2, 0, 4, 3]) == 6


def test_corpus_groups(corpus12):
    allowed = {0: set(GROUP_NAMES), 1: {"C1", "Cs"}, 2: {"C1", "C2", "Ci", "Cs", "C2v", "C2h"},
               3: {"C3", "C3v", "C3h"}}
    for r in corpus12:
        assert r.group in allowed[r.p1]
        assert r.group not in ("C6", "C6v", "C6h", "D6d")


def test_group_census_p1(corpus12):
    assert group_census(corpus12, 1) == {"Cs": 3, "C1": 5}
    assert group_census(corpus12, 3) == {"C3v": 1, "C3h": 3, "C3": 7}
    # oracle-derived: the C_i minimum for p1=2 is n=4 (the chain B(4))
    assert group_census(corpus12, 2) == {"C2v": 1, "C2": 2, "C2h": 2, "Cs": 3, "Ci": 4, "C1": 6}

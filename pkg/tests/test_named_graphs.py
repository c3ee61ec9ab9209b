import pytest

from sixspheres import named_graphs as ng
from sixspheres.map_core import canonical_code
from sixspheres.symmetry import point_group

from conftest import census


@pytest.mark.parametrize("name,n,p1,group", [
    ("6xK2", 2, 0, "D6h"), ("3xK3", 3, 0, "D3h"), ("Trifolium", 1, 3, "C3v"),
    ("T2", 3, 3, "C3h"), ("K2xTetrahedron", 4, 0, "Td"),
])
def test_fixed(name, n, p1, group):
    m = ng.named_graph(name)
    assert (m.n_vertices, m.p(1), point_group(m).name) == (n, p1, group)
    assert m.is_sphere_123_6()


@pytest.mark.parametrize("i", range(1, 9))
def test_series_a(i):
    m = ng.series_a(i)
    assert (m.n_vertices, m.p(1), m.p(2)) == (i, 2, 2)
    assert point_group(m).name == ("C2v" if i % 2 else "C2h")


@pytest.mark.parametrize("i", range(2, 9))
def test_series_b_c(i):
    b, c = ng.series_b(i), ng.series_c(i)
    assert b.n_vertices == c.n_vertices == i
    assert point_group(b).name == ("Cs" if i % 2 else ("C2h" if i == 2 else "Ci"))
    assert point_group(c).name == "C2"


@pytest.mark.parametrize("i", range(1, 5))
def test_series_r(i):
    m = ng.series_r(i)
    assert (m.n_vertices, m.p(1), m.p(2)) == (2 * i + 1, 1, 4)
    assert point_group(m).name == "Cs"


def test_series_s_and_sv():
    assert [point_group(ng.series_s(i)).name for i in range(2, 6)] == ["C2h", "C2", "C2h", "C2"]
    assert [point_group(ng.series_sv(k)).name for k in range(1, 4)] == ["C2v"] * 3
    assert ng.series_sv(3).n_vertices == 12


def test_series_t():
    assert [ng.series_t(i).n_vertices for i in (1, 2, 3)] == [1, 3, 9]
    assert point_group(ng.series_t(3)).name == "C3v"


def test_series_members_are_in_census():
    for n in range(1, 11):
        for p1 in range(4):
            for m in ng.exceptional_spheres(n, p1):
                assert canonical_code(m) in census(n)[p1]


def test_name_parsing():
    assert ng.named_graph("A(3)").n_vertices == 3
    assert ng.named_graph(("R", 2)).n_vertices == 5
    assert ng.named_graph("six-k2").n_vertices == 2
    with pytest.raises(ng.BadParameter):
        ng.named_graph("nonsense")
    with pytest.raises(ng.BadParameter):
        ng.series_b(1)

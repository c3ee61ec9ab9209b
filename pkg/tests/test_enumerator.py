import pytest

from sixspheres.enumerator import (BoundTooLarge, EnumerationRequest, brute_force_oracle,
                                   count_table, enumerate_base, insert_digons, insert_unigons)
from sixspheres.map_core import dual

from conftest import census

# Counts computed by the brute-force oracle (exhaustive dart gluing, distinct
# up to orientation-preserving or -reversing isomorphism), frozen here.
ORACLE_COUNTS = {
    1: (0, 0, 1, 1), 2: (1, 0, 3, 0), 3: (1, 1, 3, 1), 4: (3, 1, 6, 1),
    5: (2, 3, 5, 0), 6: (7, 2, 8, 0), 7: (5, 6, 6, 1), 8: (12, 5, 13, 0),
    9: (10, 8, 8, 1), 10: (19, 6, 12, 0), 11: (16, 14, 9, 0), 12: (29, 11, 18, 1),
}


@pytest.mark.parametrize("n", range(1, 13))
def test_pipeline_counts(n):
    assert tuple(len(census(n)[p]) for p in range(4)) == ORACLE_COUNTS[n]


@pytest.mark.parametrize("n", range(1, 9))
def test_pipeline_equals_oracle(n):
    for p1 in range(4):
        assert set(census(n)[p1]) == set(brute_force_oracle(n, p1))


def test_all_maps_are_spheres():
    for n in range(1, 9):
        for p1, cell in census(n).items():
            for m in cell.values():
                assert m.is_sphere_123_6()
                assert m.p(1) == p1 and m.n_vertices == n


def test_base_counts():
    # ({3,4,5,6},3)-spheres with 4..6 faces: tetrahedron; prism-like ones
    assert len(enumerate_base(4)) == 1
    assert len(enumerate_base(3)) == 0


def test_digon_insertion_on_tetrahedron():
    (tet,) = enumerate_base(4)
    out = insert_digons(tet)
    from sixspheres.symmetry import point_group
    assert sorted(point_group(m).name for m in out.values()) == ["D2", "D2d", "Td"]
    assert all(m.p_vector() == {2: 6, 3: 4} for m in out.values())


def test_unigon_rejects_bad_i():
    (tet,) = enumerate_base(4)
    with pytest.raises(ValueError):
        insert_unigons(dual(tet), 4)


def test_oracle_bound():
    with pytest.raises(BoundTooLarge):
        brute_force_oracle(13, 0)


def test_request_validation():
    with pytest.raises(ValueError):
        EnumerationRequest(max_n=0)
    with pytest.raises(ValueError):
        EnumerationRequest(max_n=3, p1_filter=5)


def test_count_table_and_mirror_flag():
    t = count_table(EnumerationRequest(max_n=6))
    assert t[6] == ORACLE_COUNTS[6]
    chiral = count_table(EnumerationRequest(max_n=6, dedup_mirror=False))
    assert all(c >= q for n in t for c, q in zip(chiral[n], t[n]))
    assert chiral != t


def test_threads_do_not_change_output():
    a = [code for _, _, code, _ in
         __import__("sixspheres.enumerator", fromlist=["x"]).enumerate_spheres(EnumerationRequest(max_n=8))]
    b = [code for _, _, code, _ in
         __import__("sixspheres.enumerator", fromlist=["x"]).enumerate_spheres(EnumerationRequest(max_n=8, threads=3))]
    assert a == b

import pytest
from hypothesis import given, strategies as st

from sixspheres import eisenstein as eis

ints = st.integers(min_value=-30, max_value=30)
nonzero = st.tuples(ints, ints).filter(lambda z: z != (0, 0))


def test_j_is_sixth_root():
    assert eis.j_power(6) == eis.ONE
    assert eis.mul(eis.J, eis.J) == eis.EisensteinInt(-1, 1)  # j^2 = j - 1


@given(st.tuples(ints, ints), st.tuples(ints, ints))
def test_norm_multiplicative(a, b):
    assert eis.norm(eis.mul(a, b)) == eis.norm(a) * eis.norm(b)


@given(st.tuples(ints, ints))
def test_complex_norm(z):
    c = eis.EisensteinInt(*z).to_complex()
    assert abs(abs(c) ** 2 - eis.norm(z)) < 1e-6


@given(nonzero)
def test_factor_rebuild(z):
    s, u, zp = eis.factor(z)
    assert eis.lattice_class(zp) == "B"
    assert eis.same_up_to_j2(eis.rebuild(s, u, zp), z)


@given(nonzero)
def test_class_invariant_under_j2(z):
    assert eis.lattice_class(z) == eis.lattice_class(eis.mul(z, eis.j_power(2)))


def test_classes():
    assert eis.lattice_class((1, 1)) == "A"
    assert eis.lattice_class((1, 0)) == "B"
    assert eis.lattice_class((0, 1)) == "Bj"
    with pytest.raises(eis.ZeroInput):
        eis.lattice_class((0, 0))


def test_divide_exact():
    assert eis.divide_exact((2, 2), (1, 1)) == (2, 0)
    with pytest.raises(ValueError):
        eis.divide_exact((1, 0), (1, 1))


@pytest.mark.parametrize("n,reps", [(1, [(1, 0)]), (3, [(1, 1)]), (7, [(2, 1)]), (49, [(5, 3), (7, 0)]),
                                    (48, [(4, 4)]), (2, [])])
def test_representations(n, reps):
    assert sorted(eis.representations(n)) == reps

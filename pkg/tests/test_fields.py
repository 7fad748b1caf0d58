import pytest

from twinlab.errors import ValidationError
from twinlab.fields import GF, intersection_dimension, rank, rref


@pytest.mark.parametrize('q', [2, 3, 4, 5])
def test_field_axioms(q):
    F = GF(q)
    for a in F.elements:
        assert F.add(a, F.neg(a)) == 0
        assert F.sub(a, a) == 0
        assert F.mul(a, 1) == a
        for b in F.elements:
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, b) == F.mul(b, a)
            for c in F.elements:
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b),
                                                      F.mul(a, c))
    for a in F.units:
        assert F.mul(a, F.inv(a)) == 1
        assert F.div(a, a) == 1


def test_gf4_characteristic_two():
    F = GF(4)
    assert F.characteristic == 2
    assert all(F.add(a, a) == 0 for a in F.elements)
    assert F.mul(3, 3) == 2


@pytest.mark.parametrize('q', [0, 1, 6, 7, 8])
def test_unsupported_orders(q):
    with pytest.raises(ValidationError):
        GF(q)


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        GF(3).inv(0)


class TestLinearAlgebra(object):

    def test_rref_is_canonical(self):
        F = GF(3)
        first = rref(F, [(1, 2, 0), (0, 1, 1)])
        second = rref(F, [(1, 1, 2), (1, 0, 1)])
        assert first == second == ((1, 0, 1), (0, 1, 1))

    def test_rank_drops_dependent_rows(self):
        F = GF(2)
        assert rank(F, [(1, 1, 0), (0, 1, 1), (1, 0, 1)]) == 2
        assert rref(F, []) == ()

    def test_intersection_dimension(self):
        F = GF(2)
        plane = [(1, 0, 0), (0, 1, 0)]
        other = [(0, 1, 0), (0, 0, 1)]
        assert intersection_dimension(F, plane, other) == 1
        assert intersection_dimension(F, plane, plane) == 2

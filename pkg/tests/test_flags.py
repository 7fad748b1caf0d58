import pytest

from twinlab.errors import CapExceededError, ValidationError
from twinlab.fields import GF
from twinlab.flags import (
    build_flag_building, flag_weyl_distance, permutation_word, subspaces,
    type_a_system,
)
from twinlab.geometry import (
    residue_size, verify_building_axioms, verify_sphere_product,
)


@pytest.mark.parametrize('q, n, k, count', [
    (2, 3, 1, 7),
    (2, 3, 2, 7),
    (3, 3, 1, 13),
    (2, 4, 2, 35),
    (2, 3, 0, 1),
])
def test_subspaces(q, n, k, count):
    found = subspaces(GF(q), n, k)
    assert len(found) == count
    assert len(set(found)) == count


@pytest.mark.parametrize('permutation, word', [
    ((1, 2, 3), ()),
    ((2, 1, 3), (0,)),
    ((1, 3, 2), (1,)),
    ((3, 2, 1), (0, 1, 0)),
])
def test_permutation_word(permutation, word):
    assert permutation_word(permutation) == word


def test_type_a_system():
    system = type_a_system(3)
    assert system.names == ('s1', 's2')
    assert system.m(0, 1) == 3


class TestFlagBuilding(object):

    @pytest.mark.parametrize('q, size', [(2, 21), (3, 52)])
    def test_size(self, q, size):
        geom = build_flag_building(3, q)
        assert len(geom) == size
        assert geom.complete
        assert geom.q_min == geom.q_max == q

    @pytest.mark.parametrize('n', [1, 4])
    def test_dimension_cap(self, n, no_cap_override):
        with pytest.raises(CapExceededError):
            build_flag_building(n, 2)

    def test_distance_to_itself(self, flag_building_2):
        C = flag_building_2.center
        assert flag_weyl_distance(C, C, GF(2)).is_identity()

    def test_distance_needs_same_dimension(self, flag_building_2):
        C = flag_building_2.center
        other = build_flag_building(2, 2).center
        with pytest.raises(ValidationError):
            flag_weyl_distance(C, other, GF(2))

    def test_opposite_chambers(self, flag_building_2):
        C = flag_building_2.center
        opposite = [D for D in flag_building_2.chambers
                    if flag_building_2.weyl_distance(C, D).length == 3]
        assert len(opposite) == 8

    def test_labels_are_distinct(self, flag_building_2):
        labels = {flag_building_2.label(C)
                  for C in flag_building_2.chambers}
        assert len(labels) == 21


class TestFlagLemmas(object):

    def test_sphere_sizes(self, flag_building_2):
        report = verify_sphere_product(
            flag_building_2, flag_building_2.center, 3)
        assert report.passed, report.witness
        assert report.counts['sphere_sizes'] == [1, 2, 2, 4, 4, 8]
        assert report.counts['claims'] == 6
        assert report.counts['chambers'] == 21

    def test_sphere_sizes_q3(self, flag_building_3):
        C = flag_building_3.chambers[-1]
        report = verify_sphere_product(flag_building_3, C, 3)
        assert report.passed, report.witness
        assert report.counts['sphere_sizes'] == [1, 3, 3, 9, 9, 27]

    @pytest.mark.parametrize('J, size', [
        ((), 1), ((0,), 3), ((1,), 3), ((0, 1), 21),
    ])
    def test_residue_size(self, flag_building_2, J, size):
        assert residue_size(flag_building_2, flag_building_2.center,
                            J) == size

    def test_building_axioms(self, flag_building_2):
        report = verify_building_axioms(flag_building_2)
        assert report.passed, report.witness
        assert report.counts['chambers'] == 21
        assert report.counts['triples'] == 21 * 21 * 2 * 2

import json

import pytest

from twinlab import coxeter
from twinlab.coxeter import (
    INFINITY, ball, in_parabolic, is_reduced, load_system, m_reduce,
    mii_class, multiply, parabolic_elements, system_from_json,
    validate_system, words_equal,
)
from twinlab.errors import CapExceededError, ValidationError

from twinlab_test_utils import systems


@pytest.fixture(scope='module')
def a2():
    return validate_system([[1, 3], [3, 1]], names=['s', 't'])


@pytest.mark.parametrize('matrix, message', [
    ([], 'rank 0'),
    ([[1, 3], [3]], 'has 1 entries'),
    ([[1, 2], [3, 1]], 'not symmetric'),
    ([[2, 3], [3, 1]], 'diagonal entry'),
    ([[1, 1], [1, 1]], 'at least 2'),
    ([[1, 2.5], [2.5, 1]], 'invalid Coxeter label'),
    ([[1, True], [True, 1]], 'invalid Coxeter label'),
    ([[1, 'x'], ['x', 1]], 'invalid Coxeter label'),
])
def test_validate_system_rejects(matrix, message):
    with pytest.raises(ValidationError) as exc:
        validate_system(matrix)
    assert message in str(exc.value)


@pytest.mark.parametrize('names', [
    ['s'],
    ['s', 's'],
    ['s', '1t'],
    ['s', None],
])
def test_validate_system_rejects_names(names):
    with pytest.raises(ValidationError):
        validate_system([[1, 3], [3, 1]], names=names)


def test_validate_system_defaults():
    system = validate_system([[1, None], [None, 1]])
    assert system.names == ('s0', 's1')
    assert system.m(0, 1) == INFINITY
    assert system.rank == 2


class TestSystemFiles(object):

    def test_zero_means_infinity(self):
        system = system_from_json({'rank': 2, 'm': [[1, 0], [0, 1]]})
        assert system.m(0, 1) == INFINITY

    def test_round_trip_of_labels(self, infinite_dihedral):
        assert infinite_dihedral.to_json_dict() == {
            'rank': 2, 'm': [[1, 0], [0, 1]], 'names': ['s0', 's1']}

    @pytest.mark.parametrize('data', [
        [],
        {'rank': 2},
        {'m': [[1]]},
        {'rank': 2, 'm': [[1, 0]]},
        {'rank': 0, 'm': []},
        {'rank': 1, 'm': [[1]], 'extra': True},
        {'rank': 2, 'm': [[1, 0], 'x']},
    ])
    def test_malformed(self, data):
        with pytest.raises(ValidationError):
            system_from_json(data)

    @pytest.mark.parametrize('name', systems.SHIPPED)
    def test_shipped_files_load(self, name):
        system = systems.shipped(name)
        assert system.rank >= 2

    def test_corrupted_file(self, corrupted_path):
        with pytest.raises(ValidationError):
            load_system(corrupted_path)

    def test_invalid_json(self, tmp_path):
        path = tmp_path / 'broken.json'
        path.write_text('{"rank": 2,')
        with pytest.raises(ValidationError):
            load_system(str(path))

    def test_written_system(self, tmp_path):
        path = systems.write_system(tmp_path, [[1, INFINITY], [INFINITY, 1]])
        with open(path) as f:
            assert json.load(f)['m'] == [[1, 0], [0, 1]]
        assert load_system(path).m(0, 1) == INFINITY


class TestWords(object):

    def test_parse_and_format(self, a2):
        word = a2.parse_word('s.t, s')
        assert word == (0, 1, 0)
        assert a2.format_word(word) == 's.t.s'
        assert a2.parse_word('1') == ()
        assert a2.format_word(()) == '1'

    def test_unknown_letter(self, a2):
        with pytest.raises(ValidationError):
            a2.parse_word('s x')
        with pytest.raises(ValidationError):
            m_reduce(a2, (0, 2))

    @pytest.mark.parametrize('word, normal_form', [
        ((), ()),
        ((0, 0), ()),
        ((0, 1, 0), (0, 1, 0)),
        ((1, 0, 1), (0, 1, 0)),
        ((0, 1, 0, 1), (1, 0)),
        ((1, 0, 1, 0, 1, 0), ()),
        ((1, 1, 0, 1, 1), (0,)),
    ])
    def test_m_reduce_a2(self, a2, word, normal_form):
        assert m_reduce(a2, word).word == normal_form

    def test_m_reduce_infinite_dihedral(self, infinite_dihedral):
        word = (0, 1, 0, 1, 0, 1)
        assert m_reduce(infinite_dihedral, word).word == word
        assert m_reduce(infinite_dihedral, (0, 1, 1, 0)).is_identity()

    @pytest.mark.parametrize('word, expected', [
        ((0, 1, 0), True),
        ((0, 1, 0, 1), False),
        ((0, 0), False),
        ((), True),
    ])
    def test_is_reduced(self, a2, word, expected):
        assert is_reduced(a2, word) is expected

    def test_mii_class_of_longest_element(self, a2):
        assert mii_class(a2, (0, 1, 0)) == ((0, 1, 0), (1, 0, 1))

    def test_products_and_inverses(self, a3):
        w = a3.element('s1.s2.s3.s2')
        assert (w * w.inverse()).is_identity()
        assert multiply(w, a3.identity) == w
        assert words_equal(a3, (0, 1, 0), (1, 0, 1))

    def test_elements_of_different_systems(self, a2, a3):
        with pytest.raises(ValidationError):
            multiply(a2.generator(0), a3.generator(0))


class TestBalls(object):

    @pytest.mark.parametrize('radius, size', [
        (0, 1), (1, 3), (2, 5), (3, 7),
    ])
    def test_infinite_dihedral(self, infinite_dihedral, radius, size):
        assert len(ball(infinite_dihedral, radius)) == size

    def test_finite_group_is_exhausted(self, a3):
        elements = ball(a3, 10)
        assert len(elements) == 24
        assert max(w.length for w in elements) == 6

    def test_shortlex_order(self, rank3_all_infinity):
        elements = ball(rank3_all_infinity, 2)
        assert elements == sorted(elements)
        assert [w.length for w in elements] == [0, 1, 1, 1] + [2] * 6

    def test_parabolic_ball(self, a3):
        elements = ball(a3, 5, generators=['s1', 's2'])
        assert len(elements) == 6
        assert all(in_parabolic(w, {0, 1}) for w in elements)

    def test_radius_cap(self, infinite_dihedral, no_cap_override):
        with pytest.raises(CapExceededError):
            ball(infinite_dihedral, coxeter.config.MAX_BALL_RADIUS + 1)

    def test_negative_radius(self, infinite_dihedral):
        with pytest.raises(ValidationError):
            ball(infinite_dihedral, -1)

    @pytest.mark.parametrize('subset, order', [
        ((), 1), ((0,), 2), ((0, 1), 6), ((0, 2), 4), ((0, 1, 2), 24),
    ])
    def test_parabolic_elements(self, a3, subset, order):
        assert len(parabolic_elements(a3, subset)) == order

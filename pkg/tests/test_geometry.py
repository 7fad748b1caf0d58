import math

import pytest

from twinlab.errors import PreconditionError, TruncationError
from twinlab.geometry import (
    enumerate_ball, residue_formula, residue_size, verify_building_axioms,
    verify_sphere_product, w_sphere,
)


@pytest.fixture(scope='module')
def dihedral_ball(infinite_dihedral):
    return enumerate_ball(infinite_dihedral, 3)


class TestThinBall(object):

    def test_shape(self, dihedral_ball):
        assert len(dihedral_ball) == 7
        assert not dihedral_ball.complete
        assert dihedral_ball.thin
        assert dihedral_ball.radius == 3
        assert dihedral_ball.center.is_identity()

    def test_margin(self, dihedral_ball, infinite_dihedral):
        assert dihedral_ball.margin(dihedral_ball.center) == 3
        s0 = infinite_dihedral.generator(0)
        assert dihedral_ball.margin(s0) == 2

    def test_weyl_distance(self, dihedral_ball, infinite_dihedral):
        u = infinite_dihedral.element('s0.s1')
        v = infinite_dihedral.element('s1')
        assert dihedral_ball.weyl_distance(u, v) == \
            infinite_dihedral.element('s1.s0.s1')

    def test_neighbors(self, dihedral_ball, infinite_dihedral):
        s0 = infinite_dihedral.generator(0)
        assert dihedral_ball.neighbors(s0, 0) == [infinite_dihedral.identity]
        assert dihedral_ball.neighbors(s0, 1) == [
            infinite_dihedral.element('s0.s1')]

    def test_sphere_inside_margin(self, dihedral_ball, infinite_dihedral):
        w = infinite_dihedral.element('s0.s1')
        assert w_sphere(dihedral_ball, dihedral_ball.center, w) == [w]

    def test_sphere_leaving_the_ball(self, dihedral_ball, infinite_dihedral):
        s0 = infinite_dihedral.generator(0)
        with pytest.raises(TruncationError):
            w_sphere(dihedral_ball, s0, infinite_dihedral.element('s1.s0.s1'))

    def test_sphere_product(self, dihedral_ball):
        report = verify_sphere_product(dihedral_ball, dihedral_ball.center, 3)
        assert report.passed, report.witness
        assert report.counts['sphere_sizes'] == [1] * 7

    def test_sphere_product_past_margin(self, dihedral_ball,
                                        infinite_dihedral):
        with pytest.raises(TruncationError):
            verify_sphere_product(
                dihedral_ball, infinite_dihedral.generator(0), 3)

    def test_infinite_residue(self, dihedral_ball):
        with pytest.raises(PreconditionError):
            residue_size(dihedral_ball, dihedral_ball.center, (0, 1))

    def test_rank_one_residue(self, dihedral_ball):
        assert residue_size(dihedral_ball, dihedral_ball.center, (0,)) == 2

    def test_building_axioms(self, dihedral_ball):
        report = verify_building_axioms(dihedral_ball)
        assert report.passed, report.witness


class TestCompleteThinGeometry(object):

    def test_finite_group_is_complete(self, a3):
        geom = enumerate_ball(a3, 6)
        assert geom.complete
        assert geom.radius is None
        assert geom.margin(geom.center) == math.inf

    def test_short_ball_is_not_complete(self, a3):
        assert not enumerate_ball(a3, 5).complete

    @pytest.mark.parametrize('J, size', [
        ((), 1), ((0,), 2), ((0, 1), 6), ((0, 2), 4), ((0, 1, 2), 24),
    ])
    def test_residue_formula(self, a3, J, size):
        geom = enumerate_ball(a3, 6)
        assert residue_formula(geom, J) == size
        assert residue_size(geom, geom.center, J) == size

    def test_sphere_product(self, a3):
        geom = enumerate_ball(a3, 6)
        report = verify_sphere_product(geom, geom.center, 6)
        assert report.passed, report.witness
        assert report.counts['chambers'] == 24

    def test_building_axioms(self, a3):
        report = verify_building_axioms(enumerate_ball(a3, 6))
        assert report.passed, report.witness

import pytest

from twinlab.errors import ValidationError
from twinlab.fields import GF
from twinlab.laurent import LaurentMatrix, LaurentPolynomial, window_polynomials


@pytest.fixture(scope='module')
def F2():
    return GF(2)


@pytest.fixture(scope='module')
def F3():
    return GF(3)


def poly(field, coeffs, low=0):
    return LaurentPolynomial(field, coeffs, low)


class TestLaurentPolynomial(object):

    def test_canonical_form(self, F2):
        assert poly(F2, (0, 0), 5) == LaurentPolynomial.zero(F2)
        assert poly(F2, (0, 0), 5).low == 0
        stripped = poly(F2, (0, 1, 0), -1)
        assert stripped.coeffs == (1,)
        assert stripped.low == 0
        assert hash(stripped) == hash(LaurentPolynomial.constant(F2, 1))

    def test_degrees(self, F3):
        p = poly(F3, (2, 0, 1), -1)
        assert p.valuation == -1
        assert p.degree == 1
        assert p.exponents() == [-1, 1]
        assert p.coefficient(0) == 0
        assert p.coefficient(7) == 0
        zero = LaurentPolynomial.zero(F3)
        assert zero.valuation is None
        assert zero.degree is None
        assert not zero

    def test_str(self, F3):
        assert str(poly(F3, (2, 1), -1)) == '2*t^-1 + 1'
        assert str(LaurentPolynomial.monomial(F3, 1, 1)) == 't'
        assert str(LaurentPolynomial.zero(F3)) == '0'

    def test_arithmetic(self, F2, F3):
        one_plus_t = poly(F2, (1, 1))
        assert one_plus_t * one_plus_t == poly(F2, (1, 0, 1))
        assert one_plus_t + one_plus_t == LaurentPolynomial.zero(F2)
        p = poly(F3, (1, 2), -1)
        assert p - p == LaurentPolynomial.zero(F3)
        assert -p == poly(F3, (2, 1), -1)
        assert p * 2 == poly(F3, (2, 1), -1)
        assert p.shift(3) == poly(F3, (1, 2), 2)

    @pytest.mark.parametrize('numerator, denominator, quotient', [
        (((1, 0, 1), 0), ((1, 1), 0), ((1, 1), 0)),
        (((1, 1), 0), ((1,), 1), ((1, 1), -1)),
        (((1, 1, 1), 0), ((1, 1), 0), None),
        (((), 0), ((1, 1), 0), ((), 0)),
    ])
    def test_exact_divide(self, F2, numerator, denominator, quotient):
        found = poly(F2, *numerator).exact_divide(poly(F2, *denominator))
        if quotient is None:
            assert found is None
        else:
            assert found == poly(F2, *quotient)

    def test_divide_by_zero(self, F2):
        with pytest.raises(ZeroDivisionError):
            poly(F2, (1,)).exact_divide(LaurentPolynomial.zero(F2))

    def test_window_polynomials(self, F3):
        assert len(window_polynomials(F3, 0, 1)) == 9
        assert window_polynomials(F3, 0, -1) == [LaurentPolynomial.zero(F3)]

    def test_sort_key_puts_zero_first(self, F2):
        values = [poly(F2, (1, 1)), LaurentPolynomial.zero(F2),
                  poly(F2, (1,))]
        ordered = sorted(values, key=LaurentPolynomial.sort_key)
        assert ordered[0].is_zero()


class TestLaurentMatrix(object):

    def test_diagonal_and_inverse(self, F3):
        t = LaurentPolynomial.monomial(F3, 2, -1)
        g = LaurentMatrix.diagonal(F3, t)
        assert g.d == LaurentPolynomial.monomial(F3, 2, 1)
        assert g.det() == LaurentPolynomial.constant(F3, 1)
        assert (g * g.inverse()).is_identity()
        assert g.is_monomial()
        assert g.exponent_bound() == 1

    def test_diagonal_needs_monomial(self, F3):
        with pytest.raises(ValidationError):
            LaurentMatrix.diagonal(F3, poly(F3, (1, 1)))

    def test_unipotent(self, F2):
        p = poly(F2, (1, 1), -1)
        g = LaurentMatrix.upper(F2, p) * LaurentMatrix.lower(F2, p)
        assert g.det() == LaurentPolynomial.constant(F2, 1)
        assert not g.is_monomial()
        assert g.min_valuation() == -2
        assert g.max_degree() == 0

    def test_conjugate_by(self, F3):
        n = LaurentMatrix(
            F3, LaurentPolynomial.zero(F3), LaurentPolynomial.constant(F3, 1),
            LaurentPolynomial.constant(F3, 2), LaurentPolynomial.zero(F3))
        u = LaurentMatrix.upper(F3, LaurentPolynomial.constant(F3, 1))
        conjugate = u.conjugate_by(n)
        assert conjugate.b.is_zero()
        assert not conjugate.c.is_zero()

    def test_as_lists(self, F2):
        assert LaurentMatrix.identity(F2).as_lists() == [['1', '0'],
                                                         ['0', '1']]

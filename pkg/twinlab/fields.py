"""
Table-driven arithmetic in the fields F_q for q in {2, 3, 4, 5}.

Field elements are the integers ``0 .. q-1``. For prime q they are residues;
for q = 4 the integer with bits ``b1 b0`` stands for ``b1*x + b0`` in
F_2[x]/(x^2 + x + 1).
"""
import functools
import itertools

from .config import FIELD_ORDERS
from .errors import ValidationError


def _f4_add(a, b):
    return a ^ b


def _f4_mul(a, b):
    product = 0
    for i in range(2):
        if (b >> i) & 1:
            product ^= a << i
    if product & 4:
        # x^2 = x + 1
        product ^= 0b111
    return product


class FiniteField(object):
    """
    A finite field of order ``q`` with precomputed tables.

    >>> F = GF(4)
    >>> F.mul(2, 2)
    3
    >>> F.inv(2)
    3
    """

    def __init__(self, q):
        if q not in FIELD_ORDERS:
            raise ValidationError(
                'unsupported field order {0}; expected one of {1}'.format(
                    q, ', '.join(str(x) for x in FIELD_ORDERS)))
        self.q = q
        if q == 4:
            self.characteristic = 2
            add, mul = _f4_add, _f4_mul
        else:
            self.characteristic = q
            add = (lambda a, b: (a + b) % q)
            mul = (lambda a, b: (a * b) % q)
        elements = range(q)
        self._add = tuple(tuple(add(a, b) for b in elements)
                          for a in elements)
        self._mul = tuple(tuple(mul(a, b) for b in elements)
                          for a in elements)
        self._neg = tuple(self._add[a].index(0) for a in elements)
        self._inv = (None,) + tuple(self._mul[a].index(1)
                                    for a in range(1, q))

    def __repr__(self):
        return 'GF({0})'.format(self.q)

    def __eq__(self, other):
        return isinstance(other, FiniteField) and other.q == self.q

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(('GF', self.q))

    zero = 0
    one = 1

    @property
    def elements(self):
        return range(self.q)

    @property
    def units(self):
        return range(1, self.q)

    def add(self, a, b):
        return self._add[a][b]

    def sub(self, a, b):
        return self._add[a][self._neg[b]]

    def neg(self, a):
        return self._neg[a]

    def mul(self, a, b):
        return self._mul[a][b]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError('0 has no inverse in GF({0})'.format(
                self.q))
        return self._inv[a]

    def div(self, a, b):
        return self._mul[a][self.inv(b)]

    def vectors(self, length):
        return itertools.product(self.elements, repeat=length)


@functools.lru_cache(maxsize=None)
def GF(q):
    return FiniteField(q)


def rref(field, rows):
    """
    Reduced row echelon form of ``rows``, zero rows dropped.

    The result is a tuple of tuples and is the same for every spanning set
    of a subspace.
    """
    matrix = [list(row) for row in rows]
    if not matrix:
        return ()
    width = len(matrix[0])
    pivot_row = 0
    for col in range(width):
        pivot = next((r for r in range(pivot_row, len(matrix))
                      if matrix[r][col]), None)
        if pivot is None:
            continue
        matrix[pivot_row], matrix[pivot] = matrix[pivot], matrix[pivot_row]
        scale = field.inv(matrix[pivot_row][col])
        matrix[pivot_row] = [field.mul(scale, x) for x in matrix[pivot_row]]
        for r in range(len(matrix)):
            factor = matrix[r][col]
            if r != pivot_row and factor:
                matrix[r] = [
                    field.sub(x, field.mul(factor, y))
                    for x, y in zip(matrix[r], matrix[pivot_row])
                ]
        pivot_row += 1
        if pivot_row == len(matrix):
            break
    return tuple(tuple(row) for row in matrix[:pivot_row])


def rank(field, rows):
    return len(rref(field, rows))


def intersection_dimension(field, first, second):
    """``dim(U ∩ V)`` for subspaces given by spanning rows."""
    return len(first) + len(second) - rank(field, list(first) + list(second))

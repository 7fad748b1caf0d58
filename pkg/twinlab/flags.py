"""
Flag buildings of SL_n(F_q).

Chambers are complete flags ``0 < V_1 < ... < V_{n-1} < F_q^n``; every
subspace is stored as its reduced row echelon basis, so two flags are equal
exactly when their tuples are.
"""
import itertools
from collections import namedtuple
from logging import getLogger

from . import config
from .coxeter import m_reduce, validate_system
from .errors import CapExceededError, ValidationError
from .fields import GF, intersection_dimension, rank
from .geometry import ChamberGeometry

logger = getLogger(__name__)


class FlagChamber(namedtuple('FlagChamber', ('subspaces',))):
    """A complete flag, one RREF basis per proper subspace."""
    __slots__ = ()

    @property
    def n(self):
        return len(self.subspaces) + 1

    @property
    def label(self):
        return '|'.join(
            '<' + ';'.join(''.join(str(x) for x in row) for row in basis) +
            '>'
            for basis in self.subspaces
        )


def subspaces(field, n, k):
    """All ``k``-dimensional subspaces of F_q^n as RREF bases."""
    found = []
    for pivots in itertools.combinations(range(n), k):
        free = [
            (row, col)
            for row, pivot in enumerate(pivots)
            for col in range(pivot + 1, n)
            if col not in pivots
        ]
        for values in field.vectors(len(free)):
            basis = [[0] * n for _ in range(k)]
            for row, pivot in enumerate(pivots):
                basis[row][pivot] = 1
            for (row, col), value in zip(free, values):
                basis[row][col] = value
            found.append(tuple(tuple(row) for row in basis))
    return sorted(found)


def type_a_system(n):
    """Coxeter system of type A_{n-1} with generators ``s1 .. s{n-1}``."""
    size = n - 1
    matrix = [
        [1 if i == j else 3 if abs(i - j) == 1 else 2 for j in range(size)]
        for i in range(size)
    ]
    return validate_system(
        matrix, names=['s{0}'.format(i + 1) for i in range(size)])


def _flags(field, n):
    levels = [subspaces(field, n, k) for k in range(1, n)]
    chains = [(V,) for V in levels[0]]
    for k in range(1, n - 1):
        chains = [
            chain + (V,)
            for chain in chains
            for V in levels[k]
            if rank(field, chain[-1] + V) == k + 1
        ]
    return [FlagChamber(chain) for chain in chains]


def _permutation(field, F, G):
    n = F.n
    full = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    first = ((),) + F.subspaces + (full,)
    second = ((),) + G.subspaces + (full,)
    dims = [
        [intersection_dimension(field, U, V) if U and V else 0
         for V in second]
        for U in first
    ]
    permutation = [None] * (n + 1)
    for j in range(1, n + 1):
        for i in range(1, n + 1):
            jump = (dims[i][j] - dims[i - 1][j] -
                    dims[i][j - 1] + dims[i - 1][j - 1])
            if jump == 1:
                permutation[j] = i
                break
    return permutation[1:]


def permutation_word(permutation):
    """
    Word in the adjacent transpositions for a permutation of ``1..n``.

    Right descents are removed one at a time, so the letters come out from
    the right end of the word.
    """
    p = list(permutation)
    letters = []
    while True:
        descent = next(
            (i for i in range(len(p) - 1) if p[i] > p[i + 1]), None)
        if descent is None:
            break
        p[descent], p[descent + 1] = p[descent + 1], p[descent]
        letters.append(descent)
    return tuple(reversed(letters))


def flag_weyl_distance(F, G, field, system=None):
    """
    Relative position of two flags as an element of ``S_n``.

    ``w`` is the permutation with
    ``dim(V_i ∩ V'_j) = #{k <= j : w(k) <= i}``.
    """
    if F.n != G.n:
        raise ValidationError('flags live in different dimensions')
    if system is None:
        system = type_a_system(F.n)
    permutation = _permutation(field, F, G)
    return m_reduce(system, permutation_word(permutation))


def build_flag_building(n, q):
    """
    The complete flag building of F_q^n, thickness ``q`` everywhere.

    >>> len(build_flag_building(3, 2))
    21
    """
    if n < 2 or n > config.max_flag_dimension():
        raise CapExceededError('flag dimension', config.max_flag_dimension(),
                               n)
    field = GF(q)
    system = type_a_system(n)
    chambers = _flags(field, n)
    config.check_cap('flag building size', len(chambers),
                     config.max_ball_size())
    logger.debug('flag building n=%d q=%d has %d chambers', n, q,
                 len(chambers))

    def distance(F, G):
        return flag_weyl_distance(F, G, field, system)

    geom = ChamberGeometry(
        system, chambers, distance, {s: q for s in system.generators},
        complete=True)
    geom.field = field
    return geom

"""
The twin BN-pair of SL_2(F_q[t, t⁻¹]).

``B_+`` holds the matrices with entries in F_q[t] that are upper triangular
at ``t = 0``; ``B_-`` the matrices with entries in F_q[t⁻¹] that are lower
triangular at ``t = ∞``. Their intersection is the torus
``T = {diag(a, a⁻¹)}``. The Weyl group is the infinite dihedral group on
``s0`` and ``s1``.

Borels and parahorics are stabilizers of lattices, so membership is a
bound on the exponents of each entry. Bounds are tuples with one entry per
matrix entry in the order ``(a, b, c, d)``.
"""
import enum
import functools
import itertools
import random
from collections import namedtuple
from logging import getLogger

from . import config
from .coxeter import INFINITY, alternating_word, m_reduce, validate_system
from .errors import (
    CapExceededError, InstabilityError, LemmaViolation, PreconditionError,
    ValidationError,
)
from .fields import GF, rank
from .laurent import LaurentMatrix, LaurentPolynomial, window_polynomials
from .lemmas import LemmaReport

logger = getLogger(__name__)

S0, S1 = 0, 1

# Lower bounds on the valuation of (a, b, c, d) for the positive parahorics
# and upper bounds on the degree for the negative ones, keyed by I.
PLUS_WINDOWS = {
    frozenset(): (0, 0, 1, 0),
    frozenset({S1}): (0, 0, 0, 0),
    frozenset({S0}): (0, -1, 1, 0),
}
MINUS_WINDOWS = {
    frozenset(): (0, -1, 0, 0),
    frozenset({S1}): (0, 0, 0, 0),
    frozenset({S0}): (0, -1, 1, 0),
}


class Sign(enum.Enum):
    plus = '+'
    minus = '-'


class TwinContext(object):
    """
    The SL_2 twin model over F_q.

    >>> ctx = TwinContext(3)
    >>> len(ctx.torus)
    2
    """

    def __init__(self, q):
        self.q = q
        self.field = GF(q)
        self.system = validate_system(
            [[1, INFINITY], [INFINITY, 1]], names=['s0', 's1'])
        F = self.field
        self.zero = LaurentPolynomial.zero(F)
        self.one = LaurentPolynomial.constant(F, 1)
        self.t = LaurentPolynomial.monomial(F, 1, 1)
        self.identity = LaurentMatrix.identity(F)
        minus_one = F.neg(1)
        self.representatives = {
            S0: LaurentMatrix(
                F, self.zero, LaurentPolynomial.monomial(F, 1, -1),
                LaurentPolynomial.monomial(F, minus_one, 1), self.zero),
            S1: LaurentMatrix(
                F, self.zero, self.one,
                LaurentPolynomial.constant(F, minus_one), self.zero),
        }
        self.torus = [LaurentMatrix.diagonal(F, u) for u in F.units]
        self._birkhoff_tables = {}
        self._samples = {}

    def __repr__(self):
        return 'TwinContext(q={0})'.format(self.q)

    def borel_plus(self, g):
        return in_borel(g, Sign.plus, self)

    def borel_minus(self, g):
        return in_borel(g, Sign.minus, self)

    def element(self, word):
        return self.system.element(word)


class FiniteSubgroupSample(namedtuple('FiniteSubgroupSample',
                                      ('w', 'elements', 'order'))):
    """``B_+ ∩ wB_-w⁻¹`` listed in canonical order."""
    __slots__ = ()


def _check_element(w, ctx):
    if w.system != ctx.system:
        raise ValidationError(
            'w must be an element of the infinite dihedral group on s0, s1')


def monomial_of(w, ctx):
    """
    The fixed representative of ``w`` in ``N``.

    ``s1 ↦ [[0, 1], [-1, 0]]`` and ``s0 ↦ [[0, t⁻¹], [-t, 0]]``, so
    ``s0 s1 ↦ diag(-t⁻¹, -t)``.
    """
    _check_element(w, ctx)
    g = ctx.identity
    for s in w.word:
        g = g * ctx.representatives[s]
    return g


def _within(g, lower=None, upper=None):
    for k, entry in enumerate(g.entries):
        if not entry:
            continue
        if lower is not None and entry.valuation < lower[k]:
            return False
        if upper is not None and entry.degree > upper[k]:
            return False
    return True


def _spherical(ctx, I):
    I = ctx.system.subset(I)
    if len(I) > 1:
        raise PreconditionError(
            '{0} is not spherical in the infinite dihedral group'.format(
                ctx.system.format_subset(I)))
    return I


def in_parahoric(g, sign, I, ctx):
    """Membership in the parahoric ``P_I`` of the given sign."""
    I = _spherical(ctx, I)
    if Sign(sign) is Sign.plus:
        return _within(g, lower=PLUS_WINDOWS[I])
    return _within(g, upper=MINUS_WINDOWS[I])


def in_borel(g, sign, ctx):
    """
    >>> ctx = TwinContext(2)
    >>> in_borel(LaurentMatrix.upper(ctx.field, ctx.t), '+', ctx)
    True
    >>> in_borel(LaurentMatrix.upper(ctx.field, ctx.t), '-', ctx)
    False
    """
    return in_parahoric(g, sign, (), ctx)


def _conjugated_upper(n, upper):
    """
    Upper degree bounds of ``n Y n⁻¹`` for ``Y`` bounded by ``upper`` and a
    monomial ``n`` of determinant one.
    """
    ua, ub, uc, ud = upper
    if n.b.is_zero():
        k = n.a.valuation
        return (ua, ub + 2 * k, uc - 2 * k, ud)
    k = n.b.valuation
    return (ud, uc + 2 * k, ub - 2 * k, ua)


def _enumerate(ctx, n, lower, minus_upper, degree_bound):
    upper = _conjugated_upper(n, minus_upper)
    high = tuple(min(u, degree_bound) for u in upper)
    F = ctx.field
    windows = [window_polynomials(F, lo, hi) for lo, hi in zip(lower, high)]
    A, B, C, D = windows
    candidates = len(A) * len(B) * len(C) + len(B) * len(C) * len(D)
    config.check_cap('twin candidates', candidates,
                     config.max_twin_candidates())
    found = set()
    for a, b, c in itertools.product(A, B, C):
        numerator = ctx.one + b * c
        if a.is_zero():
            if not numerator.is_zero():
                continue
            options = D
        else:
            d = numerator.exact_divide(a)
            if d is None:
                continue
            options = [d]
        for d in options:
            g = LaurentMatrix(F, a, b, c, d)
            if _within(g, lower, high):
                found.add(g)
    conjugate = n.inverse()
    for g in found:
        if not _within(conjugate * g * n, upper=minus_upper):
            raise LemmaViolation(
                'enumerated element leaves the conjugated window',
                witness=g.as_lists())
    return found


def _stable_enumeration(ctx, w, lower, minus_upper, degree_bound, what):
    n = monomial_of(w, ctx)
    first = _enumerate(ctx, n, lower, minus_upper, degree_bound)
    second = _enumerate(ctx, n, lower, minus_upper, degree_bound + 1)
    if first != second:
        raise InstabilityError(
            '{0} for w = {1} changes from {2} to {3} elements when the '
            'degree bound grows from {4} to {5}'.format(
                what, w.label, len(first), len(second), degree_bound,
                degree_bound + 1))
    return sorted(first, key=LaurentMatrix.sort_key)


def _check_length(w, ctx):
    cap = config.twin_length_cap(ctx.q)
    if w.length > cap:
        raise CapExceededError(
            'ℓ(w) for q = {0}'.format(ctx.q), cap, w.length)


def intersection_subgroup(w, ctx, degree_bound=None):
    """
    Enumerate ``B_+ ∩ wB_-w⁻¹``.

    Candidates are the matrices of ``B_+`` whose entries fit the exponent
    windows of ``nB_-n⁻¹`` with ``n = monomial_of(w)``, truncated at
    ``degree_bound``. The enumeration is repeated at ``degree_bound + 1``
    and must not change; the result is checked to be a group containing
    ``T``.
    """
    _check_element(w, ctx)
    _check_length(w, ctx)
    if degree_bound is None:
        degree_bound = w.length
    if degree_bound < w.length:
        raise PreconditionError(
            'degree bound {0} is below ℓ(w) = {1}'.format(
                degree_bound, w.length))
    key = (w, degree_bound)
    if key in ctx._samples:
        return ctx._samples[key]
    elements = _stable_enumeration(
        ctx, w, PLUS_WINDOWS[frozenset()], MINUS_WINDOWS[frozenset()],
        degree_bound, 'B_+ ∩ wB_-w⁻¹')
    members = set(elements)
    for g in elements:
        if g.inverse() not in members:
            raise LemmaViolation('not closed under inverses',
                                 witness=g.as_lists())
        for h in elements:
            if g * h not in members:
                raise LemmaViolation(
                    'not closed under products',
                    witness=[g.as_lists(), h.as_lists()])
    missing = [x for x in ctx.torus if x not in members]
    if missing:
        raise LemmaViolation('T is not contained in the intersection',
                             witness=missing[0].as_lists())
    logger.debug('|B_+ ∩ wB_-w⁻¹| = %d for w = %s, q = %d', len(elements),
                 w.label, ctx.q)
    sample = ctx._samples[key] = FiniteSubgroupSample(
        w, elements, len(elements))
    return sample


def negative_orbit(sample, ctx):
    """
    Size of the orbit of ``C_- = B_-`` under the sample.

    Cosets ``g B_-`` and ``h B_-`` agree when ``h⁻¹g ∈ B_-``. The orbit size
    times ``|T|`` must equal the order of the sample.
    """
    representatives = []
    for g in sample.elements:
        if not any(in_borel(r.inverse() * g, Sign.minus, ctx)
                   for r in representatives):
            representatives.append(g)
    size = len(representatives)
    if size * len(ctx.torus) != sample.order:
        raise LemmaViolation(
            'orbit of C_- has {0} chambers, expected {1}'.format(
                size, sample.order // len(ctx.torus)),
            witness={'w': sample.w.label, 'orbit': size,
                     'order': sample.order})
    return size


def negative_stabilizer(sample, ctx):
    """The elements of the sample that fix ``C_-``; always ``T``."""
    stabilizer = [g for g in sample.elements
                  if in_borel(g, Sign.minus, ctx)]
    if set(stabilizer) != set(ctx.torus):
        raise LemmaViolation(
            'stabilizer of C_- has {0} elements, |T| = {1}'.format(
                len(stabilizer), len(ctx.torus)),
            witness={'w': sample.w.label, 'stabilizer': len(stabilizer)})
    return stabilizer


def alternating_elements(ctx, length):
    """The two elements of length ``length``, or the identity."""
    if length == 0:
        return [ctx.system.identity]
    return sorted({m_reduce(ctx.system, alternating_word(S0, S1, length)),
                   m_reduce(ctx.system, alternating_word(S1, S0, length))})


def finite_subgroup_series(ctx, max_length):
    """
    Samples along ``1, s0, s0 s1, s0 s1 s0, ...``; their orders grow without
    bound.
    """
    series = []
    for length in range(max_length + 1):
        w = m_reduce(ctx.system, alternating_word(S0, S1, length))
        series.append(intersection_subgroup(w, ctx))
    for before, after in zip(series, series[1:]):
        if after.order <= before.order:
            raise LemmaViolation(
                'orders do not increase from {0} to {1}'.format(
                    before.w.label, after.w.label),
                witness=[before.order, after.order])
    return series


def _lattice_alpha(i):
    return (i // 2, i // 2 + i % 2)


LATTICE_BETAS = ((0, 0), (-1, 0))


def _lattice_dimension(ctx, g, alpha, beta):
    """
    ``dim(Λ ∩ g M)`` for ``Λ = {val x >= α_1, val y >= α_2}`` and
    ``M = {deg x <= β_1, deg y <= β_2}``.
    """
    if g.is_monomial():
        total = 0
        for r, row in enumerate(((g.a, g.b), (g.c, g.d))):
            col = 0 if row[0] else 1
            bound = beta[col] + row[col].valuation
            total += max(0, bound - alpha[r] + 1)
        return total
    shift = g.min_valuation()
    lo = min(alpha) + shift
    unknowns = [(var, p) for var in (0, 1)
                for p in range(lo, beta[var] + 1)]
    if not unknowns:
        return 0
    rows = []
    for r, row in enumerate(((g.a, g.b), (g.c, g.d))):
        for e in range(lo + shift, alpha[r]):
            equation = [row[var].coefficient(e - p) for var, p in unknowns]
            if any(equation):
                rows.append(equation)
    return len(unknowns) - rank(ctx.field, rows)


def _positions(radius):
    return sorted(
        ((i, j) for i in range(-radius, radius) for j in range(2)),
        key=lambda pos: (abs(pos[0]), pos[0], pos[1]),
    )


def _birkhoff_table(ctx, max_length):
    try:
        return ctx._birkhoff_tables[max_length]
    except KeyError:
        pass
    positions = _positions(max_length + 4)
    table = []
    seen = {}
    for length in range(max_length + 1):
        for w in alternating_elements(ctx, length):
            n = monomial_of(w, ctx)
            vector = tuple(
                _lattice_dimension(ctx, n, _lattice_alpha(i),
                                   LATTICE_BETAS[j])
                for i, j in positions
            )
            if vector in seen:
                raise LemmaViolation(
                    'lattice invariants of {0} and {1} agree'.format(
                        seen[vector].label, w.label))
            seen[vector] = w
            table.append((w, vector))
    ctx._birkhoff_tables[max_length] = positions, table
    return positions, table


def birkhoff_type(g, ctx):
    """
    The ``w`` with ``g ∈ B_+ monomial_of(w) B_-``.

    The dimensions ``dim(Λ_i ∩ gM_j)`` over the lattice chains fixed by
    ``B_+`` and ``B_-`` depend only on the double coset of ``g``. They are
    compared with those of the monomial representatives of length at most
    ``2E + 4``, where ``E`` bounds the exponents of ``g``.
    """
    if g.det() != ctx.one:
        raise PreconditionError('g must have determinant 1')
    max_length = 2 * g.exponent_bound() + 4
    positions, table = _birkhoff_table(ctx, max_length)
    candidates = list(range(len(table)))
    for index, (i, j) in enumerate(positions):
        dim = _lattice_dimension(ctx, g, _lattice_alpha(i), LATTICE_BETAS[j])
        candidates = [k for k in candidates if table[k][1][index] == dim]
        if len(candidates) <= 1:
            break
    if len(candidates) != 1:
        raise CapExceededError('Birkhoff representative length', max_length)
    return table[candidates[0]][0]


def random_borel(ctx, sign, degree, rng):
    """A random element of ``B_±`` with entries of degree at most
    ``degree`` in ``t^{±1}``."""
    F = ctx.field

    def polynomial(low, high):
        return LaurentPolynomial(
            F, [rng.randrange(F.q) for _ in range(high - low + 1)], low)

    unit = rng.choice(list(F.units))
    if Sign(sign) is Sign.plus:
        upper, lower = polynomial(0, degree), polynomial(1, degree)
    else:
        upper, lower = polynomial(-degree, -1), polynomial(-degree, 0)
    return (LaurentMatrix.diagonal(F, unit) *
            LaurentMatrix.upper(F, upper) * LaurentMatrix.lower(F, lower))


def parabolic_intersection_order(w, I, J, ctx, degree_bound=None):
    """
    ``|P_I ∩ wP_Jw⁻¹|`` for spherical ``I`` and ``J``.

    The index over ``B_+ ∩ wB_-w⁻¹`` must be at most
    ``[P_I : B_+][P_J : B_-] = (q + 1)^{|I| + |J|}``.
    """
    _check_element(w, ctx)
    _check_length(w, ctx)
    I, J = _spherical(ctx, I), _spherical(ctx, J)
    if degree_bound is None:
        degree_bound = w.length + 1
    elements = _stable_enumeration(
        ctx, w, PLUS_WINDOWS[I], MINUS_WINDOWS[J], degree_bound,
        'P_I ∩ wP_Jw⁻¹')
    base = intersection_subgroup(w, ctx, max(degree_bound, w.length))
    members = set(elements)
    if not members.issuperset(base.elements):
        raise LemmaViolation('B_+ ∩ wB_-w⁻¹ is not contained in '
                             'P_I ∩ wP_Jw⁻¹', witness=w.label)
    order = len(elements)
    bound = (ctx.q + 1) ** (len(I) + len(J))
    if order % base.order or order // base.order > bound:
        raise LemmaViolation(
            'index {0}/{1} exceeds (q+1)^(|I|+|J|) = {2}'.format(
                order, base.order, bound),
            witness={'w': w.label, 'I': ctx.system.format_subset(I),
                     'J': ctx.system.format_subset(J)})
    return order


def verify_intersection_orders(ctx, length_cap):
    """Every ``w`` up to ``length_cap``: ``|B_+ ∩ wB_-w⁻¹| = |T| q^ℓ(w)``."""
    checked = []
    for length in range(length_cap + 1):
        for w in alternating_elements(ctx, length):
            sample = intersection_subgroup(w, ctx)
            expected = len(ctx.torus) * ctx.q ** w.length
            if sample.order != expected:
                return LemmaReport.failure(
                    'intersection_order',
                    {'w': w.label, 'order': sample.order,
                     'expected': expected},
                    q=ctx.q)
            checked.append(sample.order)
    return LemmaReport.success('intersection_order', q=ctx.q,
                               elements=len(checked), orders=checked)


def verify_negative_orbits(ctx, length_cap):
    orbits = []
    for length in range(length_cap + 1):
        for w in alternating_elements(ctx, length):
            sample = intersection_subgroup(w, ctx)
            orbits.append(negative_orbit(sample, ctx))
    return LemmaReport.success('negative_orbit', q=ctx.q, orbits=orbits)


def verify_negative_stabilizers(ctx, length_cap):
    samples = 0
    for length in range(length_cap + 1):
        for w in alternating_elements(ctx, length):
            negative_stabilizer(intersection_subgroup(w, ctx), ctx)
            samples += 1
    return LemmaReport.success('negative_stabilizer', q=ctx.q,
                               samples=samples, torus=len(ctx.torus))


def verify_unbounded_orders(ctx, length_cap):
    series = finite_subgroup_series(ctx, length_cap)
    return LemmaReport.success(
        'unbounded_orders', q=ctx.q, orders=[s.order for s in series])


def verify_parabolic_indices(ctx, length_cap):
    spherical = [frozenset(), frozenset({S0}), frozenset({S1})]
    pairs = 0
    indices = set()
    for length in range(length_cap + 1):
        for w in alternating_elements(ctx, length):
            base = intersection_subgroup(w, ctx).order
            for I, J in itertools.product(spherical, repeat=2):
                order = parabolic_intersection_order(w, I, J, ctx)
                indices.add(order // base)
                pairs += 1
    return LemmaReport.success('parabolic_index', q=ctx.q, triples=pairs,
                               indices=sorted(indices))


def verify_birkhoff_types(ctx, length_cap, samples=8, degree=1, seed=0):
    """
    ``birkhoff_type`` recovers ``w`` from ``monomial_of(w)`` and from random
    elements ``b_+ monomial_of(w) b_-`` of its double coset.
    """
    rng = random.Random(seed)
    elements = [w for length in range(length_cap + 1)
                for w in alternating_elements(ctx, length)]
    for w in elements:
        found = birkhoff_type(monomial_of(w, ctx), ctx)
        if found != w:
            return LemmaReport.failure(
                'birkhoff_type', {'w': w.label, 'found': found.label},
                q=ctx.q)
    for _ in range(samples):
        w = rng.choice(elements)
        g = (random_borel(ctx, Sign.plus, degree, rng) *
             monomial_of(w, ctx) *
             random_borel(ctx, Sign.minus, degree, rng))
        found = birkhoff_type(g, ctx)
        if found != w:
            return LemmaReport.failure(
                'birkhoff_type',
                {'w': w.label, 'found': found.label, 'g': g.as_lists()},
                q=ctx.q)
    return LemmaReport.success('birkhoff_type', q=ctx.q,
                               representatives=len(elements),
                               samples=samples)


@functools.lru_cache(maxsize=None)
def twin_context(q):
    return TwinContext(q)

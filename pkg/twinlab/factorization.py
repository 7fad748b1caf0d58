"""
Exhaustive check that products of tilde-cosets cannot collapse.

For generators ``t_1, ..., t_m`` with ``m(t_{i-1}, t_i) = ∞`` and
``J = S \\ {t_1, ..., t_m}`` put ``W~_i = W_{J ∪ {t_i}} \\ W_J``. Every
reduced decomposition of a product ``w_1 ⋯ w_m`` with ``w_i ∈ W~_i`` splits
into consecutive blocks, block ``i`` spelling an element of ``W~_i``, and
the product has length at least ``m``.
"""
from logging import getLogger

from . import config
from .coxeter import INFINITY, ball, mii_class, multiply
from .errors import PreconditionError
from .lemmas import LemmaReport

logger = getLogger(__name__)


def _tilde_elements(system, J, t, max_length):
    allowed = J | {t}
    return [
        w for w in ball(system, max_length, generators=allowed)
        if t in w.letters()
    ]


def splits(word, t_seq, J):
    """
    True iff ``word`` cuts into ``len(t_seq)`` non-empty blocks where block
    ``i`` only uses letters of ``J ∪ {t_i}`` and contains ``t_i``.

    Blocks of a reduced word are reduced, so such a block spells an element
    of ``W_{J ∪ {t_i}}`` outside ``W_J``.
    """
    n, m = len(word), len(t_seq)
    # reachable[i] holds the cut positions after block i
    reachable = {0}
    for t in t_seq:
        allowed = J | {t}
        following = set()
        for start in reachable:
            seen_t = False
            for end in range(start, n):
                if word[end] not in allowed:
                    break
                seen_t = seen_t or word[end] == t
                if seen_t:
                    following.add(end + 1)
        reachable = following
        if not reachable:
            return False
    return n in reachable and m > 0


def check_tilde_factorization(system, t_seq, J=None, length_cap=8):
    """
    Verify the factorization statement on all products of total length at
    most ``length_cap``.

    Parameters
    ----------
    system: CoxeterSystem
    t_seq: sequence of generators
        Consecutive entries must have infinite label.
    J: set of generators, optional
        Must equal ``S \\ set(t_seq)``; computed when omitted.
    length_cap: int
        Bound on ``ℓ(w_1) + ... + ℓ(w_m)``.
    """
    t_seq = tuple(system.index(t) for t in t_seq)
    if not t_seq:
        raise PreconditionError('t_seq must not be empty')
    for a, b in zip(t_seq, t_seq[1:]):
        if system.m(a, b) != INFINITY:
            raise PreconditionError(
                'm({0}, {1}) = {2} is finite'.format(
                    system.names[a], system.names[b], system.m(a, b)))
    expected_J = frozenset(system.generators) - frozenset(t_seq)
    if J is None:
        J = expected_J
    J = system.subset(J)
    if J != expected_J:
        raise PreconditionError(
            'J must be S \\ {{t_1, ..., t_m}} = {0}'.format(
                system.format_subset(expected_J)))
    config.check_cap('length cap', length_cap, config.max_word_length())

    m = len(t_seq)
    if length_cap < m:
        return LemmaReport.success(
            'tilde_factorization', products=0, decompositions=0, factors=m)
    factor_sets = {
        t: _tilde_elements(system, J, t, length_cap - (m - 1))
        for t in set(t_seq)
    }

    products = set()
    tuples = 0

    def extend(index, partial, used):
        nonlocal tuples
        if index == m:
            tuples += 1
            products.add(partial)
            return
        remaining = m - index - 1
        for w in factor_sets[t_seq[index]]:
            if used + w.length + remaining > length_cap:
                break
            extend(index + 1, multiply(partial, w), used + w.length)

    extend(0, system.identity, 0)

    decompositions = 0
    for product in sorted(products):
        if product.length < m:
            return LemmaReport.failure(
                'tilde_factorization',
                {'product': product.label, 'length': product.length,
                 'reason': 'shorter than m'},
                products=len(products), factors=m)
        for word in mii_class(system, product.word):
            decompositions += 1
            if not splits(word, t_seq, J):
                return LemmaReport.failure(
                    'tilde_factorization',
                    {'product': product.label,
                     'decomposition': system.format_word(word),
                     'reason': 'decomposition does not split'},
                    products=len(products), factors=m)
    logger.debug('tilde factorization %s: %d tuples, %d products',
                 system.format_word(t_seq), tuples, len(products))
    return LemmaReport.success(
        'tilde_factorization', tuples=tuples, products=len(products),
        decompositions=decompositions, factors=m)

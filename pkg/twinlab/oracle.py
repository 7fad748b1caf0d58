"""
Brute-force Cayley graph oracle.

Elements are identified by closing words under all M-operations, with no
use of :func:`twinlab.coxeter.m_reduce`. The key of a word is the
ShortLex-least word among the shortest words of its closure; by Tits'
theorem this is the normal form of the element.
"""
import itertools
from logging import getLogger

from . import config
from .coxeter import INFINITY, is_reduced, m_reduce
from .errors import CapExceededError, LemmaViolation, ValidationError
from .lemmas import LemmaReport

logger = getLogger(__name__)


def _m_moves(system, word):
    n = len(word)
    for i in range(n - 1):
        s, t = word[i], word[i + 1]
        if s == t:
            yield word[:i] + word[i + 2:]
            continue
        m = system.m(s, t)
        if m == INFINITY or i + m > n:
            continue
        if all(word[i + k] == (s, t)[k % 2] for k in range(m)):
            yield word[:i] + tuple((t, s)[k % 2] for k in range(m)) + \
                word[i + m:]


def m_closure(system, word):
    """Every word reachable from ``word`` by MI deletions and MII flips."""
    word = tuple(word)
    seen = {word}
    stack = [word]
    while stack:
        current = stack.pop()
        for moved in _m_moves(system, current):
            if moved not in seen:
                seen.add(moved)
                stack.append(moved)
    return seen


def closure_key(system, word):
    closure = m_closure(system, word)
    shortest = min(len(w) for w in closure)
    return min(w for w in closure if len(w) == shortest)


class CayleyOracle(object):
    """
    The ball of radius ``radius`` in the Cayley graph of ``W``.

    Attributes
    ----------
    elements: dict
        Normal form -> length, for every element of the ball.
    layers: list of lists
        Normal forms by length, each layer sorted.
    adjacency: dict
        ``(normal form, s)`` -> normal form of the right multiple by ``s``,
        or ``None`` when it leaves the ball.
    """

    def __init__(self, system, radius, layers, adjacency):
        self.system = system
        self.radius = radius
        self.layers = layers
        self.adjacency = adjacency
        self.elements = {w: k for k, layer in enumerate(layers) for w in layer}

    def __len__(self):
        return len(self.elements)

    def __contains__(self, word):
        return tuple(word) in self.elements

    def layer_sizes(self):
        return [len(layer) for layer in self.layers]

    def identify(self, word):
        """Normal form of ``word`` by walking the Cayley graph."""
        current = ()
        for s in self.system.check_word(word):
            current = self.adjacency[current, s]
            if current is None:
                raise ValidationError(
                    'word {0} leaves the oracle ball of radius {1}'.format(
                        self.system.format_word(word), self.radius))
        return current

    def length(self, word):
        return self.elements[self.identify(word)]

    def check_involutions(self):
        """Pairs ``(w, s)`` where moving by ``s`` twice does not return."""
        return sorted(
            (w, s) for (w, s), v in self.adjacency.items()
            if v is not None and self.adjacency[v, s] != w
        )


def cayley_bfs_oracle(system, radius):
    """
    Breadth-first enumeration of ``W`` up to length ``radius``.

    Each candidate ``w s`` is identified by its closure key; keys shorter
    than the current layer must already be known.
    """
    if radius < 0:
        raise ValidationError('radius must be non-negative')
    config.check_cap('oracle radius', radius, config.max_ball_radius())
    size_cap = config.max_ball_size()
    layers = [[()]]
    known = {(): 0}
    keys = {}
    k = 0
    while True:
        found = set()
        for w in layers[-1]:
            for s in system.generators:
                key = closure_key(system, w + (s,))
                keys[w, s] = key
                if len(key) == k + 1:
                    found.add(key)
                elif key not in known:
                    raise LemmaViolation(
                        'closure of {0} is shorter but unknown'.format(
                            system.format_word(w + (s,))),
                        witness=key)
        if k == radius or not found:
            break
        k += 1
        layers.append(sorted(found))
        for key in found:
            known[key] = k
        if len(known) > size_cap:
            raise CapExceededError('oracle ball size', size_cap, len(known))
    adjacency = {
        ws: (key if key in known else None) for ws, key in keys.items()
    }
    logger.debug('oracle of radius %d: layer sizes %s', radius,
                 [len(layer) for layer in layers])
    return CayleyOracle(system, radius, layers, adjacency)


def word_check_radius(system, radius, limit=None):
    """Largest ``r <= radius`` with at most ``limit`` words of length
    ``<= r``."""
    limit = config.max_word_checks() if limit is None else limit
    while radius > 0 and sum(
            system.rank ** k for k in range(radius + 1)) > limit:
        radius -= 1
    return radius


def verify_word_problem(system, radius):
    """
    Compare :func:`~twinlab.coxeter.m_reduce` and
    :func:`~twinlab.coxeter.is_reduced` with the oracle on every word of
    length at most ``radius``.
    """
    oracle = cayley_bfs_oracle(system, radius)
    broken = oracle.check_involutions()
    if broken:
        w, s = broken[0]
        return LemmaReport.failure(
            'word_problem',
            {'word': system.format_word(w), 'generator': system.names[s],
             'reason': 'right multiplication is not an involution'})
    words = 0
    for length in range(radius + 1):
        for word in itertools.product(system.generators, repeat=length):
            words += 1
            expected = oracle.identify(word)
            found = m_reduce(system, word).word
            if found != expected:
                return LemmaReport.failure(
                    'word_problem',
                    {'word': system.format_word(word),
                     'm_reduce': system.format_word(found),
                     'oracle': system.format_word(expected)},
                    words=words)
            if is_reduced(system, word) != (len(expected) == length):
                return LemmaReport.failure(
                    'word_problem',
                    {'word': system.format_word(word),
                     'reason': 'M-reducedness disagrees with the oracle'},
                    words=words)
    return LemmaReport.success(
        'word_problem', words=words, elements=len(oracle),
        layer_sizes=oracle.layer_sizes())

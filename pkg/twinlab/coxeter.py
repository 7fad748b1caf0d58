"""
Coxeter systems and the word problem.

Words are tuples of generator indices. Elements of ``W`` are carried as
:class:`GroupElement` objects whose word is the ShortLex-least reduced word
of the element. Normal forms are computed with Tits' M-operations:

* MI deletes a subword ``(s, s)``;
* MII replaces an alternating subword ``(s, t, s, ...)`` of length
  ``m(s, t)`` by ``(t, s, t, ...)``.

A word is reduced if and only if no sequence of MII moves produces a word
with two equal adjacent letters, and any two reduced words for the same
element are connected by MII moves alone. :func:`m_reduce` relies on both
facts and never needs a root system.
"""
import functools
import json
import math
import re
from logging import getLogger

from . import config
from .errors import CapExceededError, ValidationError

logger = getLogger(__name__)

INFINITY = math.inf

NAME_RE = re.compile(r'[A-Za-z_][A-Za-z0-9_]*\Z')
SYSTEM_KEYS = frozenset({'rank', 'm', 'names'})


def _is_label(value):
    if isinstance(value, bool):
        return False
    if isinstance(value, int):
        return True
    return value == INFINITY


class CoxeterSystem(object):
    """
    A validated Coxeter system ``(W, S)``.

    Use :func:`validate_system` or :func:`load_system` to build one; the
    constructor assumes its input is already checked.

    Parameters
    ----------
    matrix: tuple of tuples
        Coxeter matrix with ``INFINITY`` for missing relations.
    names: tuple of str
        Generator names, ``s0 .. s{n-1}`` by default.
    """

    def __init__(self, matrix, names):
        self.matrix = tuple(tuple(row) for row in matrix)
        self.names = tuple(names)
        self.rank = len(self.matrix)
        self._index = {name: i for i, name in enumerate(self.names)}
        self._hash = hash((self.matrix, self.names))

    def __eq__(self, other):
        return (
            isinstance(other, CoxeterSystem) and
            self.matrix == other.matrix and
            self.names == other.names
        )

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return 'CoxeterSystem({0!r}, names={1!r})'.format(
            [[_serialize_label(m) for m in row] for row in self.matrix],
            list(self.names),
        )

    @property
    def generators(self):
        return range(self.rank)

    def m(self, s, t):
        return self.matrix[s][t]

    def index(self, generator):
        """Generator index for a name or an index."""
        if isinstance(generator, int) and not isinstance(generator, bool):
            if 0 <= generator < self.rank:
                return generator
        elif generator in self._index:
            return self._index[generator]
        raise ValidationError(
            'unknown generator {0!r}; expected one of {1}'.format(
                generator, ', '.join(self.names)))

    def subset(self, generators):
        return frozenset(self.index(s) for s in generators)

    def check_word(self, word):
        word = tuple(word)
        for letter in word:
            if isinstance(letter, bool) or not isinstance(letter, int) or \
                    not 0 <= letter < self.rank:
                raise ValidationError(
                    'invalid letter {0!r} for a system of rank {1}'.format(
                        letter, self.rank))
        return word

    def parse_word(self, text):
        """
        Parse a word from generator names.

        Letters may be separated by whitespace, commas or dots; ``1`` and
        the empty string denote the identity.

        >>> system = validate_system([[1, 3], [3, 1]], names=['s', 't'])
        >>> system.parse_word('s t s')
        (0, 1, 0)
        """
        if not isinstance(text, str):
            return tuple(self.index(letter) for letter in text)
        tokens = [tok for tok in re.split(r'[\s,.]+', text.strip()) if tok]
        if tokens == ['1']:
            return ()
        return tuple(self.index(tok) for tok in tokens)

    def format_word(self, word, sep='.'):
        if not word:
            return '1'
        return sep.join(self.names[s] for s in word)

    def format_subset(self, subset):
        return '{' + ','.join(self.names[s] for s in sorted(subset)) + '}'

    @property
    def identity(self):
        return GroupElement(self, ())

    def element(self, word):
        """The group element represented by ``word``."""
        if isinstance(word, str):
            word = self.parse_word(word)
        return m_reduce(self, self.check_word(word))

    def generator(self, s):
        return GroupElement(self, (self.index(s),))

    def to_json_dict(self):
        return {
            'rank': self.rank,
            'm': [[_serialize_label(m) for m in row] for row in self.matrix],
            'names': list(self.names),
        }


def _serialize_label(m):
    return 0 if m == INFINITY else m


@functools.total_ordering
class GroupElement(object):
    """
    An element of ``W`` in ShortLex normal form.

    Instances are normally produced by :func:`m_reduce`; ``word`` is assumed
    to be the normal form already.
    """
    __slots__ = ('system', 'word')

    def __init__(self, system, word):
        self.system = system
        self.word = tuple(word)

    def __eq__(self, other):
        return (
            isinstance(other, GroupElement) and
            self.word == other.word and
            self.system == other.system
        )

    def __ne__(self, other):
        return not self == other

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __hash__(self):
        return hash(self.word)

    def __repr__(self):
        return 'GroupElement({0})'.format(self.label)

    def __str__(self):
        return self.label

    def __mul__(self, other):
        return multiply(self, other)

    @property
    def label(self):
        return self.system.format_word(self.word)

    @property
    def length(self):
        return len(self.word)

    def is_identity(self):
        return not self.word

    def inverse(self):
        return inverse(self)

    def sort_key(self):
        return (len(self.word), self.word)

    def letters(self):
        return frozenset(self.word)


def validate_system(matrix, names=None):
    """
    Check a Coxeter matrix and wrap it in a :class:`CoxeterSystem`.

    Entries are positive integers or ``INFINITY``; ``None`` is also accepted
    for a missing relation.

    >>> validate_system([[1]]).rank
    1
    >>> validate_system([[1, 2], [3, 1]])
    Traceback (most recent call last):
    ...
    twinlab.errors.ValidationError: Coxeter matrix is not symmetric at (0, 1)
    """
    try:
        rows = [list(row) for row in matrix]
    except TypeError:
        raise ValidationError('Coxeter matrix must be a list of rows')
    n = len(rows)
    if n == 0:
        raise ValidationError('Coxeter matrix has rank 0')
    normalized = []
    for i, row in enumerate(rows):
        if len(row) != n:
            raise ValidationError(
                'row {0} of the Coxeter matrix has {1} entries, '
                'expected {2}'.format(i, len(row), n))
        normalized.append([INFINITY if m is None else m for m in row])
    for i in range(n):
        for j in range(n):
            m = normalized[i][j]
            if not _is_label(m):
                raise ValidationError(
                    'invalid Coxeter label {0!r} at ({1}, {2})'.format(
                        m, i, j))
    for i in range(n):
        if normalized[i][i] != 1:
            raise ValidationError(
                'diagonal entry ({0}, {0}) is {1}, expected 1'.format(
                    i, normalized[i][i]))
    for i in range(n):
        for j in range(i + 1, n):
            if normalized[i][j] != normalized[j][i]:
                raise ValidationError(
                    'Coxeter matrix is not symmetric at ({0}, {1})'.format(
                        i, j))
            if normalized[i][j] < 2:
                raise ValidationError(
                    'off-diagonal entry ({0}, {1}) is {2}, expected at '
                    'least 2'.format(i, j, normalized[i][j]))

    if names is None:
        names = ['s{0}'.format(i) for i in range(n)]
    names = list(names)
    if len(names) != n:
        raise ValidationError(
            '{0} generator names given for rank {1}'.format(len(names), n))
    for name in names:
        if not isinstance(name, str) or not NAME_RE.match(name):
            raise ValidationError('invalid generator name {0!r}'.format(name))
    if len(set(names)) != n:
        raise ValidationError('generator names must be distinct')
    return CoxeterSystem(normalized, names)


def system_from_json(data):
    """
    Build a system from the decoded JSON object ``{"rank", "m", "names"}``.

    In the file format the label ``0`` stands for infinity.
    """
    if not isinstance(data, dict):
        raise ValidationError('system file must hold a JSON object')
    unknown = set(data) - SYSTEM_KEYS
    if unknown:
        raise ValidationError(
            'unknown keys in system file: {0}'.format(
                ', '.join(sorted(unknown))))
    for key in ('rank', 'm'):
        if key not in data:
            raise ValidationError(
                'system file is missing "{0}"'.format(key))
    rank = data['rank']
    if isinstance(rank, bool) or not isinstance(rank, int) or rank < 1:
        raise ValidationError('"rank" must be a positive integer')
    matrix = data['m']
    if not isinstance(matrix, list) or len(matrix) != rank:
        raise ValidationError(
            '"m" must be a list of {0} rows'.format(rank))
    rows = []
    for row in matrix:
        if not isinstance(row, list):
            raise ValidationError('every row of "m" must be a list')
        rows.append([INFINITY if m == 0 and _is_label(m) else m
                     for m in row])
    return validate_system(rows, names=data.get('names'))


def load_system(path):
    """Read and validate a Coxeter system file."""
    with open(path) as f:
        try:
            data = json.load(f)
        except ValueError as e:
            raise ValidationError(
                '{0} is not valid JSON: {1}'.format(path, e))
    system = system_from_json(data)
    logger.debug('loaded rank %d system from %s', system.rank, path)
    return system


def _mii_moves(system, word):
    n = len(word)
    for i in range(n - 1):
        s, t = word[i], word[i + 1]
        if s == t:
            continue
        m = system.matrix[s][t]
        if m == INFINITY or i + m > n:
            continue
        if all(word[i + k] == (s if k % 2 == 0 else t) for k in range(m)):
            flipped = tuple(t if k % 2 == 0 else s for k in range(m))
            yield word[:i] + flipped + word[i + m:]


@functools.lru_cache(maxsize=1 << 16)
def mii_class(system, word):
    """
    All words reachable from ``word`` by MII moves, sorted.

    For a reduced word this is the set of all reduced decompositions of
    the element it represents.
    """
    word = tuple(word)
    seen = {word}
    frontier = [word]
    while frontier:
        current = frontier.pop()
        for moved in _mii_moves(system, current):
            if moved not in seen:
                seen.add(moved)
                frontier.append(moved)
    return tuple(sorted(seen))


def is_reduced(system, word):
    """
    True iff ``word`` is M-reduced: no MII sequence creates ``(s, s)``.
    """
    return not any(
        any(a == b for a, b in zip(w, w[1:]))
        for w in mii_class(system, tuple(word))
    )


@functools.lru_cache(maxsize=1 << 18)
def _append(system, normal_form, s):
    reduced_words = mii_class(system, normal_form)
    shorter = [w[:-1] for w in reduced_words if w and w[-1] == s]
    if shorter:
        return min(shorter)
    return mii_class(system, normal_form + (s,))[0]


def m_reduce(system, word):
    """
    ShortLex normal form of ``word``.

    Letters are appended one at a time to a normal form. Appending ``s``
    either cancels against a reduced decomposition ending in ``s`` (an MI
    deletion after MII moves) or extends the element, in which case the
    least word of the MII class is taken.

    >>> a2 = validate_system([[1, 3], [3, 1]], names=['s', 't'])
    >>> m_reduce(a2, (0, 1, 0, 1)).word
    (1, 0)
    """
    normal_form = ()
    for s in system.check_word(word):
        normal_form = _append(system, normal_form, s)
    return GroupElement(system, normal_form)


def words_equal(system, a, b):
    return m_reduce(system, a) == m_reduce(system, b)


def multiply(a, b):
    if a.system != b.system:
        raise ValidationError('cannot multiply elements of different systems')
    normal_form = a.word
    for s in b.word:
        normal_form = _append(a.system, normal_form, s)
    return GroupElement(a.system, normal_form)


def inverse(a):
    return m_reduce(a.system, tuple(reversed(a.word)))


def in_parabolic(element, subset):
    """
    Membership in the standard parabolic ``W_I``.

    Every reduced word of an element of ``W_I`` uses letters of ``I`` only,
    so looking at the normal form decides it.
    """
    return element.letters() <= frozenset(subset)


def alternating_word(s, t, length):
    return tuple(s if k % 2 == 0 else t for k in range(length))


def ball(system, radius, generators=None):
    """
    Elements of length at most ``radius`` in ShortLex order.

    With ``generators`` the ball is taken in the parabolic subgroup they
    generate.
    """
    radius_cap = config.max_ball_radius()
    if radius < 0:
        raise ValidationError('radius must be non-negative')
    if radius > radius_cap:
        raise CapExceededError('ball radius', radius_cap, radius)
    size_cap = config.max_ball_size()
    gens = sorted(system.generators if generators is None
                  else system.subset(generators))
    elements = [()]
    layer = [()]
    for _ in range(radius):
        following = set()
        for normal_form in layer:
            for s in gens:
                extended = _append(system, normal_form, s)
                if len(extended) > len(normal_form):
                    following.add(extended)
        if not following:
            break
        layer = sorted(following)
        elements.extend(layer)
        if len(elements) > size_cap:
            raise CapExceededError('ball size', size_cap, len(elements))
    logger.debug('ball of radius %d has %d elements', radius, len(elements))
    return [GroupElement(system, w) for w in elements]


def parabolic_elements(system, subset):
    """
    All elements of a finite parabolic ``W_I`` in ShortLex order.

    The caller checks finiteness; an infinite ``W_I`` hits the ball caps.
    """
    subset = system.subset(subset)
    size_cap = config.max_ball_size()
    elements = [()]
    layer = [()]
    while layer:
        following = set()
        for normal_form in layer:
            for s in sorted(subset):
                extended = _append(system, normal_form, s)
                if len(extended) > len(normal_form):
                    following.add(extended)
        layer = sorted(following)
        elements.extend(layer)
        if len(elements) > size_cap:
            raise CapExceededError(
                'parabolic subgroup size', size_cap, len(elements))
    return [GroupElement(system, w) for w in elements]

"""
Coxeter diagrams: finite-type recognition and the (A)/(B) conditions.
"""
import enum
import itertools
import math
from collections import namedtuple
from logging import getLogger

import networkx as nx

from . import config
from .coxeter import INFINITY
from .errors import CapExceededError
from .lemmas import LemmaReport

logger = getLogger(__name__)

EXCEPTIONAL_ORDERS = {
    'E6': 51840,
    'E7': 2903040,
    'E8': 696729600,
    'F4': 1152,
    'H3': 120,
    'H4': 14400,
}


class SphericalReport(namedtuple('SphericalReport',
                                 ('subset', 'is_spherical', 'order',
                                  'types'))):
    """
    Finiteness of a standard parabolic ``W_J``.

    ``order`` is ``INFINITY`` when ``W_J`` is infinite; ``types`` names the
    finite components, e.g. ``('A2', 'A1')``.
    """
    __slots__ = ()


class Verdict(enum.Enum):
    condition_a = 'A'
    condition_b = 'B'
    two_spherical = '2-spherical'
    unknown = 'unknown'


class Rank3Case(enum.Enum):
    one_infinity = 'one-infinity'
    two_infinity = 'two-infinity'
    all_infinity = 'all-infinity'
    none = 'none'


class ConditionClassification(namedtuple('ConditionClassification',
                                         ('verdict', 'J', 'K', 'partition',
                                          'rank3_case'))):
    """
    Outcome of :func:`classify_condition`.

    ``J`` and ``K`` are set for condition (A), ``partition`` for (B).
    ``rank3_case`` is ``None`` unless the system has rank 3.
    """
    __slots__ = ()

    def as_dict(self, system):
        out = {'verdict': self.verdict.value}
        if self.J is not None:
            out['J'] = system.format_subset(self.J)
            out['K'] = system.format_subset(self.K)
        if self.partition is not None:
            out['partition'] = [system.format_subset(p)
                                for p in self.partition]
        if self.rank3_case is not None:
            out['rank3_case'] = self.rank3_case.value
        return out


def _diagram(system, subset):
    graph = nx.Graph()
    graph.add_nodes_from(subset)
    for s, t in itertools.combinations(sorted(subset), 2):
        m = system.m(s, t)
        if m >= 3:
            graph.add_edge(s, t, m=m)
    return graph


def _path_order(graph):
    ends = sorted(v for v in graph if graph.degree(v) <= 1)
    path = [ends[0]]
    while len(path) < len(graph):
        path.append(next(v for v in graph[path[-1]] if v not in path))
    return path


def _component_type(graph):
    """``(type name, order)`` of a connected diagram, or ``None``."""
    n = len(graph)
    labels = [m for _, _, m in graph.edges(data='m')]
    if any(m == INFINITY for m in labels):
        return None
    if n == 1:
        return 'A1', 2
    if n == 2:
        m = labels[0]
        name = {3: 'A2', 4: 'B2', 6: 'G2'}.get(m, 'I2({0})'.format(m))
        return name, 2 * m
    if graph.number_of_edges() != n - 1:
        # cycles are never of finite type
        return None
    big = [m for m in labels if m > 3]
    degrees = sorted(d for _, d in graph.degree())
    is_path = degrees[-1] <= 2
    if not big:
        if is_path:
            return 'A{0}'.format(n), math.factorial(n + 1)
        branch = [v for v in graph if graph.degree(v) == 3]
        if len(branch) != 1 or degrees[-1] != 3:
            return None
        center = branch[0]
        arms = []
        for start in graph[center]:
            length, previous, current = 1, center, start
            while graph.degree(current) == 2:
                previous, current = current, next(
                    v for v in graph[current] if v != previous)
                length += 1
            arms.append(length)
        arms.sort()
        if arms[:2] == [1, 1]:
            return 'D{0}'.format(n), 2 ** (n - 1) * math.factorial(n)
        name = {(1, 2, 2): 'E6', (1, 2, 3): 'E7',
                (1, 2, 4): 'E8'}.get(tuple(arms))
        if name is None:
            return None
        return name, EXCEPTIONAL_ORDERS[name]
    if len(big) > 1 or not is_path:
        return None
    path = _path_order(graph)
    path_labels = [graph[a][b]['m'] for a, b in zip(path, path[1:])]
    position = path_labels.index(big[0])
    at_end = position in (0, len(path_labels) - 1)
    if big[0] == 4:
        if at_end:
            return 'B{0}'.format(n), 2 ** n * math.factorial(n)
        if n == 4:
            return 'F4', EXCEPTIONAL_ORDERS['F4']
        return None
    if big[0] == 5 and at_end and n in (3, 4):
        name = 'H{0}'.format(n)
        return name, EXCEPTIONAL_ORDERS[name]
    return None


def spherical_order(system, subset):
    """
    Decide whether ``W_J`` is finite and compute its order.

    The sub-diagram on ``J`` is split into connected components, each looked
    up in the catalogue of finite Coxeter types.

    >>> from twinlab.coxeter import validate_system
    >>> a3 = validate_system([[1, 3, 2], [3, 1, 3], [2, 3, 1]])
    >>> spherical_order(a3, {0, 1, 2}).order
    24
    """
    subset = system.subset(subset)
    order = 1
    types = []
    graph = _diagram(system, subset)
    for component in sorted(nx.connected_components(graph), key=min):
        found = _component_type(graph.subgraph(component))
        if found is None:
            return SphericalReport(subset, False, INFINITY, ())
        name, component_order = found
        types.append(name)
        order *= component_order
    return SphericalReport(subset, True, order, tuple(types))


def is_spherical(system, subset):
    return spherical_order(system, subset).is_spherical


def spherical_subsets(system):
    """All spherical subsets, the empty one included, by size then index."""
    rank_cap = config.max_davis_rank()
    if system.rank > rank_cap:
        raise CapExceededError('rank for subset enumeration', rank_cap,
                               system.rank)
    found = []
    for size in range(system.rank + 1):
        for subset in itertools.combinations(system.generators, size):
            if is_spherical(system, subset):
                found.append(frozenset(subset))
    return found


def infinite_pairs(system):
    return [
        (s, t) for s, t in itertools.combinations(system.generators, 2)
        if system.m(s, t) == INFINITY
    ]


def rank3_case(system):
    if system.rank != 3:
        return None
    count = len(infinite_pairs(system))
    return (Rank3Case.none, Rank3Case.one_infinity, Rank3Case.two_infinity,
            Rank3Case.all_infinity)[count]


def is_condition_a(system, J, K):
    J, K = frozenset(J), frozenset(K)
    return (
        not J & K and
        J | K == frozenset(system.generators) and
        len(K) >= 2 and
        all(system.m(s, t) == INFINITY
            for s, t in itertools.combinations(sorted(K), 2)) and
        all(is_spherical(system, J | {s}) for s in K)
    )


def is_condition_b(system, partition):
    parts = [frozenset(p) for p in partition]
    union = frozenset().union(*parts) if parts else frozenset()
    return (
        len(parts) >= 2 and
        all(parts) and
        sum(len(p) for p in parts) == system.rank and
        union == frozenset(system.generators) and
        all(is_spherical(system, p) for p in parts) and
        all(system.m(s, t) == INFINITY
            for a, b in itertools.combinations(parts, 2)
            for s in a for t in b)
    )


def _finite_label_components(system):
    graph = nx.Graph()
    graph.add_nodes_from(system.generators)
    for s, t in itertools.combinations(system.generators, 2):
        if system.m(s, t) != INFINITY:
            graph.add_edge(s, t)
    return sorted((frozenset(c) for c in nx.connected_components(graph)),
                  key=min)


def classify_condition(system):
    """
    Find a condition (A) or (B) witness.

    (A) witnesses are searched over all splittings ``S = J ⊔ K`` with
    non-empty ``J``, largest ``K`` first and lexicographically smallest
    ``K`` among those. With ``J`` empty, (A) says all labels are infinite,
    which is (B) with singleton parts; that case is reported as (B).
    """
    case = rank3_case(system)
    generators = frozenset(system.generators)
    for size in range(system.rank - 1, 1, -1):
        for K in itertools.combinations(system.generators, size):
            J = generators - frozenset(K)
            if is_condition_a(system, J, K):
                logger.debug('condition (A) with J=%s K=%s',
                             system.format_subset(J),
                             system.format_subset(K))
                return ConditionClassification(
                    Verdict.condition_a, J, frozenset(K), None, case)
    partition = _finite_label_components(system)
    if is_condition_b(system, partition):
        return ConditionClassification(
            Verdict.condition_b, None, None, tuple(partition), case)
    if not infinite_pairs(system):
        return ConditionClassification(
            Verdict.two_spherical, None, None, None, case)
    return ConditionClassification(Verdict.unknown, None, None, None, case)


def check_classification(system, classification):
    """Re-check a witness of :func:`classify_condition` predicate by
    predicate."""
    verdict = classification.verdict
    checks = 0
    if verdict is Verdict.condition_a:
        J, K = classification.J, classification.K
        for s in sorted(K):
            checks += 1
            report = spherical_order(system, J | {s})
            if not report.is_spherical:
                return LemmaReport.failure(
                    'classification',
                    'J ∪ {{{0}}} is not spherical'.format(system.names[s]),
                    checks=checks)
        for s, t in itertools.combinations(sorted(K), 2):
            checks += 1
            if system.m(s, t) != INFINITY:
                return LemmaReport.failure(
                    'classification',
                    'm({0}, {1}) is finite'.format(
                        system.names[s], system.names[t]),
                    checks=checks)
        if not J or J & K or J | K != frozenset(system.generators):
            return LemmaReport.failure(
                'classification', 'J and K do not split S', checks=checks)
    elif verdict is Verdict.condition_b:
        parts = classification.partition
        for part in parts:
            checks += 1
            if not spherical_order(system, part).is_spherical:
                return LemmaReport.failure(
                    'classification',
                    '{0} is not spherical'.format(
                        system.format_subset(part)),
                    checks=checks)
        for a, b in itertools.combinations(parts, 2):
            for s in a:
                for t in b:
                    checks += 1
                    if system.m(s, t) != INFINITY:
                        return LemmaReport.failure(
                            'classification',
                            'm({0}, {1}) is finite'.format(
                                system.names[s], system.names[t]),
                            checks=checks)
        if not is_condition_b(system, parts):
            return LemmaReport.failure(
                'classification', 'parts do not partition S', checks=checks)
    elif verdict is Verdict.two_spherical:
        checks += 1
        if infinite_pairs(system):
            return LemmaReport.failure(
                'classification', 'system has an infinite label',
                checks=checks)
    return LemmaReport.success('classification', checks=checks)

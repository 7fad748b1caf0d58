"""
Panel complexes: a finite simplicial complex ``Z`` with one closed,
non-empty subcomplex ``Z_s`` per generator.

Vertices are named by frozensets of generators. For every shipped
constructor the name of a vertex is also its type ``S_v = {s : v ∈ Z_s}``,
although :meth:`PanelComplex.type_set` always recomputes the type from the
panels.
"""
import itertools
from collections import namedtuple
from logging import getLogger

import networkx as nx

from .coxeter import INFINITY
from .diagrams import (
    is_condition_a, is_condition_b, spherical_order, spherical_subsets,
)
from .errors import PreconditionError
from .lemmas import LemmaReport

logger = getLogger(__name__)


def _vertex_key(vertex):
    return (len(vertex), tuple(sorted(vertex)))


class Cell(namedtuple('Cell', ('vertices',))):
    """A simplex of ``Z``, given by its vertex set."""
    __slots__ = ()

    @property
    def dimension(self):
        return len(self.vertices) - 1

    def sort_key(self):
        return (self.dimension,
                tuple(sorted(_vertex_key(v) for v in self.vertices)))


class PanelComplex(object):
    """
    Parameters
    ----------
    system: CoxeterSystem
    vertices: iterable of frozensets
    simplices: iterable of vertex sets
        Every simplex of dimension at least 1; faces are added.
    panels: dict
        Generator -> vertex set of ``Z_s``. ``Z_s`` is the full subcomplex
        on these vertices.
    kind: str
        ``'A'``, ``'B'``, ``'edge'`` or ``'davis'``.
    witness: dict, optional
        The data the complex was built from.
    """

    def __init__(self, system, vertices, simplices, panels, kind,
                 witness=None):
        self.system = system
        self.vertices = tuple(sorted(set(vertices), key=_vertex_key))
        cells = {Cell(frozenset([v])) for v in self.vertices}
        for simplex in simplices:
            simplex = frozenset(simplex)
            for size in range(1, len(simplex) + 1):
                for face in itertools.combinations(simplex, size):
                    cells.add(Cell(frozenset(face)))
        self._cells = sorted(cells, key=Cell.sort_key)
        self.panels = {s: frozenset(panels[s]) for s in system.generators}
        self.kind = kind
        self.witness = dict(witness or {})
        for s, panel in self.panels.items():
            if not panel:
                raise PreconditionError(
                    'panel Z_{0} is empty'.format(system.names[s]))
            if not panel <= set(self.vertices):
                raise PreconditionError(
                    'panel Z_{0} has vertices outside Z'.format(
                        system.names[s]))

    def __repr__(self):
        return '<PanelComplex {0}: {1} vertices, dimension {2}>'.format(
            self.kind, len(self.vertices), self.dimension)

    def cells(self, dimension=None):
        if dimension is None:
            return list(self._cells)
        return [c for c in self._cells if c.dimension == dimension]

    @property
    def edges(self):
        return self.cells(1)

    @property
    def dimension(self):
        return max(c.dimension for c in self._cells)

    @property
    def general_dimension(self):
        """True when ``Z`` is not a graph and cannot be realized."""
        return self.dimension > 1

    def vertex_cell(self, vertex):
        return Cell(frozenset([vertex]))

    def type_set(self, cell):
        """``S_σ = {s : σ ⊂ Z_s}``."""
        return frozenset(
            s for s in self.system.generators
            if cell.vertices <= self.panels[s]
        )

    def panel_vertices(self, s):
        return sorted(self.panels[self.system.index(s)], key=_vertex_key)

    def vertex_label(self, vertex):
        return self.system.format_subset(vertex)

    def label(self, cell):
        return '-'.join(
            self.vertex_label(v)
            for v in sorted(cell.vertices, key=_vertex_key))

    def to_graph(self):
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        for cell in self.edges:
            graph.add_edge(*sorted(cell.vertices, key=_vertex_key))
        return graph

    def is_connected(self):
        return nx.is_connected(self.to_graph())


def _star(system, center, leaves, panels, kind, witness):
    return PanelComplex(
        system,
        [center] + list(leaves),
        [(center, leaf) for leaf in leaves],
        panels, kind, witness,
    )


def panel_complex_A(system, J, K):
    """
    The star with center ``J`` and one leaf ``J ∪ {s}`` per ``s ∈ K``.

    ``Z_s`` is the leaf ``J ∪ {s}`` for ``s ∈ K`` and all of ``Z`` for
    ``s ∈ J``.
    """
    J, K = system.subset(J), system.subset(K)
    if not is_condition_a(system, J, K):
        raise PreconditionError(
            'J = {0}, K = {1} is not a condition (A) witness'.format(
                system.format_subset(J), system.format_subset(K)))
    center = J
    leaves = [J | {s} for s in sorted(K)]
    everything = [center] + leaves
    panels = {}
    for s in system.generators:
        panels[s] = everything if s in J else [J | {s}]
    return _star(system, center, leaves, panels, 'A',
                 {'J': J, 'K': K})


def panel_complex_B(system, partition):
    """
    The star with center ``∅`` and one leaf ``J_i`` per part.

    ``Z_s`` is the leaf ``J_i`` containing ``s``, so ``Z_s = Z_t`` whenever
    ``s`` and ``t`` share a part.
    """
    parts = [system.subset(p) for p in partition]
    if not is_condition_b(system, parts):
        raise PreconditionError(
            '{0} is not a condition (B) witness'.format(
                ', '.join(system.format_subset(p) for p in parts)))
    parts.sort(key=_vertex_key)
    panels = {s: [p] for p in parts for s in p}
    return _star(system, frozenset(), parts, panels, 'B',
                 {'partition': tuple(parts)})


def panel_complex_edge(system, s, t):
    """
    A single edge ``e = [v, w]`` for generators with ``m(s, t) = ∞``.

    With ``J = S \\ {s, t}``: ``S_v = J ∪ {s}``, ``S_w = J ∪ {t}`` and the
    edge has type ``J``. ``Z_u`` is all of ``Z`` for ``u ∈ J``.
    """
    s, t = system.index(s), system.index(t)
    if s == t or system.m(s, t) != INFINITY:
        raise PreconditionError(
            'm({0}, {1}) = {2} is finite'.format(
                system.names[s], system.names[t], system.m(s, t)))
    J = frozenset(system.generators) - {s, t}
    v, w = J | {s}, J | {t}
    panels = {u: [v, w] for u in J}
    panels[s] = [v]
    panels[t] = [w]
    return PanelComplex(system, [v, w], [(v, w)], panels, 'edge',
                        {'J': J, 's': s, 't': t})


def davis_panel_complex(system):
    """
    The flag complex of the poset of spherical subsets.

    Simplices are chains under inclusion and ``Z_s`` is spanned by the
    subsets containing ``s``. The dimension is the size of the largest
    spherical subset.
    """
    vertices = spherical_subsets(system)
    maximal = [v for v in vertices if not any(v < u for u in vertices)]
    chains = []
    for top in maximal:
        # maximal chains below top: add one generator at a time
        for order in itertools.permutations(sorted(top)):
            chains.append([frozenset(order[:k]) for k in range(len(top) + 1)])
    panels = {
        s: [v for v in vertices if s in v] for s in system.generators
    }
    logger.debug('Davis complex: %d spherical subsets, %d maximal',
                 len(vertices), len(maximal))
    return PanelComplex(system, vertices, chains, panels, 'davis')


def check_spherical_types(system, Z):
    """Every cell type ``S_σ`` of ``Z`` generates a finite group."""
    cells = Z.cells()
    for cell in cells:
        S = Z.type_set(cell)
        if not spherical_order(system, S).is_spherical:
            return LemmaReport.failure(
                'spherical_types',
                {'cell': Z.label(cell), 'type': system.format_subset(S)},
                cells=len(cells))
    return LemmaReport.success('spherical_types', cells=len(cells))


def verify_davis_dimension(system):
    """The Davis complex has dimension ``max |J|`` over spherical ``J``."""
    Z = davis_panel_complex(system)
    largest = max(len(v) for v in Z.vertices)
    if Z.dimension != largest:
        return LemmaReport.failure(
            'davis_dimension',
            {'dimension': Z.dimension, 'largest_spherical': largest})
    return LemmaReport.success(
        'davis_dimension', dimension=Z.dimension,
        spherical_subsets=len(Z.vertices), cells=len(Z.cells()))

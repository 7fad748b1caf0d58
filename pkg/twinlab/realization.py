"""
The realization ``Z(Δ) = (C × Z)/~`` of a chamber geometry, cell by cell.

``[C, σ] = [D, σ]`` exactly when ``δ(C, D) ∈ W_{S_σ}``. Classes are kept
with their least chamber (in the order of the geometry) as representative.
"""
from collections import namedtuple
from logging import getLogger

import networkx as nx
from networkx.utils import UnionFind

from . import config
from .coxeter import INFINITY, alternating_word, in_parabolic
from .complexes import panel_complex_edge
from .diagrams import Verdict, spherical_order
from .errors import LemmaViolation, PreconditionError
from .factorization import check_tilde_factorization
from .geometry import enumerate_ball, residue_formula
from .lemmas import LemmaReport

logger = getLogger(__name__)


class RealizedCell(namedtuple('RealizedCell',
                              ('cell', 'representative', 'members',
                               'boundary'))):
    """
    One class ``[C, σ]``.

    ``boundary`` is set when the class may have members outside the
    geometry, so it is left out of the action checks.
    """
    __slots__ = ()


class RealizedComplex(object):

    def __init__(self, geom, Z, classes, lookup, incidence):
        self.geom = geom
        self.Z = Z
        self.classes = classes
        self._lookup = lookup
        self.incidence = incidence

    def __repr__(self):
        return '<RealizedComplex {0} vertices, {1} edges>'.format(
            len(self.vertex_classes()), len(self.edge_classes()))

    def class_of(self, chamber, cell):
        """Index of ``[chamber, cell]`` in :attr:`classes`."""
        return self._lookup[chamber, cell]

    def vertex_classes(self):
        return [i for i, c in enumerate(self.classes)
                if c.cell.dimension == 0]

    def edge_classes(self):
        return [i for i, c in enumerate(self.classes)
                if c.cell.dimension == 1]

    def star(self, chamber):
        """The copy ``Z(C)``: the class indices of ``[C, σ]``."""
        return frozenset(self._lookup[chamber, cell]
                         for cell in self.Z.cells())

    def label(self, index):
        realized = self.classes[index]
        return '{0}|{1}'.format(self.geom.label(realized.representative),
                                self.Z.label(realized.cell))

    def to_graph(self):
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.label(i) for i in self.vertex_classes())
        for i in self.edge_classes():
            u, v = self.incidence[i]
            graph.add_edge(self.label(u), self.label(v), cell=self.label(i))
        return graph

    def edge_list(self):
        """``u v`` lines with ``C|σ`` vertex labels, sorted."""
        lines = []
        for i in self.edge_classes():
            u, v = sorted(self.label(x) for x in self.incidence[i])
            lines.append('{0} {1}'.format(u, v))
        return sorted(lines)


def _residue_partition(geom, S):
    """Classes of chambers under ``δ(C, D) ∈ W_S``, each sorted."""
    remaining = list(geom.chambers)
    parts = []
    while remaining:
        C = remaining[0]
        part = [D for D in remaining
                if in_parabolic(geom.weyl_distance(C, D), S)]
        chosen = set(part)
        remaining = [D for D in remaining if D not in chosen]
        parts.append(part)
    return parts


def _full_residue_size(geom, S):
    report = spherical_order(geom.system, S)
    if not report.is_spherical:
        return INFINITY
    if geom.thin:
        return report.order
    return residue_formula(geom, S)


def realize(geom, Z):
    """
    Build ``Z(Δ)`` for a one-dimensional panel complex.

    Every cell is classified by the residues of type ``S_σ``: membership in
    ``W_{S_σ}`` is read off the normal form of ``δ(C, D)``, so every type
    set is decidable.
    """
    if Z.general_dimension:
        raise PreconditionError(
            'only one-dimensional panel complexes can be realized; this one '
            'has dimension {0}'.format(Z.dimension))
    partitions = {}
    classes = []
    lookup = {}
    for cell in Z.cells():
        S = Z.type_set(cell)
        if S not in partitions:
            partitions[S] = _residue_partition(geom, S)
        full = None if geom.complete else _full_residue_size(geom, S)
        for part in partitions[S]:
            index = len(classes)
            boundary = full is not None and len(part) < full
            classes.append(RealizedCell(cell, part[0], tuple(part),
                                        boundary))
            for C in part:
                lookup[C, cell] = index
    incidence = {}
    for index, realized in enumerate(classes):
        if realized.cell.dimension != 1:
            continue
        endpoints = None
        for C in realized.members:
            found = tuple(sorted(lookup[C, Z.vertex_cell(v)]
                                 for v in realized.cell.vertices))
            if endpoints is None:
                endpoints = found
            elif found != endpoints:
                raise LemmaViolation(
                    'endpoints of an edge class depend on the '
                    'representative', witness=geom.label(C))
        incidence[index] = endpoints
    logger.debug('realized %d cells of Z over %d chambers into %d classes',
                 len(Z.cells()), len(geom), len(classes))
    return RealizedComplex(geom, Z, classes, lookup, incidence)


class TreeReport(namedtuple('TreeReport',
                            ('vertex_count', 'edge_count', 'connected',
                             'acyclic', 'is_tree', 'cycle'))):
    """Outcome of :func:`tree_check`; ``cycle`` lists the edges of a
    circuit when there is one."""
    __slots__ = ()

    def as_report(self):
        counts = {'vertices': self.vertex_count, 'edges': self.edge_count}
        if self.is_tree:
            return LemmaReport('tree', 'pass', counts)
        witness = {'connected': self.connected, 'acyclic': self.acyclic}
        if self.cycle:
            witness['cycle'] = self.cycle
        return LemmaReport('tree', 'fail', counts, witness)


def tree_check(complex_or_graph):
    """
    Decide whether a realized complex (or any networkx graph) is a tree.

    Acyclicity is decided with a union-find over the edges; when an edge
    closes a circuit, :func:`networkx.find_cycle` extracts it as a witness.
    """
    graph = complex_or_graph
    if hasattr(graph, 'to_graph'):
        graph = graph.to_graph()
    vertex_count = graph.number_of_nodes()
    edge_count = graph.number_of_edges()
    connected = vertex_count > 0 and nx.is_connected(graph)
    components = UnionFind(graph.nodes())
    acyclic = True
    for u, v in graph.edges():
        if components[u] == components[v]:
            acyclic = False
            break
        components.union(u, v)
    cycle = None
    if not acyclic:
        cycle = [[str(e[0]), str(e[1])] for e in nx.find_cycle(graph)]
    is_tree = connected and acyclic
    if is_tree and edge_count != vertex_count - 1:
        raise LemmaViolation('a tree with {0} vertices has {1} edges'.format(
            vertex_count, edge_count))
    return TreeReport(vertex_count, edge_count, connected, acyclic, is_tree,
                      cycle)


def _mode(mode):
    if isinstance(mode, Verdict):
        return mode.value
    return str(mode)


def verify_panel_structure(geom, Z, mode, rc=None):
    """
    Check both clauses of the panel structure statement on every pair of
    chambers.

    Mode ``A``: ``δ(C, D) ∈ W_J`` iff ``Z(C) = Z(D)``, and for ``s ∈ K``,
    ``δ(C, D) ∈ W_{J ∪ {s}}`` iff ``[C, z] = [D, z]`` on ``Z_s``.

    Mode ``B``: for every part ``J_i``, ``δ(C, D) ∈ W_{J_i}`` iff the
    classes agree on ``Z_s`` with ``s ∈ J_i``; on interior cells
    ``[C, z] = [D, z]`` iff ``C = D``.

    Distinct copies of ``Z`` may share at most one panel vertex.
    """
    mode = _mode(mode)
    if mode != Z.kind:
        raise PreconditionError(
            'panel complex of kind {0} checked in mode {1}'.format(
                Z.kind, mode))
    system = geom.system
    if rc is None:
        rc = realize(geom, Z)
    interior = [c for c in Z.cells() if Z.type_set(c) ==
                (Z.witness['J'] if mode == 'A' else frozenset())]
    panel_clauses = []
    if mode == 'A':
        J = Z.witness['J']
        for s in sorted(Z.witness['K']):
            panel_clauses.append((J | {s}, Z.vertex_cell(J | {s})))
    else:
        for part in Z.witness['partition']:
            panel_clauses.append((part, Z.vertex_cell(part)))
    panel_vertices = {rc.class_of(C, cell)
                      for _, cell in panel_clauses for C in geom.chambers}
    stars = {C: rc.star(C) for C in geom.chambers}
    pairs = 0
    for C in geom.chambers:
        for D in geom.chambers:
            pairs += 1
            delta = geom.weyl_distance(C, D)
            same_star = stars[C] == stars[D]
            if mode == 'A':
                inside = in_parabolic(delta, Z.witness['J'])
                if inside != same_star:
                    return _panel_failure(geom, 'J-residue', C, D, delta,
                                          pairs)
            for cell in interior:
                same = rc.class_of(C, cell) == rc.class_of(D, cell)
                expected = (in_parabolic(delta, Z.witness['J'])
                            if mode == 'A' else C == D)
                if same != expected:
                    return _panel_failure(geom, 'interior ' + Z.label(cell),
                                          C, D, delta, pairs)
            for S, cell in panel_clauses:
                same = rc.class_of(C, cell) == rc.class_of(D, cell)
                if same != in_parabolic(delta, S):
                    return _panel_failure(geom, 'panel ' + Z.label(cell),
                                          C, D, delta, pairs)
            if not same_star:
                shared = stars[C] & stars[D] & panel_vertices
                if len(shared) > 1:
                    return _panel_failure(geom, 'gluing degree', C, D, delta,
                                          pairs)
    logger.debug('panel structure (%s) holds on %d pairs', mode, pairs)
    return LemmaReport.success('panel_structure', pairs=pairs,
                               clauses=len(panel_clauses) + len(interior))


def _panel_failure(geom, clause, C, D, delta, pairs):
    return LemmaReport.failure(
        'panel_structure',
        {'clause': clause, 'pair': [geom.label(C), geom.label(D)],
         'delta': delta.label},
        pairs=pairs)


def verify_residue_collapse(geom, rc, J):
    """
    The number of distinct copies ``Z(C)`` equals the number of
    ``J``-residues meeting the geometry.
    """
    J = geom.system.subset(J)
    copies = len({rc.star(C) for C in geom.chambers})
    residues = len(_residue_partition(geom, J))
    if copies != residues:
        raise LemmaViolation(
            '{0} copies of Z for {1} residues of type {2}'.format(
                copies, residues, geom.system.format_subset(J)),
            witness={'copies': copies, 'residues': residues})
    return True


def verify_cellular_action(geom, rc, sample):
    """
    Left multiplication on a thin geometry permutes the classes, and an
    element stabilizing a cell class fixes its vertices.

    Images leaving the geometry and boundary classes are skipped.
    """
    if not geom.thin:
        raise PreconditionError('the action check needs a thin geometry')
    Z = rc.Z
    checks = stabilized = skipped = 0
    for g in sample:
        for index, realized in enumerate(rc.classes):
            if realized.boundary:
                skipped += 1
                continue
            cell = realized.cell
            C = realized.representative
            gC = g * C
            if gC not in geom:
                skipped += 1
                continue
            checks += 1
            image = rc.class_of(gC, cell)
            for D in realized.members:
                gD = g * D
                if gD in geom and rc.class_of(gD, cell) != image:
                    return LemmaReport.failure(
                        'cellular_action',
                        {'g': g.label, 'cell': rc.label(index),
                         'reason': 'action depends on the representative'},
                        checks=checks)
            if image != index:
                continue
            stabilized += 1
            for v in cell.vertices:
                vertex = Z.vertex_cell(v)
                if rc.class_of(gC, vertex) != rc.class_of(C, vertex):
                    return LemmaReport.failure(
                        'cellular_action',
                        {'g': g.label, 'cell': rc.label(index),
                         'vertex': Z.vertex_label(v)},
                        checks=checks)
    return LemmaReport.success(
        'cellular_action', elements=len(sample), checks=checks,
        stabilized=stabilized, skipped=skipped)


class AmalgamReport(namedtuple('AmalgamReport',
                               ('quotient_cells', 'vertex_stabilizer_orders',
                                'edge_stabilizer_order', 'factorizations'))):
    """
    ``W`` acting on the realized segment: orbit counts per cell dimension,
    the orders of ``W_{J ∪ {s}}``, ``W_{J ∪ {t}}`` and ``W_J``, and the
    factorization reports for the alternating products.
    """
    __slots__ = ()

    @property
    def orbit_count(self):
        return sum(self.quotient_cells.values())

    def as_report(self):
        def order(x):
            return 'infinity' if x == INFINITY else x

        failed = [f for f in self.factorizations if f.failed]
        counts = {
            'orbits': self.orbit_count,
            'vertex_stabilizers': [order(x)
                                   for x in self.vertex_stabilizer_orders],
            'edge_stabilizer': order(self.edge_stabilizer_order),
            'factorizations': len(self.factorizations),
        }
        if failed:
            return LemmaReport('amalgam', 'fail', counts,
                               failed[0].witness)
        return LemmaReport('amalgam', 'pass', counts)


def _orbits(geom, rc):
    graph = nx.Graph()
    graph.add_nodes_from(range(len(rc.classes)))
    for index, realized in enumerate(rc.classes):
        C = realized.representative
        for s in geom.system.generators:
            sC = geom.system.generator(s) * C
            if sC in geom:
                graph.add_edge(index, rc.class_of(sC, realized.cell))
    return [sorted(c) for c in nx.connected_components(graph)]


def amalgam_report(system, s, t, radius):
    """
    ``W = W_{J ∪ {s}} *_{W_J} W_{J ∪ {t}}`` for ``m(s, t) = ∞``.

    The thin ball is realized with the single-edge complex; ``W`` must have
    exactly three cell orbits (two vertices and the edge). Alternating
    products of elements of ``W_{J ∪ {s}} \\ W_J`` and
    ``W_{J ∪ {t}} \\ W_J`` of total length up to ``2 * radius`` are checked
    with :func:`~twinlab.factorization.check_tilde_factorization`.
    """
    s, t = system.index(s), system.index(t)
    Z = panel_complex_edge(system, s, t)
    J = Z.witness['J']
    geom = enumerate_ball(system, radius)
    rc = realize(geom, Z)
    orbits = _orbits(geom, rc)
    quotient = {'vertex': 0, 'edge': 0}
    for orbit in orbits:
        dimension = rc.classes[orbit[0]].cell.dimension
        quotient['vertex' if dimension == 0 else 'edge'] += 1
    if len(orbits) != 3:
        raise LemmaViolation(
            'W has {0} cell orbits on the realized segment'.format(
                len(orbits)), witness=quotient)
    orders = tuple(spherical_order(system, J | {x}).order for x in (s, t))
    edge_order = spherical_order(system, J).order
    length_cap = min(2 * radius, config.max_word_length())
    factorizations = []
    for m in range(2, length_cap + 1):
        for first, second in ((s, t), (t, s)):
            factorizations.append(check_tilde_factorization(
                system, alternating_word(first, second, m), J,
                length_cap=length_cap))
    logger.debug('amalgam over %s: orbits %s, stabilizers %s / %s',
                 system.format_subset(J), quotient, orders, edge_order)
    return AmalgamReport(quotient, orders, edge_order, factorizations)

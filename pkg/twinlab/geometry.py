"""
Chamber geometries: finite sets of chambers with a Weyl distance.

A :class:`ChamberGeometry` is either complete (a whole building, such as a
flag building over F_q) or a ball around a center chamber, in which case
only spheres and residues that fit inside the ball may be counted.
"""
import functools
import math
from logging import getLogger

from . import coxeter
from .diagrams import spherical_order
from .errors import LemmaViolation, PreconditionError, TruncationError
from .lemmas import LemmaReport

logger = getLogger(__name__)


class ChamberGeometry(object):
    """
    Parameters
    ----------
    system: CoxeterSystem
        The type of the geometry.
    chambers: sequence
        Hashable chambers in canonical order.
    distance: callable
        ``distance(C, D)`` returns a :class:`~twinlab.coxeter.GroupElement`.
    parameters: dict
        Generator index -> thickness ``q_s``.
    complete: bool
        Whether ``chambers`` is the whole building.
    center: chamber, optional
        Center of a ball; the first chamber by default.
    radius: int, optional
        Radius of a ball; ``None`` for complete geometries.
    """

    def __init__(self, system, chambers, distance, parameters, complete,
                 center=None, radius=None):
        self.system = system
        self.chambers = tuple(chambers)
        self._distance = distance
        self.parameters = dict(parameters)
        self.complete = complete
        self.center = self.chambers[0] if center is None else center
        self.radius = radius
        self._index = {c: i for i, c in enumerate(self.chambers)}
        self._cache = {}
        self._panels = None

    def __len__(self):
        return len(self.chambers)

    def __contains__(self, chamber):
        return chamber in self._index

    def __repr__(self):
        kind = 'complete' if self.complete else 'ball({0})'.format(
            self.radius)
        return '<ChamberGeometry {0} chambers, {1}>'.format(
            len(self.chambers), kind)

    @property
    def thin(self):
        return all(q == 1 for q in self.parameters.values())

    @property
    def q_min(self):
        return min(self.parameters.values())

    @property
    def q_max(self):
        return max(self.parameters.values())

    def index(self, chamber):
        return self._index[chamber]

    def label(self, chamber):
        return getattr(chamber, 'label', str(chamber))

    def weyl_distance(self, C, D):
        key = (self._index[C], self._index[D])
        try:
            return self._cache[key]
        except KeyError:
            value = self._cache[key] = self._distance(C, D)
            return value

    def margin(self, C):
        """How far spheres around ``C`` may reach without leaving."""
        if self.complete:
            return math.inf
        return self.radius - self.weyl_distance(self.center, C).length

    def parameter_product(self, word):
        product = 1
        for s in word:
            product *= self.parameters[s]
        return product

    def neighbors(self, C, s):
        """Chambers ``s``-adjacent to ``C``, that is ``C_s(C)``."""
        if self._panels is None:
            panels = {}
            for D in self.chambers:
                for E in self.chambers:
                    word = self.weyl_distance(D, E).word
                    if len(word) == 1:
                        panels.setdefault((D, word[0]), []).append(E)
            self._panels = panels
        return self._panels.get((C, s), [])


def enumerate_ball(system, radius):
    """
    The thin ball: elements of length at most ``radius`` with
    ``δ(u, v) = u⁻¹v`` and every thickness 1.

    The geometry is marked complete when the ball is all of ``W``.
    """
    elements = coxeter.ball(system, radius)
    complete = all(
        (w * system.generator(s)).length <= radius
        for w in elements if w.length == radius
        for s in system.generators
    )

    def distance(u, v):
        return coxeter.multiply(u.inverse(), v)

    return ChamberGeometry(
        system, elements, distance,
        {s: 1 for s in system.generators},
        complete=complete, center=system.identity,
        radius=None if complete else radius,
    )


def _sphere(geom, C, w):
    return [D for D in geom.chambers if geom.weyl_distance(C, D) == w]


def w_sphere(geom, C, w):
    """
    ``C_w(C)``, the chambers at Weyl distance exactly ``w`` from ``C``.

    On balls the sphere must fit inside: ``ℓ(w)`` may not exceed the margin
    of ``C``.
    """
    if w.length > geom.margin(C):
        raise TruncationError(
            'the {0}-sphere around {1} may leave the ball'.format(
                w.label, geom.label(C)))
    return _sphere(geom, C, w)


def verify_sphere_product(geom, C, length_cap):
    """
    Check sphere sizes and the disjoint-union decomposition of spheres.

    For every ``w`` with ``ℓ(w) <= length_cap``: ``|C_w(C)|`` is the product
    of the thicknesses along any reduced decomposition of ``w`` and lies
    between ``q_min^ℓ`` and ``q_max^ℓ``. For every ``s`` with
    ``ℓ(ws) = ℓ(w) + 1`` inside the margin,
    ``C_ws(C)`` is the disjoint union of ``C_s(D)`` over ``D ∈ C_w(C)``.
    On complete geometries sphere sizes also add up to the chamber count.
    """
    margin = geom.margin(C)
    if length_cap > margin:
        raise TruncationError(
            'length cap {0} exceeds the margin {1} of {2}'.format(
                length_cap, margin, geom.label(C)))
    system = geom.system
    radius = length_cap
    if geom.complete:
        radius = min(length_cap, max(
            geom.weyl_distance(C, D).length for D in geom.chambers))
    elements = coxeter.ball(system, radius)
    sizes = []
    claims = 0
    for w in elements:
        sphere = _sphere(geom, C, w)
        expected = {geom.parameter_product(u)
                    for u in coxeter.mii_class(system, w.word)}
        if len(expected) != 1:
            return LemmaReport.failure(
                'sphere_product',
                {'w': w.label, 'reason': 'products differ between reduced '
                 'decompositions'})
        expected = expected.pop()
        low = geom.q_min ** w.length
        high = geom.q_max ** w.length
        if len(sphere) != expected or not low <= len(sphere) <= high:
            return LemmaReport.failure(
                'sphere_product',
                {'w': w.label, 'size': len(sphere), 'expected': expected})
        sizes.append(len(sphere))
        for s in system.generators:
            ws = w * system.generator(s)
            if ws.length != w.length + 1 or ws.length > margin:
                continue
            claims += 1
            union = set()
            total = 0
            for D in sphere:
                panel = geom.neighbors(D, s)
                total += len(panel)
                union.update(panel)
            if total != len(union) or union != set(_sphere(geom, C, ws)):
                return LemmaReport.failure(
                    'sphere_product',
                    {'w': w.label, 's': system.names[s],
                     'reason': 'C_ws(C) is not the disjoint union of the '
                     'C_s(D)'})
    counts = {'elements': len(elements), 'claims': claims,
              'sphere_sizes': sorted(sizes)}
    if geom.complete:
        by_distance = {}
        for D in geom.chambers:
            w = geom.weyl_distance(C, D)
            by_distance[w] = by_distance.get(w, 0) + 1
        total = 0
        for w, size in sorted(by_distance.items()):
            if size != geom.parameter_product(w.word):
                return LemmaReport.failure(
                    'sphere_product', {'w': w.label, 'size': size})
            total += size
        if total != len(geom):
            return LemmaReport.failure(
                'sphere_product', {'reason': 'spheres do not partition',
                                   'total': total})
        counts['chambers'] = len(geom)
    return LemmaReport('sphere_product', 'pass', counts)


def residue_size(geom, C, J):
    """
    ``|R_J(C)|`` from the thickness formula, checked against a direct count
    of ``{D : δ(C, D) ∈ W_J}``.
    """
    system = geom.system
    J = system.subset(J)
    report = spherical_order(system, J)
    if not report.is_spherical:
        raise PreconditionError(
            'W_J is infinite for J = {0}'.format(system.format_subset(J)))
    elements = _parabolic(system, J)
    longest = max(w.length for w in elements)
    if longest > geom.margin(C):
        raise TruncationError(
            'the {0}-residue of {1} may leave the ball'.format(
                system.format_subset(J), geom.label(C)))
    formula = residue_formula(geom, J)
    direct = sum(
        1 for D in geom.chambers
        if coxeter.in_parabolic(geom.weyl_distance(C, D), J)
    )
    if formula != direct:
        raise LemmaViolation(
            'residue count {0} differs from the formula {1}'.format(
                direct, formula),
            witness={'J': system.format_subset(J), 'direct': direct,
                     'formula': formula})
    return formula


@functools.lru_cache(maxsize=None)
def _parabolic(system, J):
    return tuple(coxeter.parabolic_elements(system, J))


def residue_formula(geom, J):
    """``Σ q_w`` over ``w ∈ W_J`` for a spherical ``J``."""
    return sum(geom.parameter_product(w.word)
               for w in _parabolic(geom.system, frozenset(J)))


def verify_building_axioms(geom):
    """
    Exhaustive check of the Weyl distance axioms and panel sizes.

    Only meaningful on complete geometries; on balls the axiom is checked
    for the triples that stay inside.
    """
    system = geom.system
    chambers = geom.chambers
    triples = 0
    for C in chambers:
        if not geom.weyl_distance(C, C).is_identity():
            return LemmaReport.failure(
                'building_axioms', {'chamber': geom.label(C),
                                    'reason': 'δ(C, C) != 1'})
        for s in system.generators:
            panel = geom.neighbors(C, s)
            if geom.complete and len(panel) != geom.parameters[s]:
                return LemmaReport.failure(
                    'building_axioms',
                    {'chamber': geom.label(C), 's': system.names[s],
                     'panel': len(panel) + 1,
                     'expected': geom.parameters[s] + 1})
    for C in chambers:
        for D in chambers:
            w = geom.weyl_distance(C, D)
            if geom.weyl_distance(D, C) != w.inverse():
                return LemmaReport.failure(
                    'building_axioms',
                    {'pair': [geom.label(C), geom.label(D)],
                     'reason': 'δ(D, C) != δ(C, D)⁻¹'})
            for s in system.generators:
                ws = w * system.generator(s)
                for E in geom.neighbors(D, s):
                    triples += 1
                    found = geom.weyl_distance(C, E)
                    if found not in (w, ws) or (
                            ws.length > w.length and found != ws):
                        return LemmaReport.failure(
                            'building_axioms',
                            {'triple': [geom.label(C), geom.label(D),
                                        geom.label(E)],
                             'delta': found.label})
    return LemmaReport.success(
        'building_axioms', chambers=len(chambers), triples=triples)

"""
The verification pipeline: classify, realize, verify, conclude.
"""
from logging import getLogger

from packaging.version import Version

from . import __version__, config as settings
from .complexes import (
    check_spherical_types, panel_complex_A, panel_complex_B,
    verify_davis_dimension,
)
from .coxeter import ball, load_system
from .diagrams import (
    Rank3Case, Verdict, check_classification, classify_condition,
    infinite_pairs, spherical_subsets,
)
from .errors import PreconditionError, TwinlabError
from .factorization import check_tilde_factorization
from .flags import build_flag_building
from .geometry import (
    enumerate_ball, residue_size, verify_building_axioms,
    verify_sphere_product,
)
from .lemmas import LemmaReport, Status
from .oracle import verify_word_problem, word_check_radius
from .realization import (
    amalgam_report, realize, tree_check, verify_cellular_action,
    verify_panel_structure, verify_residue_collapse,
)
from .twin import (
    twin_context, verify_birkhoff_types, verify_intersection_orders,
    verify_negative_orbits, verify_negative_stabilizers,
    verify_parabolic_indices, verify_unbounded_orders,
)

logger = getLogger(__name__)

STRUCTURAL_LEMMAS = (
    'spherical_types', 'tree', 'panel_structure', 'residue_collapse',
    'cellular_action', 'tilde_factorization', 'amalgam', 'davis_dimension',
)

TREE_SCOPE = (
    'tree-ness is checked on finite balls only; that the whole realization '
    'is a tree is asserted, not verified'
)


class VerificationReport(object):
    """
    Everything :func:`run_pipeline` found out about one Coxeter system.

    ``graphs`` maps a name to the edge list of a realized complex; it is
    only filled when graph export is requested and is not part of
    :meth:`as_dict`.
    """

    def __init__(self, system, classification, lemmas, conclusion,
                 graphs=None):
        self.system = system
        self.classification = classification
        self.lemmas = list(lemmas)
        self.conclusion = conclusion
        self.graphs = dict(graphs or {})
        self.version = str(Version(__version__))

    @property
    def status(self):
        if any(lemma.failed for lemma in self.lemmas):
            return Status.failed
        return Status.passed

    @property
    def passed(self):
        return self.status is Status.passed

    @property
    def exit_code(self):
        return 0 if self.passed else 1

    def as_dict(self):
        return {
            'system': self.system.to_json_dict(),
            'classification': self.classification.as_dict(self.system),
            'lemmas': [lemma.as_dict() for lemma in self.lemmas],
            'conclusion': self.conclusion,
            'version': self.version,
            'status': self.status.value,
        }


def _run(lemmas, name, func, *args, **kwargs):
    try:
        report = func(*args, **kwargs)
    except TwinlabError as e:
        report = LemmaReport.failure(
            name, {'error': type(e).__name__, 'message': str(e),
                   'witness': getattr(e, 'witness', None)})
    lemmas.append(report)
    log = logger.warning if report.failed else logger.info
    log('%s: %s %s', report.name, report.status.value,
        report.counts.get('q', ''))
    return report


def _raise(error):
    raise error


def _skip(lemmas, name, reason):
    logger.warning('%s skipped: %s', name, reason)
    lemmas.append(LemmaReport.skipped(name, reason))


def _as_lemma(name, check, **counts):
    def run(*args):
        check(*args)
        return LemmaReport.success(name, **counts)
    return run


def _factorization_pair(system, classification):
    if classification.verdict is Verdict.condition_a:
        s, t = sorted(classification.K)[:2]
        return s, t
    return infinite_pairs(system)[0]


def _amalgam_pair(system, classification):
    if classification.verdict is Verdict.condition_a and \
            len(classification.K) == 2:
        return tuple(sorted(classification.K))
    pairs = infinite_pairs(system)
    return pairs[0] if pairs else None


def panel_complex_for(system, classification):
    """
    The panel complex matching a condition (A) or (B) witness, and the
    residue type ``J`` whose residues carry one copy of it each.
    """
    verdict = classification.verdict
    if verdict is Verdict.condition_a:
        return (panel_complex_A(system, classification.J, classification.K),
                classification.J)
    if verdict is Verdict.condition_b:
        return panel_complex_B(system, classification.partition), frozenset()
    raise PreconditionError(
        'no panel complex for a {0} system'.format(verdict.value))


def _structural_suite(system, classification, config, lemmas, graphs):
    verdict = classification.verdict
    Z, J = panel_complex_for(system, classification)
    _run(lemmas, 'spherical_types', check_spherical_types, system, Z)

    try:
        geom = enumerate_ball(system, config.radius)
        rc = realize(geom, Z)
    except TwinlabError as e:
        _run(lemmas, 'tree', _raise, e)
        for name in STRUCTURAL_LEMMAS[2:]:
            _skip(lemmas, name, 'the ball could not be realized')
        return
    if config.export_graphs:
        graphs['realization'] = rc.edge_list()
    _run(lemmas, 'tree', lambda: tree_check(rc).as_report())
    _run(lemmas, 'panel_structure', verify_panel_structure, geom, Z,
         verdict, rc)
    copies = len({rc.star(C) for C in geom.chambers})
    _run(lemmas, 'residue_collapse',
         _as_lemma('residue_collapse', verify_residue_collapse,
                   copies=copies, chambers=len(geom)),
         geom, rc, J)
    sample = ball(system, config.action_length)
    _run(lemmas, 'cellular_action', verify_cellular_action, geom, rc, sample)

    s, t = _factorization_pair(system, classification)
    for t_seq in ((s, t), (s, t, s)):
        _run(lemmas, 'tilde_factorization', check_tilde_factorization,
             system, t_seq, length_cap=config.max_len)

    pair = _amalgam_pair(system, classification)
    if pair is None:
        _skip(lemmas, 'amalgam',
              'no pair of generators has an infinite label')
    else:
        _run(lemmas, 'amalgam',
             lambda: amalgam_report(system, pair[0], pair[1],
                                    config.radius).as_report())

    if system.rank > settings.max_davis_rank():
        _skip(lemmas, 'davis_dimension', 'rank exceeds the subset cap')
    else:
        _run(lemmas, 'davis_dimension', verify_davis_dimension, system)


def _flag_suite(q, lemmas):
    geom = build_flag_building(3, q)
    C = geom.chambers[0]
    _run(lemmas, 'sphere_product', verify_sphere_product, geom, C, 3)

    def residues():
        sizes = {geom.system.format_subset(J): residue_size(geom, C, J)
                 for J in spherical_subsets(geom.system)}
        return LemmaReport.success('residue_size', q=q, sizes=sizes)

    _run(lemmas, 'residue_size', residues)
    _run(lemmas, 'building_axioms', verify_building_axioms, geom)


def run_twin_suite(config, lemmas=None):
    """
    Flag-building and twin-model verifiers for every q in
    ``config.twin_q``. Reports are appended to ``lemmas`` and returned.
    """
    lemmas = [] if lemmas is None else lemmas
    for q in config.twin_q:
        _flag_suite(q, lemmas)
        ctx = twin_context(q)
        cap = config.twin_cap(q)
        _run(lemmas, 'intersection_order', verify_intersection_orders, ctx,
             cap)
        _run(lemmas, 'negative_orbit', verify_negative_orbits, ctx, cap)
        _run(lemmas, 'negative_stabilizer', verify_negative_stabilizers,
             ctx, cap)
        _run(lemmas, 'unbounded_orders', verify_unbounded_orders, ctx, cap)
        _run(lemmas, 'parabolic_index', verify_parabolic_indices, ctx,
             max(cap - 1, 0))
        _run(lemmas, 'birkhoff_type', verify_birkhoff_types, ctx, cap)
    return lemmas


def _runs_twin(system, config):
    mode = config.twin
    if mode is settings.TwinMode.always:
        return True
    if mode is settings.TwinMode.never:
        return False
    return system.rank == 2 and bool(infinite_pairs(system))


def _conclusion(system, classification, lemmas, config):
    verdict = classification.verdict
    theorem = {
        Verdict.condition_a: 'condition (A)',
        Verdict.condition_b: 'condition (B)',
    }.get(verdict)
    if theorem is None:
        return None
    failed = [lemma.name for lemma in lemmas if lemma.failed]
    conclusion = {
        'theorem': theorem,
        'witness': classification.as_dict(system),
        'hypotheses': 'failed' if failed else 'verified at desk scale',
        'asserts': [
            'G is not FP_2 and therefore not finitely presented',
            'B_+ and B_- are not FP_1 and hence not finitely generated',
            'the same holds for every parabolic subgroup of spherical type',
        ],
        'scope': TREE_SCOPE,
        'radius': config.radius,
    }
    if failed:
        conclusion['failed_lemmas'] = sorted(set(failed))
    davis = [lemma for lemma in lemmas
             if lemma.name == 'davis_dimension' and lemma.passed]
    if davis:
        n = davis[0].counts['dimension']
        conclusion['davis'] = {
            'dimension': n,
            'asserts': 'G is not FP_{0}'.format(2 * n),
            'realization_bound': 'G is not FP_2',
        }
    case = classification.rank3_case
    if case is not None and case is not Rank3Case.none:
        conclusion['rank3_case'] = case.value
    return conclusion


def run_pipeline(config):
    """
    Run every applicable verifier on the system in ``config.input_path``.

    Errors raised inside a verifier become failed lemma entries; a
    malformed system file raises :class:`~twinlab.errors.ValidationError`.
    """
    system = load_system(config.input_path)
    classification = classify_condition(system)
    logger.info('%s classified as %s', config.input_path,
                classification.verdict.value)
    lemmas = []
    graphs = {}
    _run(lemmas, 'classification', check_classification, system,
         classification)
    word_radius = word_check_radius(system, config.radius)
    _run(lemmas, 'word_problem', verify_word_problem, system, word_radius)

    if classification.verdict in (Verdict.condition_a, Verdict.condition_b):
        _structural_suite(system, classification, config, lemmas, graphs)
    else:
        for name in STRUCTURAL_LEMMAS:
            _skip(lemmas, name, 'classification is {0}'.format(
                classification.verdict.value))
    if _runs_twin(system, config):
        run_twin_suite(config, lemmas)

    conclusion = _conclusion(system, classification, lemmas, config)
    return VerificationReport(system, classification, lemmas, conclusion,
                              graphs)

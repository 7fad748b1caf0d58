import pytest

from twinlab import pipeline
from twinlab.config import PipelineConfig
from twinlab.diagrams import Verdict, classify_condition
from twinlab.errors import LemmaViolation, PreconditionError, ValidationError
from twinlab.lemmas import Status
from twinlab.pipeline import panel_complex_for, run_pipeline, run_twin_suite
from twinlab.report import to_json

from twinlab_test_utils import systems


def _config(name, **kwargs):
    options = dict(radius=3, max_len=4, twin='never')
    options.update(kwargs)
    return PipelineConfig(systems.system_path(name), **options)


def _names(report):
    return [lemma.name for lemma in report.lemmas]


def _lemma(report, name):
    return next(lemma for lemma in report.lemmas if lemma.name == name)


STRUCTURAL = [
    'classification', 'word_problem', 'spherical_types', 'tree',
    'panel_structure', 'residue_collapse', 'cellular_action',
    'tilde_factorization', 'tilde_factorization', 'amalgam',
    'davis_dimension',
]


class TestRunPipeline(object):

    def test_all_infinity(self):
        report = run_pipeline(_config('rank3_all_infinity'))
        assert report.classification.verdict is Verdict.condition_b
        assert _names(report) == STRUCTURAL
        assert report.passed, [lemma.as_dict() for lemma in report.lemmas
                               if lemma.failed]
        assert report.exit_code == 0
        assert _lemma(report, 'amalgam').passed
        conclusion = report.conclusion
        assert conclusion['theorem'] == 'condition (B)'
        assert conclusion['hypotheses'] == 'verified at desk scale'
        assert conclusion['rank3_case'] == 'all-infinity'
        assert conclusion['davis'] == {
            'dimension': 1,
            'asserts': 'G is not FP_2',
            'realization_bound': 'G is not FP_2',
        }
        assert 'failed_lemmas' not in conclusion
        assert conclusion['radius'] == 3

    @pytest.mark.parametrize('name, stabilizers', [
        ('rank3_all_infinity', ['infinity', 'infinity']),
        ('rank3_two_infinity', [6, 'infinity']),
    ])
    def test_amalgam_for_condition_b(self, name, stabilizers):
        report = run_pipeline(_config(name))
        amalgam = _lemma(report, 'amalgam')
        assert amalgam.status is Status.passed
        assert amalgam.counts['orbits'] == 3
        assert amalgam.counts['vertex_stabilizers'] == stabilizers
        assert amalgam.counts['edge_stabilizer'] == 2
        assert amalgam.counts['factorizations'] == 10

    def test_condition_a(self):
        report = run_pipeline(_config('rank3_one_infinity'))
        assert report.classification.verdict is Verdict.condition_a
        assert report.passed, [lemma.as_dict() for lemma in report.lemmas
                               if lemma.failed]
        assert _lemma(report, 'amalgam').passed
        assert report.conclusion['theorem'] == 'condition (A)'
        assert report.conclusion['witness']['J'] == '{u}'
        assert report.conclusion['davis']['asserts'] == 'G is not FP_4'

    def test_two_spherical_has_no_conclusion(self):
        report = run_pipeline(_config('a3'))
        assert report.classification.verdict is Verdict.two_spherical
        assert report.conclusion is None
        assert report.passed
        skipped = [lemma.name for lemma in report.lemmas
                   if lemma.status is Status.skipped]
        assert skipped == list(pipeline.STRUCTURAL_LEMMAS)

    def test_infinite_dihedral_runs_twin_suite(self):
        report = run_pipeline(_config(
            'infinite_dihedral', twin='auto', twin_q=(2,),
            twin_caps={2: 2}))
        names = _names(report)
        assert 'intersection_order' in names
        assert 'birkhoff_type' in names
        assert report.passed, [lemma.as_dict() for lemma in report.lemmas
                               if lemma.failed]
        assert _lemma(report, 'amalgam').passed

    def test_twin_never(self):
        report = run_pipeline(_config('infinite_dihedral'))
        assert 'intersection_order' not in _names(report)

    def test_failed_lemma(self, monkeypatch):
        def broken(system):
            raise LemmaViolation('forced', witness={'dimension': -1})

        monkeypatch.setattr(pipeline, 'verify_davis_dimension', broken)
        report = run_pipeline(_config('rank3_all_infinity'))
        lemma = _lemma(report, 'davis_dimension')
        assert lemma.failed
        assert lemma.witness == {'error': 'LemmaViolation',
                                 'message': 'forced',
                                 'witness': {'dimension': -1}}
        assert report.status is Status.failed
        assert report.exit_code == 1
        assert report.conclusion['hypotheses'] == 'failed'
        assert report.conclusion['failed_lemmas'] == ['davis_dimension']
        assert 'davis' not in report.conclusion

    def test_default_radius(self):
        report = run_pipeline(_config('rank3_two_infinity', radius=6))
        assert report.passed, [lemma.as_dict() for lemma in report.lemmas
                               if lemma.failed]
        assert _lemma(report, 'tree').counts == {'vertices': 293,
                                                 'edges': 292}

    def test_corrupted_file(self, corrupted_path):
        with pytest.raises(ValidationError):
            run_pipeline(PipelineConfig(corrupted_path))

    def test_deterministic(self):
        first = to_json(run_pipeline(_config('rank3_two_infinity')))
        second = to_json(run_pipeline(_config('rank3_two_infinity')))
        assert first == second

    def test_export_graphs(self):
        report = run_pipeline(_config('infinite_dihedral',
                                      export_graphs=True))
        edges = report.graphs['realization']
        assert len(edges) == 14
        assert 'graphs' not in report.as_dict()

    def test_as_dict(self):
        data = run_pipeline(_config('rank3_two_infinity')).as_dict()
        assert sorted(data) == ['classification', 'conclusion', 'lemmas',
                                'status', 'system', 'version']
        assert data['status'] == 'pass'
        assert data['system']['names'] == ['s', 't', 'u']
        assert all('statement' in lemma for lemma in data['lemmas'])


def test_panel_complex_for(rank3_one_infinity, a3):
    Z, J = panel_complex_for(rank3_one_infinity,
                             classify_condition(rank3_one_infinity))
    assert Z.kind == 'A'
    assert J == frozenset({2})
    with pytest.raises(PreconditionError):
        panel_complex_for(a3, classify_condition(a3))


def test_run_twin_suite():
    config = PipelineConfig(None, twin_q=(2,), twin_caps={2: 2})
    lemmas = run_twin_suite(config)
    assert [lemma.name for lemma in lemmas] == [
        'sphere_product', 'residue_size', 'building_axioms',
        'intersection_order', 'negative_orbit', 'negative_stabilizer',
        'unbounded_orders', 'parabolic_index', 'birkhoff_type',
    ]
    assert all(lemma.passed for lemma in lemmas), \
        [lemma.as_dict() for lemma in lemmas]
    assert lemmas[1].counts['sizes'] == {
        '{}': 1, '{s1}': 3, '{s2}': 3, '{s1,s2}': 21}

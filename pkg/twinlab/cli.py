"""
``twinlab`` command line.

Exit codes: 0 when every executed check passed, 1 when a lemma failed,
2 on invalid input, configuration or I/O errors.
"""
import argparse
import json
import logging
import sys

from . import __version__
from .config import FIELD_ORDERS, OutputFormat, PipelineConfig, TwinMode
from .coxeter import is_reduced, load_system, m_reduce
from .diagrams import classify_condition, spherical_order, spherical_subsets
from .errors import TwinlabError
from .geometry import enumerate_ball
from .pipeline import panel_complex_for, run_pipeline, run_twin_suite
from .realization import realize, tree_check
from .report import emit_report

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_ERROR = 2


def _dump(data, out):
    out.write(json.dumps(data, sort_keys=True, indent=2,
                         ensure_ascii=False) + '\n')


def _config(args, **overrides):
    options = dict(
        input_path=getattr(args, 'input', None),
        radius=getattr(args, 'radius', 6),
        max_len=getattr(args, 'max_len', 8),
        twin_q=args.twin_q or (2, 3),
        output_format=getattr(args, 'format', 'json'),
        export_graphs=getattr(args, 'export_graphs', False),
        twin=getattr(args, 'twin', 'auto'),
    )
    options.update(overrides)
    return PipelineConfig(**options)


def cmd_classify(args, out):
    system = load_system(args.input)
    classification = classify_condition(system)
    whole = spherical_order(system, system.generators)
    _dump({
        'classification': classification.as_dict(system),
        'spherical': whole.is_spherical,
        'order': 'infinity' if not whole.is_spherical else whole.order,
        'types': list(whole.types),
        'spherical_subsets': [system.format_subset(J)
                              for J in spherical_subsets(system)],
    }, out)
    return EXIT_OK


def cmd_reduce(args, out):
    system = load_system(args.input)
    results = []
    for text in args.words:
        word = system.parse_word(text)
        element = m_reduce(system, word)
        results.append({
            'word': system.format_word(word),
            'normal_form': element.label,
            'length': element.length,
            'reduced': is_reduced(system, word),
        })
    _dump(results, out)
    return EXIT_OK


def cmd_realize(args, out):
    config = _config(args)
    system = load_system(config.input_path)
    Z, _ = panel_complex_for(system, classify_condition(system))
    rc = realize(enumerate_ball(system, config.radius), Z)
    tree = tree_check(rc)
    summary = {
        'complex': Z.kind,
        'radius': config.radius,
        'vertices': tree.vertex_count,
        'edges': tree.edge_count,
        'tree': tree.is_tree,
    }
    if tree.cycle:
        summary['cycle'] = tree.cycle
    if config.export_graphs:
        summary['edge_list'] = rc.edge_list()
    _dump(summary, out)
    return EXIT_OK if tree.is_tree else EXIT_FAILED


def cmd_verify(args, out):
    report = run_pipeline(_config(args))
    for lemma in report.lemmas:
        out.write('{0:<22} {1}\n'.format(lemma.name, lemma.status.value))
    out.write('status: {0}\n'.format(report.status.value))
    return report.exit_code


def cmd_twin(args, out):
    config = _config(args, twin=TwinMode.always)
    lemmas = run_twin_suite(config)
    _dump([lemma.as_dict() for lemma in lemmas], out)
    return EXIT_FAILED if any(lemma.failed for lemma in lemmas) else EXIT_OK


def cmd_report(args, out):
    config = _config(args)
    report = run_pipeline(config)
    text = emit_report(report, config.output_format, args.output)
    if args.output is None:
        out.write(text)
    return report.exit_code


def _parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-v', '--verbose', action='count', default=0,
                        help='more logging; repeat for debug output')

    system = argparse.ArgumentParser(add_help=False)
    system.add_argument('-i', '--input', required=True,
                        help='Coxeter system JSON file')

    sizes = argparse.ArgumentParser(add_help=False)
    sizes.add_argument('-r', '--radius', type=int, default=6,
                       help='radius of the realized thin balls')
    sizes.add_argument('--max-len', type=int, default=8,
                       help='word length cap of the factorization checks')

    twin = argparse.ArgumentParser(add_help=False)
    twin.add_argument('-q', '--twin-q', type=int, nargs='+',
                      choices=FIELD_ORDERS, default=None,
                      help='field orders of the twin model')

    output = argparse.ArgumentParser(add_help=False)
    output.add_argument('-o', '--output', default=None,
                        help='write the report here instead of stdout')
    output.add_argument('--format', default=OutputFormat.json.value,
                        choices=[f.value for f in OutputFormat])
    output.add_argument('--export-graphs', action='store_true',
                        help='write realized graphs as edge lists')

    parser = argparse.ArgumentParser(
        prog='twinlab',
        description='Verify the combinatorial hypotheses behind '
                    'non-finite-presentability of Kac-Moody groups over '
                    'finite fields.')
    parser.add_argument('--version', action='version',
                        version='%(prog)s ' + __version__)
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    p = commands.add_parser('classify', parents=[common, system],
                            help='find a condition (A) or (B) witness')
    p.set_defaults(func=cmd_classify, twin_q=None)

    p = commands.add_parser('reduce', parents=[common, system],
                            help='ShortLex normal forms of words')
    p.add_argument('words', nargs='+',
                   help="words such as 's.t.s' or 's t s'")
    p.set_defaults(func=cmd_reduce, twin_q=None)

    p = commands.add_parser('realize', parents=[common, system, sizes],
                            help='realize a thin ball and check tree-ness')
    p.add_argument('--export-graphs', action='store_true',
                   help='include the edge list')
    p.set_defaults(func=cmd_realize, twin_q=None)

    p = commands.add_parser('verify', parents=[common, system, sizes, twin],
                            help='run every verifier and print statuses')
    p.add_argument('--twin', default=TwinMode.auto.value,
                   choices=[m.value for m in TwinMode])
    p.set_defaults(func=cmd_verify)

    p = commands.add_parser('twin', parents=[common, twin],
                            help='run the twin-model suite only')
    p.set_defaults(func=cmd_twin)

    p = commands.add_parser('report',
                            parents=[common, system, sizes, twin, output],
                            help='run every verifier and write a report')
    p.add_argument('--twin', default=TwinMode.auto.value,
                   choices=[m.value for m in TwinMode])
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    args = _parser().parse_args(argv)
    level = [logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose,
                                                               2)]
    logging.basicConfig(
        level=level, format='%(levelname)s %(name)s: %(message)s')
    try:
        return args.func(args, out)
    except TwinlabError as e:
        logger.error('%s: %s', type(e).__name__, e)
        return EXIT_ERROR
    except OSError as e:
        logger.error('%s', e)
        return EXIT_ERROR


if __name__ == '__main__':
    sys.exit(main())

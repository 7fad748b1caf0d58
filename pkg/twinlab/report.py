"""
Serialization of :class:`~twinlab.pipeline.VerificationReport`.

Output is deterministic: keys are sorted and every list in a report is
built in a fixed order, so the same report always produces the same bytes.
"""
import json
import os
from logging import getLogger

from .config import OutputFormat

logger = getLogger(__name__)


def to_json(report):
    return json.dumps(report.as_dict(), sort_keys=True, indent=2,
                      ensure_ascii=False) + '\n'


def _cell(value):
    if value is None:
        return ''
    if not isinstance(value, str):
        value = json.dumps(value, sort_keys=True, ensure_ascii=False)
    return value.replace('|', '\\|').replace('\n', ' ')


def to_markdown(report):
    data = report.as_dict()
    lines = [
        '# twinlab report',
        '',
        '- version: `{0}`'.format(data['version']),
        '- status: **{0}**'.format(data['status']),
        '- classification: `{0}`'.format(_cell(data['classification'])),
        '- system: `{0}`'.format(_cell(data['system'])),
        '',
        '| lemma | status | statement | counts | witness |',
        '|-------|--------|-----------|--------|---------|',
    ]
    for lemma in data['lemmas']:
        lines.append('| {0} | {1} | {2} | {3} | {4} |'.format(
            lemma['name'], lemma['status'], _cell(lemma['statement']),
            _cell(lemma['counts'] or None), _cell(lemma['witness'])))
    lines.append('')
    conclusion = data['conclusion']
    if conclusion is None:
        lines.append('No conclusion: the classification gate did not pass.')
    else:
        lines.append('## Conclusion')
        lines.append('')
        for key in sorted(conclusion):
            lines.append('- {0}: {1}'.format(key, _cell(conclusion[key])))
    return '\n'.join(lines) + '\n'


def _graph_path(path, name):
    root, _ = os.path.splitext(path)
    return '{0}.{1}.edges'.format(root, name)


def emit_report(report, fmt, path=None):
    """
    Serialize ``report`` as ``fmt`` and write it to ``path``.

    Without a ``path`` the text is returned and nothing is written. Edge
    lists collected in ``report.graphs`` are written next to ``path`` as
    ``<stem>.<name>.edges``, one ``u v`` pair per line.

    Returns
    -------
    str
        The serialized report.
    """
    fmt = OutputFormat(fmt)
    if fmt is OutputFormat.json:
        text = to_json(report)
    else:
        text = to_markdown(report)
    if path is None:
        return text
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(text)
    logger.info('wrote %s report to %s', fmt.value, path)
    for name, edges in sorted(report.graphs.items()):
        graph_path = _graph_path(path, name)
        with open(graph_path, 'w', encoding='utf-8', newline='\n') as f:
            f.writelines(edge + '\n' for edge in edges)
        logger.info('wrote %d edges to %s', len(edges), graph_path)
    return text

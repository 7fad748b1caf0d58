import itertools
import json
import os

from twinlab.coxeter import INFINITY, load_system, validate_system

SYSTEMS_DIR = os.path.join(
    os.path.dirname(os.path.dirname(os.path.dirname(
        os.path.abspath(__file__)))),
    'twinlab', 'systems')

SHIPPED = (
    'infinite_dihedral',
    'rank3_one_infinity',
    'rank3_two_infinity',
    'rank3_all_infinity',
    'a3',
    'star_condition_a',
)

RANK3_LABELS = (2, 3, INFINITY)


def system_path(name):
    return os.path.join(SYSTEMS_DIR, name + '.json')


def shipped(name):
    return load_system(system_path(name))


def rank3(m_st, m_su, m_tu):
    return validate_system(
        [[1, m_st, m_su], [m_st, 1, m_tu], [m_su, m_tu, 1]],
        names=['s', 't', 'u'])


def rank3_families():
    """
    The ten rank-3 systems with labels in {2, 3, ∞}, one per multiset of
    labels.
    """
    return [
        rank3(*labels)
        for labels in itertools.combinations_with_replacement(
            RANK3_LABELS, 3)
    ]


def family_id(system):
    return '-'.join(
        'inf' if system.m(s, t) == INFINITY else str(system.m(s, t))
        for s, t in ((0, 1), (0, 2), (1, 2)))


def write_system(directory, matrix, names=None):
    """Write a system file with 0 for ∞ and return its path."""
    rows = [[0 if m == INFINITY else m for m in row] for row in matrix]
    data = {'rank': len(rows), 'm': rows}
    if names is not None:
        data['names'] = list(names)
    path = os.path.join(str(directory), 'system.json')
    with open(path, 'w') as f:
        json.dump(data, f)
    return path

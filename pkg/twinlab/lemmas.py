"""
Outcome records for the verifiers.

Each verifier returns a :class:`LemmaReport` that names the statement it
checks. The statement strings in :data:`STATEMENTS` are embedded verbatim
in every report.
"""
import enum


class Status(enum.Enum):
    passed = 'pass'
    failed = 'fail'
    skipped = 'skipped'


STATEMENTS = {
    'classification':
        '$S = J\\sqcup K$, $|K|\\geq 2$ / '
        '$S = \\coprod_{i=1}^n J_i$',
    'word_problem':
        'A word is reduced if and only if it is M-reduced',
    'tilde_factorization':
        'any reduced decomposition of $w$ is of the form '
        '$\\tilde{w}_1\\cdots\\tilde{w}_m$',
    'sphere_product':
        '$q_{min}^{\\ell(w)}\\leq |\\mathcal{C}_w(C)| = '
        'q_{i_1}\\cdots q_{i_{\\ell}}\\leq q_{max}^{\\ell(w)}$',
    'residue_size':
        '$[P_J:B_{\\pm}]<\\infty$ if and only if $|W_J|<\\infty$',
    'building_axioms':
        'the number of chambers containing $\\mathcal{P}$ is '
        '$|\\mathcal{C}(\\mathcal{P})| = q_i + 1$',
    'spherical_types':
        'Suppose that $\\Delta_{\\pm}$ admits a $Z$-realization such that',
    'tree':
        '$Z(\\Delta)$ is a tree',
    'panel_structure':
        '$\\delta(C,D)\\in W_J$ if and only if $Z(C) = Z(D)$ / '
        '$[C,z] = [D,z]$ if and only if $C=D$',
    'residue_collapse':
        'exactly one copy of $Z$ for each $J$-residue in $\\Delta$',
    'cellular_action':
        'if an element $g\\in G$ stabilizes a cell, then it also fixes the '
        'cell pointwise',
    'amalgam':
        '$G = G_v *_{G_e} G_w$',
    'davis_dimension':
        'the geometric realization of the flag complex on the set '
        '$\\mathcal{S}$ of spherical subsets',
    'intersection_order':
        '$|T|q_{min}^{\\ell(w)}\\leq |B_+\\cap wB_-w^{-1}|\\leq '
        '|T|q_{max}^{\\ell(w)}$',
    'negative_orbit':
        '$[B_+\\cap wB_-w^{-1}: T] = |\\mathcal{C}_{w^{-1}}(wC_-)|$',
    'negative_stabilizer':
        'the stabilizer of $C_-$ in $B_+\\cap wB_-w^{-1}$ is just $T$',
    'unbounded_orders':
        'finite subgroups of unbounded order',
    'parabolic_index':
        '$[P_I\\cap wP_Jw^{-1}: B_+\\cap wB_-w^{-1}]<\\infty$',
    'birkhoff_type':
        '$(gC, gC\') = (C_+, wC_-)$, where $w = \\delta^*(C,C\')$',
}


class LemmaReport(object):
    """
    Result of one verifier run.

    Parameters
    ----------
    name: str
        Key into :data:`STATEMENTS`.
    status: Status
    counts: dict, optional
        What was enumerated, e.g. ``{'pairs': 400}``.
    witness: optional
        JSON-serializable counterexample or skip reason.
    """

    def __init__(self, name, status, counts=None, witness=None):
        if name not in STATEMENTS:
            raise KeyError('no statement registered for {0!r}'.format(name))
        self.name = name
        self.status = Status(status)
        self.counts = dict(counts or {})
        self.witness = witness

    def __repr__(self):
        return 'LemmaReport({0!r}, {1})'.format(self.name, self.status.value)

    @classmethod
    def success(cls, name, **counts):
        return cls(name, Status.passed, counts)

    @classmethod
    def failure(cls, name, witness, **counts):
        return cls(name, Status.failed, counts, witness)

    @classmethod
    def skipped(cls, name, reason):
        return cls(name, Status.skipped, witness=reason)

    @property
    def statement(self):
        return STATEMENTS[self.name]

    @property
    def passed(self):
        return self.status is Status.passed

    @property
    def failed(self):
        return self.status is Status.failed

    def as_dict(self):
        return {
            'name': self.name,
            'statement': self.statement,
            'status': self.status.value,
            'counts': dict(sorted(self.counts.items())),
            'witness': self.witness,
        }

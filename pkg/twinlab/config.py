"""
Hard limits and pipeline settings.

Every enumeration in twinlab is bounded by one of the caps below. Setting
the environment variable ``TWINLAB_CAP_OVERRIDE`` to a positive integer
``k`` multiplies every numeric cap by ``k``; results past the default caps
are at your own risk.
"""
import enum
import functools
import os
import warnings

from .errors import CapExceededError, ConfigurationError

CAP_OVERRIDE_ENV = 'TWINLAB_CAP_OVERRIDE'

MAX_BALL_RADIUS = 12
MAX_BALL_SIZE = 10 ** 6
MAX_DAVIS_RANK = 6
MAX_WORD_LENGTH = 16
MAX_FLAG_DIMENSION = 3
MAX_TWIN_CANDIDATES = 2 * 10 ** 6
MAX_WORD_CHECKS = 10 ** 5

# Twin-model caps on the length of w, per field order.
TWIN_LENGTH_CAPS = {2: 4, 3: 3, 4: 2, 5: 2}

FIELD_ORDERS = (2, 3, 4, 5)


def cap_multiplier():
    raw = os.environ.get(CAP_OVERRIDE_ENV)
    if raw is None or not raw.strip():
        return 1
    return _parse_override(raw)


@functools.lru_cache(maxsize=None)
def _parse_override(raw):
    try:
        multiplier = int(raw)
    except ValueError:
        raise ConfigurationError(
            '{0} must be a positive integer, got {1!r}'.format(
                CAP_OVERRIDE_ENV, raw))
    if multiplier < 1:
        raise ConfigurationError(
            '{0} must be a positive integer, got {1!r}'.format(
                CAP_OVERRIDE_ENV, raw))
    if multiplier > 1:
        warnings.warn(
            '{0}={1} raises every hard cap; results beyond the default caps '
            'are at your own risk'.format(CAP_OVERRIDE_ENV, multiplier),
            RuntimeWarning,
        )
    return multiplier


def max_ball_radius():
    return MAX_BALL_RADIUS * cap_multiplier()


def max_ball_size():
    return MAX_BALL_SIZE * cap_multiplier()


def max_davis_rank():
    return MAX_DAVIS_RANK * cap_multiplier()


def max_word_length():
    return MAX_WORD_LENGTH * cap_multiplier()


def max_flag_dimension():
    return MAX_FLAG_DIMENSION * cap_multiplier()


def max_twin_candidates():
    return MAX_TWIN_CANDIDATES * cap_multiplier()


def max_word_checks():
    return MAX_WORD_CHECKS * cap_multiplier()


def twin_length_cap(q):
    if q not in TWIN_LENGTH_CAPS:
        raise ConfigurationError(
            'q = {0} is not supported; expected one of {1}'.format(
                q, ', '.join(str(x) for x in FIELD_ORDERS)))
    return TWIN_LENGTH_CAPS[q] * cap_multiplier()


def check_cap(what, value, limit):
    if value > limit:
        raise CapExceededError(what, limit, value)
    return value


class OutputFormat(enum.Enum):
    json = 'json'
    markdown = 'markdown'


class TwinMode(enum.Enum):
    auto = 'auto'
    always = 'always'
    never = 'never'


def _check_enum(Enum, val, field):
    if isinstance(val, Enum):
        return val
    try:
        return Enum(val)
    except ValueError:
        raise ConfigurationError(
            '{0} must be one of {1}, got {2!r}'.format(
                field, ', '.join(e.value for e in Enum), val))


class PipelineConfig(object):
    """
    Settings for :func:`twinlab.pipeline.run_pipeline`.

    Parameters
    ----------
    input_path: str
        Coxeter system file.
    radius: int, optional
        Radius of the thin balls that get realized. Defaults to 6.
    max_len: int, optional
        Word length cap for the factorization checks. Defaults to 8.
    twin_q: iterable of int, optional
        Field orders for the twin-model and flag-building suites.
        Defaults to ``[2, 3]``.
    twin_caps: dict, optional
        Per-q caps on the length of ``w`` in the twin model. Defaults to
        ``TWIN_LENGTH_CAPS``.
    output_format: str or OutputFormat, optional
        ``json`` (default) or ``markdown``.
    export_graphs: bool, optional
        Write the realized graphs as edge lists next to the report.
    twin: str or TwinMode, optional
        ``auto`` runs the twin suite on rank-2 systems with an infinite
        label; ``always`` and ``never`` force it on or off.
    action_length: int, optional
        Maximal length of the group elements used in the cellular action
        check. Defaults to 3.
    """

    def __init__(self, input_path, radius=6, max_len=8, twin_q=(2, 3),
                 twin_caps=None, output_format='json', export_graphs=False,
                 twin='auto', action_length=3):
        self.input_path = input_path
        self.radius = radius
        self.max_len = max_len
        self.twin_q = tuple(sorted(set(twin_q)))
        self.twin_caps = dict(TWIN_LENGTH_CAPS if twin_caps is None
                              else twin_caps)
        self.output_format = _check_enum(
            OutputFormat, output_format, 'output_format')
        self.export_graphs = bool(export_graphs)
        self.twin = _check_enum(TwinMode, twin, 'twin')
        self.action_length = action_length
        self.validate()

    def validate(self):
        for field in ('radius', 'max_len', 'action_length'):
            value = getattr(self, field)
            if isinstance(value, bool) or not isinstance(value, int) or \
                    value < 0:
                raise ConfigurationError(
                    '{0} must be a non-negative integer'.format(field))
        limits = (
            ('radius', self.radius, max_ball_radius()),
            ('max_len', self.max_len, max_word_length()),
            ('action_length', self.action_length, max_ball_radius()),
        )
        for field, value, limit in limits:
            if value > limit:
                raise ConfigurationError(
                    '{0} = {1} exceeds the hard limit {2}'.format(
                        field, value, limit))
        for q in self.twin_q:
            if q not in FIELD_ORDERS:
                raise ConfigurationError(
                    'twin q = {0} is not supported; expected one of '
                    '{1}'.format(q, ', '.join(str(x) for x in FIELD_ORDERS)))
            cap = self.twin_caps.get(q, TWIN_LENGTH_CAPS[q])
            if cap > twin_length_cap(q):
                raise ConfigurationError(
                    'twin length cap {0} for q = {1} exceeds the hard limit '
                    '{2}'.format(cap, q, twin_length_cap(q)))
            self.twin_caps[q] = cap
        return self

    def twin_cap(self, q):
        return self.twin_caps.get(q, TWIN_LENGTH_CAPS[q])
